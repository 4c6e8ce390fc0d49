#include "diffelim/scalar.hpp"

#include <cctype>

#include "diffelim/error.hpp"

namespace diffelim {

namespace {
thread_local std::uint64_t g_modulus = ModP::kDefaultPrime;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw PreconditionError("empty number");
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") throw PreconditionError("bad decimal: " + s);
    for (std::size_t i = (digits[0] == '-' || digits[0] == '+') ? 1 : 0; i < digits.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(digits[i]))) throw PreconditionError("bad decimal: " + s);
    if (digits[0] == '+') digits.erase(0, 1);
    Integer num(digits, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw PreconditionError("bad rational: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::size_t bit_length(const Integer& z) {
  return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

ModP::Scope::Scope(std::uint64_t prime) : saved_(g_modulus) {
  if (!is_valid_prime(prime)) throw PreconditionError("modulus must be an odd prime below 2^62");
  g_modulus = prime;
}

ModP::Scope::~Scope() { g_modulus = saved_; }

std::uint64_t ModP::modulus() { return g_modulus; }

bool ModP::is_valid_prime(std::uint64_t p) {
  if (p < 3 || p >= (1ULL << 62) || p % 2 == 0) return false;
  Integer z(std::to_string(p), 10);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

ModP::ModP(std::int64_t v) {
  auto p = static_cast<std::int64_t>(g_modulus);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  v_ = static_cast<std::uint64_t>(r);
}

ModP ModP::from_integer(const Integer& z) {
  static_assert(sizeof(unsigned long) == 8);
  ModP out;
  out.v_ = mpz_fdiv_ui(z.get_mpz_t(), g_modulus);
  return out;
}

ModP ModP::from_rational(const Rational& q) {
  ModP den = from_integer(q.get_den());
  if (den.is_zero()) throw PreconditionError("denominator vanishes modulo the active prime");
  return from_integer(q.get_num()) / den;
}

ModP ModP::operator+(ModP o) const {
  ModP r;
  std::uint64_t s = v_ + o.v_;
  r.v_ = s >= g_modulus ? s - g_modulus : s;
  return r;
}

ModP ModP::operator-(ModP o) const {
  ModP r;
  r.v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + g_modulus - o.v_;
  return r;
}

ModP ModP::operator-() const {
  ModP r;
  r.v_ = v_ == 0 ? 0 : g_modulus - v_;
  return r;
}

ModP ModP::operator*(ModP o) const {
  ModP r;
  r.v_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % g_modulus);
  return r;
}

ModP ModP::inverse() const {
  if (v_ == 0) throw PreconditionError("inverse of zero in GF(p)");
  // Fermat: v^(p-2)
  ModP base = *this, acc(1);
  std::uint64_t e = g_modulus - 2;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace diffelim
