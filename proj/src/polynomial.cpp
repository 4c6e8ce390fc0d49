#include "diffelim/polynomial.hpp"

#include <algorithm>

#include "diffelim/error.hpp"

namespace diffelim {

namespace {
bool term_desc(const Term& a, const Term& b) { return canonical_compare(a.mono, b.mono) > 0; }
}  // namespace

Polynomial::Polynomial(std::shared_ptr<VarRegistry> reg, std::vector<Term> terms)
    : Polynomial(combine(std::move(reg), std::move(terms))) {}

Polynomial Polynomial::combine(std::shared_ptr<VarRegistry> reg, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_desc);
  Polynomial out(std::move(reg));
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff += t.coeff;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
  return out;
}

Polynomial Polynomial::constant(std::shared_ptr<VarRegistry> reg, const Rational& c) {
  return monomial(std::move(reg), Monomial{}, c);
}

Polynomial Polynomial::variable(std::shared_ptr<VarRegistry> reg, VarIndex v, Exponent e) {
  return monomial(std::move(reg), Monomial::variable(v, e), 1);
}

Polynomial Polynomial::monomial(std::shared_ptr<VarRegistry> reg, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(reg));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

std::shared_ptr<VarRegistry> Polynomial::merged_registry(const Polynomial& q) const {
  if (reg_ && q.reg_ && reg_ != q.reg_) throw RegistryMismatch();
  return reg_ ? reg_ : q.reg_;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return canonical_compare(t.mono, x) > 0; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

std::int64_t Polynomial::total_degree() const {
  if (terms_.empty()) return kDegreeOfZero;
  return static_cast<std::int64_t>(terms_.front().mono.degree());
}

std::int64_t Polynomial::degree_in(std::span<const VarIndex> vars) const {
  if (terms_.empty()) return kDegreeOfZero;
  std::int64_t d = 0;
  for (const auto& t : terms_) d = std::max<std::int64_t>(d, static_cast<std::int64_t>(t.mono.degree_in(vars)));
  return d;
}

std::vector<VarIndex> Polynomial::variables() const {
  std::vector<bool> seen;
  for (const auto& t : terms_) {
    if (t.mono.width() > seen.size()) seen.resize(t.mono.width(), false);
    for (std::size_t i = 0; i < t.mono.width(); ++i)
      if (t.mono.exponent(static_cast<VarIndex>(i))) seen[i] = true;
  }
  std::vector<VarIndex> out;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) out.push_back(static_cast<VarIndex>(i));
  return out;
}

bool Polynomial::uses_only(std::span<const VarIndex> vars) const {
  for (VarIndex v : variables())
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) return false;
  return true;
}

std::pair<Monomial, Rational> Polynomial::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (ord.compare(t.mono, best->mono) > 0) best = &t;
  return {best->mono, best->coeff};
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
  Polynomial out(merged_registry(q));
  out.terms_.reserve(terms_.size() + q.terms_.size());
  auto a = terms_.begin(), b = q.terms_.begin();
  while (a != terms_.end() || b != q.terms_.end()) {
    if (b == q.terms_.end() || (a != terms_.end() && canonical_compare(a->mono, b->mono) > 0)) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || canonical_compare(a->mono, b->mono) < 0) {
      out.terms_.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) out.terms_.push_back({a->mono, c});
      ++a;
      ++b;
    }
  }
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& q) const { return *this + (-q); }

Polynomial Polynomial::operator*(const Polynomial& q) const {
  auto reg = merged_registry(q);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * q.terms_.size());
  for (const auto& s : terms_)
    for (const auto& t : q.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return combine(std::move(reg), std::move(prod));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(reg_);
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial acc = constant(reg_, 1), base = *this;
  while (e) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

Polynomial Polynomial::mul_monomial(const Monomial& m, const Rational& c) const {
  if (c == 0) return Polynomial(reg_);
  Polynomial out(reg_);
  out.terms_.reserve(terms_.size());
  // multiplication by a monomial preserves canonical (graded) order
  for (const auto& t : terms_) out.terms_.push_back({t.mono * m, t.coeff * c});
  return out;
}

bool Polynomial::operator==(const Polynomial& q) const {
  if (terms_.size() != q.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == q.terms_[i].mono) || terms_[i].coeff != q.terms_[i].coeff) return false;
  return true;
}

Polynomial Polynomial::partial(VarIndex v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Exponent e = t.mono.exponent(v);
    if (e == 0) continue;
    out.push_back({t.mono.quotient(Monomial::variable(v)), t.coeff * e});
  }
  return combine(reg_, std::move(out));
}

Polynomial Polynomial::substitute(const std::map<VarIndex, Rational>& values) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    std::vector<Exponent> exps = t.mono.exponents();
    for (std::size_t i = 0; i < exps.size() && c != 0; ++i) {
      if (!exps[i]) continue;
      auto it = values.find(static_cast<VarIndex>(i));
      if (it == values.end()) continue;
      Rational f;
      mpz_pow_ui(f.get_num_mpz_t(), it->second.get_num_mpz_t(), exps[i]);
      mpz_pow_ui(f.get_den_mpz_t(), it->second.get_den_mpz_t(), exps[i]);
      c *= f;
      exps[i] = 0;
    }
    if (c != 0) out.push_back({Monomial::from_exponents(std::move(exps)), c});
  }
  return combine(reg_, std::move(out));
}

Polynomial Polynomial::compose(const std::map<VarIndex, Polynomial>& images) const {
  Polynomial out(reg_);
  for (const auto& t : terms_) {
    Polynomial term = constant(reg_, t.coeff);
    std::vector<std::pair<VarIndex, Exponent>> kept;
    for (auto [v, e] : t.mono.support()) {
      if (auto it = images.find(v); it != images.end())
        term *= it->second.pow(e);
      else
        kept.emplace_back(v, e);
    }
    out += term.mul_monomial(Monomial::from_pairs(kept), 1);
  }
  return out;
}

Rational Polynomial::content() const {
  if (terms_.empty()) return 0;
  Integer g = 0, l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(g, l);
  c.canonicalize();
  if (terms_.front().coeff < 0) c = -c;
  return c;
}

Polynomial Polynomial::primitive_part() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  return *this * Rational(1 / c);
}

bool Polynomial::proportional_to(const Polynomial& q) const {
  if (is_zero() || q.is_zero()) return false;
  if (terms_.size() != q.terms_.size()) return false;
  return primitive_part() == q.primitive_part();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (i == 0)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (t.mono.is_one()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      if (!reg_) throw InternalConsistencyError("non-constant polynomial without registry");
      out += t.mono.to_string(*reg_);
    }
  }
  return out;
}

}  // namespace diffelim
