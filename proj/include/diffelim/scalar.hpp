#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace diffelim {

/// Exact rationals are GMP rationals; mpq_class keeps them canonical
/// (lowest terms, positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "3", "-7/4" or a decimal such as "0.99" into an exact rational.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

std::size_t bit_length(const Integer& z);

/// Element of GF(p) for an odd prime p < 2^62.
///
/// The modulus is thread-local state installed with ModP::Scope, in the same
/// spirit as NTL's zz_p::init: all arithmetic between two ModP values uses the
/// modulus active on the calling thread.
class ModP {
 public:
  static constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;  // 2^61 - 1

  class Scope {
   public:
    explicit Scope(std::uint64_t prime);
    ~Scope();
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    std::uint64_t saved_;
  };

  static std::uint64_t modulus();
  static bool is_valid_prime(std::uint64_t p);

  ModP() = default;
  explicit ModP(std::int64_t v);
  /// Reduces a rational; throws PreconditionError when the denominator
  /// vanishes modulo the active prime.
  static ModP from_rational(const Rational& q);
  static ModP from_integer(const Integer& z);

  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  ModP operator+(ModP o) const;
  ModP operator-(ModP o) const;
  ModP operator-() const;
  ModP operator*(ModP o) const;
  ModP inverse() const;
  ModP operator/(ModP o) const { return *this * o.inverse(); }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  bool operator==(const ModP&) const = default;

 private:
  std::uint64_t v_ = 0;
};

}  // namespace diffelim
