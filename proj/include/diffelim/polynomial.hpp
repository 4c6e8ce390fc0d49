#pragma once

#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "diffelim/monomial.hpp"
#include "diffelim/scalar.hpp"
#include "diffelim/var_registry.hpp"

namespace diffelim {

/// Degree reported for the zero polynomial.
inline constexpr std::int64_t kDegreeOfZero = std::numeric_limits<std::int64_t>::min();

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted by canonical_compare (descending) with no zero
/// coefficients, so equality is structural. A polynomial without a registry
/// is a constant and combines with polynomials of any registry; two
/// polynomials with distinct registries cannot be combined.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::shared_ptr<VarRegistry> reg) : reg_(std::move(reg)) {}
  Polynomial(std::shared_ptr<VarRegistry> reg, std::vector<Term> terms);

  static Polynomial constant(std::shared_ptr<VarRegistry> reg, const Rational& c);
  static Polynomial variable(std::shared_ptr<VarRegistry> reg, VarIndex v, Exponent e = 1);
  static Polynomial monomial(std::shared_ptr<VarRegistry> reg, const Monomial& m, const Rational& c);

  const std::shared_ptr<VarRegistry>& registry() const { return reg_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  std::int64_t total_degree() const;
  /// Maximum over terms of the degree restricted to vars.
  std::int64_t degree_in(std::span<const VarIndex> vars) const;
  /// Variables occurring with positive exponent, increasing.
  std::vector<VarIndex> variables() const;
  bool uses_only(std::span<const VarIndex> vars) const;

  /// (monomial, coefficient) of the ord-maximal term. Throws on zero.
  std::pair<Monomial, Rational> leading_term(const MonomialOrder& ord) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& q) const;
  Polynomial operator-(const Polynomial& q) const;
  Polynomial operator*(const Polynomial& q) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
  Polynomial& operator-=(const Polynomial& q) { return *this = *this - q; }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }
  Polynomial pow(unsigned e) const;
  Polynomial mul_monomial(const Monomial& m, const Rational& c) const;
  bool operator==(const Polynomial& q) const;

  Polynomial partial(VarIndex v) const;
  /// Replaces the given variables by rational values.
  Polynomial substitute(const std::map<VarIndex, Rational>& values) const;
  /// Replaces each variable by a polynomial (variables missing from the map stay).
  Polynomial compose(const std::map<VarIndex, Polynomial>& images) const;

  /// gcd of numerators over lcm of denominators, sign of the leading canonical term.
  Rational content() const;
  /// Integer polynomial with coprime coefficients, positive canonical-leading coefficient.
  Polynomial primitive_part() const;
  /// True if q == c * this for some nonzero rational c.
  bool proportional_to(const Polynomial& q) const;

  std::string to_string() const;

 private:
  static Polynomial combine(std::shared_ptr<VarRegistry> reg, std::vector<Term> terms);
  std::shared_ptr<VarRegistry> merged_registry(const Polynomial& q) const;

  std::shared_ptr<VarRegistry> reg_;
  std::vector<Term> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

}  // namespace diffelim
