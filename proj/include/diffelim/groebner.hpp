#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "diffelim/monomial.hpp"
#include "diffelim/polynomial.hpp"
#include "diffelim/scalar.hpp"

namespace diffelim {

/// Cutoffs for one Gröbner computation; zero means unlimited. Exceeding any of
/// them raises ResourceLimitExceeded.
struct ResourceLimits {
  std::size_t max_pairs = 0;
  std::size_t max_coeff_bits = 0;
  double timeout_seconds = 0;
};

enum class CoefficientField { Rationals, PrimeField };

struct GroebnerOptions {
  CoefficientField field = CoefficientField::Rationals;
  std::uint64_t prime = ModP::kDefaultPrime;
  ResourceLimits limits;
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t pairs_skipped = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_size = 0;
  std::size_t max_coeff_bits = 0;
};

/// Reduced Gröbner basis with respect to a fixed monomial order.
///
/// Over the rationals each element is primitive with integer coefficients and
/// positive leading coefficient. Over GF(p) elements are monic and their
/// coefficients are the representatives in [0, p).
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(std::shared_ptr<VarRegistry> reg, MonomialOrder ord, std::vector<Polynomial> elems,
                std::optional<std::uint64_t> prime, GroebnerStats stats);

  const std::vector<Polynomial>& elements() const { return elems_; }
  const MonomialOrder& order() const { return ord_; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }
  const std::shared_ptr<VarRegistry>& registry() const { return reg_; }
  /// True when the basis is {1}.
  bool is_unit() const;
  bool is_zero_ideal() const { return elems_.empty(); }
  std::optional<std::uint64_t> modulus() const { return prime_; }
  const GroebnerStats& stats() const { return stats_; }

 private:
  std::shared_ptr<VarRegistry> reg_;
  MonomialOrder ord_;
  std::vector<Polynomial> elems_;
  std::vector<Monomial> leads_;
  std::optional<std::uint64_t> prime_;
  GroebnerStats stats_;
};

/// Reduced basis of the ideal generated by gens. Every variable of gens must
/// belong to ord. The output is sorted by increasing leading monomial.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& ord,
                         const GroebnerOptions& opts = {});

/// Normal form of f modulo G (exact over Q; representatives mod p for GF(p)).
Polynomial reduce(const Polynomial& f, const GroebnerBasis& G);

/// S-polynomial of f and g over Q, scaled so both leading terms are monic.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

/// Grevlex over the variables occurring in gens (by registry index).
MonomialOrder grevlex_for(std::span<const Polynomial> gens);

bool contains_one(std::span<const Polynomial> gens, const GroebnerOptions& opts = {});

/// Basis under the block order (other variables) >> (keep_vars), grevlex in
/// each block.
GroebnerBasis elimination_basis(std::span<const Polynomial> gens, std::span<const VarIndex> keep_vars,
                                const GroebnerOptions& opts = {});

/// Elements of the elimination basis lying in k[keep_vars]; these generate
/// the elimination ideal.
std::vector<Polynomial> elimination_ideal(std::span<const Polynomial> gens, std::span<const VarIndex> keep_vars,
                                          const GroebnerOptions& opts = {});

/// Hilbert series N(t) / (1-t)^n of k[x_0..x_{n-1}] / (monomial ideal).
struct HilbertSeries {
  std::size_t nvars = 0;
  std::vector<Integer> numerator;  // coefficient of t^k at index k

  /// Krull dimension of the quotient; -1 for the unit ideal.
  int dimension() const;
  /// Multiplicity of the top-dimensional part (0 for the unit ideal).
  Integer degree() const;
  /// Number of standard monomials of total degree k.
  Integer count_in_degree(std::size_t k) const;
};

/// Monomials are read over positions 0..nvars-1 (registry indices are used
/// as positions). Throws PreconditionError on a monomial outside that range.
HilbertSeries hilbert_series_monomial(std::span<const Monomial> gens, std::size_t nvars);

/// Hilbert series of the leading-term ideal of G in the variables of G's order.
HilbertSeries hilbert_series(const GroebnerBasis& G);

/// Largest number of order variables independent modulo the leading-term
/// ideal. Throws PreconditionError for the unit ideal and when the order has
/// more than kMaxDimensionVars variables.
inline constexpr std::size_t kMaxDimensionVars = 64;
int dimension(const GroebnerBasis& G);

/// Degree of the top-dimensional part counted with multiplicity. Requires a
/// degree-compatible order (a single grevlex block). Equals the geometric
/// degree for radical equidimensional ideals, and bounds it from above
/// otherwise.
Integer degree_top(const GroebnerBasis& G);

/// Minimal polynomial of variable v modulo a zero-dimensional ideal over Q,
/// primitive with positive leading coefficient.
Polynomial minimal_polynomial(const GroebnerBasis& G, VarIndex v);

/// Radicality of a zero-dimensional ideal over Q: every coordinate's minimal
/// polynomial is squarefree. Throws PreconditionError if G is not
/// zero-dimensional.
bool is_radical_zero_dimensional(const GroebnerBasis& G);

/// Univariate helpers over Q for polynomials in a single variable v.
Polynomial univariate_gcd(const Polynomial& f, const Polynomial& g, VarIndex v);
bool is_squarefree_univariate(const Polynomial& f, VarIndex v);

}  // namespace diffelim
