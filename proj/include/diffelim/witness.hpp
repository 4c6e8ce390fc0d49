#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diffelim/diff_system.hpp"
#include "diffelim/groebner.hpp"
#include "diffelim/polynomial.hpp"
#include "diffelim/scalar.hpp"

namespace diffelim {

/// Power series known modulo t^size(): coefficients of t^0 .. t^(size()-1).
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

  static TruncatedSeries constant(const Rational& c, std::size_t length);
  /// t^i e^(j t) modulo t^length.
  static TruncatedSeries t_pow_exp(unsigned i, unsigned j, std::size_t length);

  std::size_t size() const { return c_.size(); }
  const Rational& operator[](std::size_t k) const { return c_[k]; }
  const std::vector<Rational>& coefficients() const { return c_; }

  /// Results are known to the shorter of the two operands.
  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const Rational& s) const;
  TruncatedSeries pow(unsigned e) const;
  /// d/dt; the result is one coefficient shorter.
  TruncatedSeries derivative() const;

  /// Index of the first nonzero coefficient, nullopt when all known ones vanish.
  std::optional<std::size_t> valuation() const;

 private:
  std::vector<Rational> c_;
};

using RationalMatrix = std::vector<std::vector<Rational>>;  // row-major

/// (B+1) x (B+1) matrix with B = d(d+3)/2 whose column for (i, j) holds the
/// coefficients of t^i e^(j t) up to t^B. Columns run over s = i + j
/// ascending, i descending within each s; see witness_exponents.
RationalMatrix basis_matrix(unsigned d, unsigned B);
std::vector<std::pair<unsigned, unsigned>> witness_exponents(unsigned d);

/// Exact determinant by fraction elimination.
Rational determinant(RationalMatrix M);
/// Solves M x = rhs exactly; throws InternalConsistencyError when M is singular.
std::vector<Rational> solve_linear(RationalMatrix M, std::vector<Rational> rhs);

struct Witness {
  unsigned d = 0;
  unsigned B = 0;
  Polynomial P;                      // over x, y of `system`
  DiffSystem system;                 // x' - 1, y' - y, P
  std::vector<Rational> mu;          // solution in witness_exponents order
  Rational scale;                    // P = scale * sum mu_ij x^i y^j
  std::vector<Rational> substituted; // P(t, e^t) coefficients up to t^B
  std::optional<bool> irreducible;   // decided for d <= 2 only
  std::string irreducibility_method;
};

/// P with P(t, e^t) = c t^B + O(t^(B+1)), c != 0, primitive over the integers
/// with negative leading coefficient under lex(x > y).
Witness solve_witness(unsigned d);
Polynomial witness_polynomial(unsigned d);

/// The system x' - 1 = y' - y = P(x, y) = 0 over eliminate variables x, y.
DiffSystem witness_system(const Polynomial& P);

/// Substitutes series[name]^(j) for each name^(j). Throws PreconditionError
/// on a variable without a series.
TruncatedSeries substitute_series(const Polynomial& p, const std::map<std::string, TruncatedSeries>& series);

struct SeriesCertificate {
  bool holds = false;
  unsigned N = 0;
  /// One entry per equation: lowest nonzero order of the composed series
  /// (nullopt when it vanishes to every known order) and the known length.
  struct Row {
    std::string equation;
    std::optional<std::size_t> valuation;
    std::size_t known = 0;
  };
  std::vector<Row> rows;
};

/// True iff every equation of S composed with the series vanishes to order N,
/// which certifies 1 not in the ideal prolonged N - 1 times. Throws
/// PreconditionError when a composed series is known to fewer than N terms.
SeriesCertificate certify_nonmembership(const DiffSystem& S, const std::map<std::string, TruncatedSeries>& series,
                                        unsigned N);

struct InconsistencySearch {
  std::optional<int> depth;  // least N with 1 in prolong(S, N); nullopt: not found
  int searched = -1;         // last depth fully decided
  bool cutoff = false;       // a resource limit stopped the search
  std::string reason;
};

InconsistencySearch minimal_inconsistency_depth(const DiffSystem& S, int max_depth,
                                                const GroebnerOptions& opts = {});

}  // namespace diffelim
