#include "diffelim/witness.hpp"

#include <algorithm>

#include "diffelim/bounds.hpp"
#include "diffelim/error.hpp"
#include "diffelim/system_file.hpp"

namespace diffelim {

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t length) {
  std::vector<Rational> v(length);
  if (length) v[0] = c;
  return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::t_pow_exp(unsigned i, unsigned j, std::size_t length) {
  std::vector<Rational> v(length);
  Rational term = 1;  // j^(k-i) / (k-i)!
  for (std::size_t k = i; k < length; ++k) {
    v[k] = term;
    term = term * j / static_cast<unsigned long>(k - i + 1);
  }
  return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  std::size_t n = std::min(size(), o.size());
  std::vector<Rational> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = c_[k] + o.c_[k];
  return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const { return *this + o * Rational(-1); }

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  std::size_t n = std::min(size(), o.size());
  std::vector<Rational> v(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (c_[a] == 0) continue;
    for (std::size_t b = 0; a + b < n; ++b)
      if (o.c_[b] != 0) v[a + b] += c_[a] * o.c_[b];
  }
  return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::operator*(const Rational& s) const {
  std::vector<Rational> v(c_);
  for (auto& c : v) c *= s;
  return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
  TruncatedSeries out = constant(1, size());
  for (unsigned k = 0; k < e; ++k) out = out * *this;
  return out;
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (c_.empty()) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t k = 0; k + 1 < c_.size(); ++k) v[k] = c_[k + 1] * static_cast<unsigned long>(k + 1);
  return TruncatedSeries(std::move(v));
}

std::optional<std::size_t> TruncatedSeries::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return k;
  return std::nullopt;
}

std::vector<std::pair<unsigned, unsigned>> witness_exponents(unsigned d) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned s = 0; s <= d; ++s)
    for (unsigned i = s + 1; i-- > 0;) out.emplace_back(i, s - i);
  return out;
}

RationalMatrix basis_matrix(unsigned d, unsigned B) {
  if (Integer(B) != lower_bound_order(d))
    throw PreconditionError("basis_matrix: B must equal d(d+3)/2 = " + lower_bound_order(d).get_str());
  auto cols = witness_exponents(d);
  RationalMatrix M(B + 1, std::vector<Rational>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    auto f = TruncatedSeries::t_pow_exp(cols[c].first, cols[c].second, B + 1);
    for (unsigned k = 0; k <= B; ++k) M[k][c] = f[k];
  }
  return M;
}

namespace {

// Row echelon form in place; returns the determinant factor (0 if singular).
Rational eliminate_rows(RationalMatrix& M, std::vector<Rational>* rhs) {
  const std::size_t n = M.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && M[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(M[p], M[c]);
      if (rhs) std::swap((*rhs)[p], (*rhs)[c]);
      det = -det;
    }
    det *= M[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (M[r][c] == 0) continue;
      Rational f = M[r][c] / M[c][c];
      for (std::size_t k = c; k < n; ++k) M[r][k] -= f * M[c][k];
      if (rhs) (*rhs)[r] -= f * (*rhs)[c];
    }
  }
  return det;
}

void require_square(const RationalMatrix& M) {
  for (const auto& row : M)
    if (row.size() != M.size()) throw PreconditionError("matrix is not square");
}

}  // namespace

Rational determinant(RationalMatrix M) {
  require_square(M);
  return eliminate_rows(M, nullptr);
}

std::vector<Rational> solve_linear(RationalMatrix M, std::vector<Rational> rhs) {
  require_square(M);
  if (rhs.size() != M.size()) throw PreconditionError("right-hand side has the wrong length");
  if (eliminate_rows(M, &rhs) == 0) throw InternalConsistencyError("singular linear system");
  const std::size_t n = M.size();
  std::vector<Rational> x(n);
  for (std::size_t r = n; r-- > 0;) {
    Rational s = rhs[r];
    for (std::size_t k = r + 1; k < n; ++k) s -= M[r][k] * x[k];
    x[r] = s / M[r][r];
  }
  return x;
}

namespace {

// Conic a x^2 + b xy + c y^2 + d x + e y + f factors over C iff the
// symmetric 3x3 matrix of the quadratic form is singular.
bool conic_irreducible(const Polynomial& P, VarIndex x, VarIndex y) {
  auto co = [&](Exponent i, Exponent j) {
    return P.coefficient(Monomial::from_pairs(std::vector<std::pair<VarIndex, Exponent>>{{x, i}, {y, j}}));
  };
  Rational half(1, 2);
  RationalMatrix Q{{co(2, 0), co(1, 1) * half, co(1, 0) * half},
                   {co(1, 1) * half, co(0, 2), co(0, 1) * half},
                   {co(1, 0) * half, co(0, 1) * half, co(0, 0)}};
  return determinant(Q) != 0;
}

}  // namespace

Witness solve_witness(unsigned d) {
  if (d < 1) throw PreconditionError("solve_witness: d must be at least 1");
  Witness w;
  w.d = d;
  w.B = static_cast<unsigned>(lower_bound_order(d).get_ui());
  RationalMatrix M = basis_matrix(d, w.B);
  std::vector<Rational> rhs(w.B + 1);
  rhs[w.B] = 1;
  w.mu = solve_linear(std::move(M), std::move(rhs));

  auto reg = VarRegistry::create();
  const VarIndex x = reg->intern({"x", 0});
  const VarIndex y = reg->intern({"y", 0});
  auto exps = witness_exponents(d);
  Polynomial raw = Polynomial::constant(reg, 0);
  for (std::size_t k = 0; k < exps.size(); ++k)
    raw += Polynomial::monomial(reg, Monomial::from_pairs(std::vector<std::pair<VarIndex, Exponent>>{{x, exps[k].first}, {y, exps[k].second}}), w.mu[k]);

  Polynomial P = raw.primitive_part();
  if (P.leading_term(MonomialOrder::lex({x, y})).second > 0) P = -P;
  w.P = P;
  for (const auto& t : raw.terms())
    if (t.coeff != 0) {
      w.scale = P.coefficient(t.mono) / t.coeff;
      break;
    }

  if (P.total_degree() != static_cast<std::int64_t>(d))
    throw InternalConsistencyError("witness polynomial has degree " + std::to_string(P.total_degree()));
  if (P.substitute({{y, Rational(0)}}).is_zero()) throw InternalConsistencyError("witness P(x, 0) vanishes");

  std::map<std::string, TruncatedSeries> series{{"x", TruncatedSeries::t_pow_exp(1, 0, w.B + 1)},
                                                {"y", TruncatedSeries::t_pow_exp(0, 1, w.B + 1)}};
  TruncatedSeries s = substitute_series(P, series);
  w.substituted = s.coefficients();
  if (s.valuation() != std::optional<std::size_t>(w.B))
    throw InternalConsistencyError("P(t, e^t) does not start at t^B");

  if (d == 1) {
    w.irreducible = true;
    w.irreducibility_method = "linear";
  } else if (d == 2) {
    w.irreducible = conic_irreducible(P, x, y);
    w.irreducibility_method = "nonsingular conic matrix";
  }
  w.system = witness_system(P);
  return w;
}

Polynomial witness_polynomial(unsigned d) { return solve_witness(d).P; }

DiffSystem witness_system(const Polynomial& P) {
  DiffSystem S;
  S.registry = P.registry() ? P.registry() : VarRegistry::create();
  S.eliminate = {"x", "y"};
  auto var = [&](const char* name, unsigned order) {
    return Polynomial::variable(S.registry, S.registry->intern({name, order}));
  };
  S.equations = {var("x", 1) - Polynomial::constant(S.registry, 1), var("y", 1) - var("y", 0),
                 transport(P, S.registry)};
  S.validate();
  return S;
}

TruncatedSeries substitute_series(const Polynomial& p, const std::map<std::string, TruncatedSeries>& series) {
  if (series.empty()) throw PreconditionError("substitute_series: no series given");
  std::map<DiffVariable, TruncatedSeries> cache;
  auto lookup = [&](const DiffVariable& v) -> const TruncatedSeries& {
    auto it = cache.find(v);
    if (it != cache.end()) return it->second;
    auto base = series.find(v.base);
    if (base == series.end()) throw PreconditionError("no series for '" + v.base + "'");
    TruncatedSeries s = base->second;
    for (unsigned k = 0; k < v.order; ++k) s = s.derivative();
    return cache.emplace(v, std::move(s)).first->second;
  };

  std::size_t length = SIZE_MAX;
  for (VarIndex v : p.variables()) length = std::min(length, lookup(p.registry()->at(v)).size());
  if (length == SIZE_MAX)
    for (const auto& [name, s] : series) length = std::min(length, s.size());

  TruncatedSeries acc = TruncatedSeries::constant(0, length);
  for (const auto& t : p.terms()) {
    TruncatedSeries term = TruncatedSeries::constant(t.coeff, length);
    for (auto [v, e] : t.mono.support()) term = term * lookup(p.registry()->at(v)).pow(e);
    acc = acc + term;
  }
  return acc;
}

SeriesCertificate certify_nonmembership(const DiffSystem& S, const std::map<std::string, TruncatedSeries>& series,
                                        unsigned N) {
  SeriesCertificate cert;
  cert.N = N;
  cert.holds = true;
  for (const auto& eq : S.equations) {
    TruncatedSeries s = substitute_series(eq, series);
    if (s.size() < N)
      throw PreconditionError("series known to " + std::to_string(s.size()) + " terms after substitution into " +
                              eq.to_string() + "; need " + std::to_string(N));
    SeriesCertificate::Row row{eq.to_string(), s.valuation(), s.size()};
    if (row.valuation && *row.valuation < N) cert.holds = false;
    cert.rows.push_back(std::move(row));
  }
  return cert;
}

InconsistencySearch minimal_inconsistency_depth(const DiffSystem& S, int max_depth, const GroebnerOptions& opts) {
  if (max_depth < 0) throw PreconditionError("minimal_inconsistency_depth: max_depth must be nonnegative");
  InconsistencySearch out;
  for (int N = 0; N <= max_depth; ++N) {
    try {
      if (contains_one(prolong(S, N).equations, opts)) {
        out.depth = N;
        out.searched = N;
        return out;
      }
    } catch (const ResourceLimitExceeded& e) {
      out.cutoff = true;
      out.reason = std::string(e.what()) + " at depth " + std::to_string(N);
      return out;
    }
    out.searched = N;
  }
  return out;
}

}  // namespace diffelim
