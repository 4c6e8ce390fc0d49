#include "diffelim/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "diffelim/error.hpp"
#include "gb_engine.hpp"

namespace diffelim {

namespace {

std::shared_ptr<VarRegistry> common_registry(std::span<const Polynomial> gens) {
  std::shared_ptr<VarRegistry> reg;
  for (const auto& g : gens) {
    if (!g.registry()) continue;
    if (reg && reg != g.registry()) throw RegistryMismatch();
    reg = g.registry();
  }
  return reg;
}

template <class Ops>
GroebnerBasis run_engine(std::span<const Polynomial> gens, const MonomialOrder& ord, const GroebnerOptions& opts,
                         std::optional<std::uint64_t> prime) {
  auto reg = common_registry(gens);
  detail::Engine<Ops> eng(ord, opts.limits);
  std::vector<typename detail::Engine<Ops>::Poly> in;
  in.reserve(gens.size());
  for (const auto& g : gens) in.push_back(eng.import(g));
  auto idx = eng.run(std::move(in));
  std::vector<Polynomial> elems;
  elems.reserve(idx.size());
  for (std::size_t i : idx) elems.push_back(eng.export_poly(eng.poly(i), reg));
  return GroebnerBasis(reg, ord, std::move(elems), prime, eng.stats());
}

template <class Ops>
Polynomial reduce_with(const Polynomial& f, const GroebnerBasis& G) {
  detail::Engine<Ops> eng(G.order(), {});
  std::vector<std::size_t> idx;
  for (const auto& g : G.elements()) {
    auto p = eng.import(g);
    eng.normalize(p);
    idx.push_back(eng.add_poly(std::move(p)));
  }
  auto r = eng.reduce(eng.import(f), idx);
  auto reg = f.registry() ? f.registry() : G.registry();
  return eng.export_poly(r, reg);
}

// ---- Hilbert series of monomial ideals (pivot recursion) -------------------

using Dense = std::vector<Exponent>;
using TPoly = std::vector<Integer>;

bool dense_divides(const Dense& a, const Dense& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

void minimalize(std::vector<Dense>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Dense& a, const Dense& b) {
    std::uint64_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    return da != db ? da < db : a < b;
  });
  std::vector<Dense> out;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (dense_divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(std::move(g));
  }
  gens = std::move(out);
}

void tpoly_add(TPoly& acc, const TPoly& x, std::size_t shift) {
  if (acc.size() < x.size() + shift) acc.resize(x.size() + shift, 0);
  for (std::size_t i = 0; i < x.size(); ++i) acc[i + shift] += x[i];
}

TPoly tpoly_mul_one_minus_t_pow(const TPoly& p, std::size_t e) {
  TPoly out(p.size() + e, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] += p[i];
    out[i + e] -= p[i];
  }
  return out;
}

void tpoly_trim(TPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

TPoly hilbert_numerator(std::vector<Dense> gens, std::size_t n) {
  minimalize(gens);
  if (gens.empty()) return {1};
  std::vector<std::uint64_t> deg(gens.size(), 0);
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (auto e : gens[k]) deg[k] += e;
  if (deg.front() == 0) return {};

  std::vector<std::size_t> freq(n, 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < n; ++i)
      if (g[i]) ++freq[i];
  if (std::all_of(freq.begin(), freq.end(), [](std::size_t c) { return c <= 1; })) {
    TPoly out{1};
    for (auto d : deg) out = tpoly_mul_one_minus_t_pow(out, d);
    return out;
  }

  // Pivot x_v^e taken from a generator that is not a pure power: it is not in
  // the ideal, and the colon ideal strictly shrinks that generator.
  std::size_t best_v = n, best_e = 0;
  for (const auto& g : gens) {
    std::size_t support = 0;
    for (auto e : g) support += e != 0;
    if (support < 2) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (g[i] && (best_v == n || freq[i] > freq[best_v])) {
        best_v = i;
        best_e = g[i];
      }
  }
  if (best_v == n) throw InternalConsistencyError("Hilbert recursion found no pivot");
  for (const auto& g : gens)
    if (g[best_v] && freq[best_v] && g[best_v] < best_e) {
      std::size_t support = 0;
      for (auto e : g) support += e != 0;
      if (support >= 2) best_e = g[best_v];
    }

  std::vector<Dense> sum = gens;
  Dense pivot(n, 0);
  pivot[best_v] = static_cast<Exponent>(best_e);
  sum.push_back(pivot);
  std::vector<Dense> colon;
  colon.reserve(gens.size());
  for (auto g : gens) {
    g[best_v] = g[best_v] > best_e ? g[best_v] - static_cast<Exponent>(best_e) : 0;
    colon.push_back(std::move(g));
  }
  TPoly out = hilbert_numerator(std::move(sum), n);
  tpoly_add(out, hilbert_numerator(std::move(colon), n), best_e);
  tpoly_trim(out);
  return out;
}

std::vector<Dense> dense_leads(const GroebnerBasis& G) {
  const auto& ord = G.order();
  std::vector<Dense> out;
  for (const auto& m : G.leading_monomials()) {
    Dense d(ord.size(), 0);
    for (auto [v, e] : m.support()) d[*ord.position(v)] = e;
    out.push_back(std::move(d));
  }
  return out;
}

// ---- univariate helpers ------------------------------------------------------

using Dense1 = std::vector<Rational>;

Dense1 to_dense(const Polynomial& f, VarIndex v) {
  Dense1 out;
  for (const auto& t : f.terms()) {
    auto supp = t.mono.support();
    if (supp.size() > 1 || (supp.size() == 1 && supp[0].first != v))
      throw PreconditionError("polynomial is not univariate in the requested variable");
    std::size_t e = supp.empty() ? 0 : supp[0].second;
    if (out.size() <= e) out.resize(e + 1, 0);
    out[e] += t.coeff;
  }
  return out;
}

void trim1(Dense1& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Polynomial from_dense(const Dense1& p, VarIndex v, const std::shared_ptr<VarRegistry>& reg) {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < p.size(); ++e)
    if (p[e] != 0) terms.push_back({Monomial::variable(v, static_cast<Exponent>(e)), p[e]});
  return Polynomial(reg, std::move(terms));
}

Dense1 rem1(Dense1 a, const Dense1& b) {
  trim1(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
    a.pop_back();
    trim1(a);
  }
  return a;
}

}  // namespace

GroebnerBasis::GroebnerBasis(std::shared_ptr<VarRegistry> reg, MonomialOrder ord, std::vector<Polynomial> elems,
                             std::optional<std::uint64_t> prime, GroebnerStats stats)
    : reg_(std::move(reg)), ord_(std::move(ord)), elems_(std::move(elems)), prime_(prime), stats_(stats) {
  leads_.reserve(elems_.size());
  for (const auto& e : elems_) leads_.push_back(e.leading_term(ord_).first);
}

bool GroebnerBasis::is_unit() const { return elems_.size() == 1 && elems_[0].is_constant(); }

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& ord, const GroebnerOptions& opts) {
  if (opts.field == CoefficientField::Rationals) return run_engine<detail::IntegerOps>(gens, ord, opts, std::nullopt);
  ModP::Scope scope(opts.prime);
  return run_engine<detail::ModPOps>(gens, ord, opts, opts.prime);
}

Polynomial reduce(const Polynomial& f, const GroebnerBasis& G) {
  if (f.registry() && G.registry() && f.registry() != G.registry()) throw RegistryMismatch();
  if (auto p = G.modulus()) {
    ModP::Scope scope(*p);
    return reduce_with<detail::ModPOps>(f, G);
  }
  return reduce_with<detail::RationalOps>(f, G);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  auto [mf, cf] = f.leading_term(ord);
  auto [mg, cg] = g.leading_term(ord);
  Monomial l = mf.lcm(mg);
  return f.mul_monomial(l.quotient(mf), Rational(1 / cf)) - g.mul_monomial(l.quotient(mg), Rational(1 / cg));
}

MonomialOrder grevlex_for(std::span<const Polynomial> gens) {
  std::set<VarIndex> vars;
  for (const auto& g : gens)
    for (VarIndex v : g.variables()) vars.insert(v);
  return MonomialOrder::grevlex(std::vector<VarIndex>(vars.begin(), vars.end()));
}

bool contains_one(std::span<const Polynomial> gens, const GroebnerOptions& opts) {
  bool any = false;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return true;
    any = true;
  }
  if (!any) return false;
  return buchberger(gens, grevlex_for(gens), opts).is_unit();
}

GroebnerBasis elimination_basis(std::span<const Polynomial> gens, std::span<const VarIndex> keep_vars,
                                const GroebnerOptions& opts) {
  std::set<VarIndex> keep(keep_vars.begin(), keep_vars.end());
  std::set<VarIndex> used;
  for (const auto& g : gens)
    for (VarIndex v : g.variables()) used.insert(v);
  std::vector<VarIndex> elim, kept(keep.begin(), keep.end());
  for (VarIndex v : used)
    if (!keep.count(v)) elim.push_back(v);
  auto ord = MonomialOrder::block({{elim, OrderKind::Grevlex}, {kept, OrderKind::Grevlex}});
  return buchberger(gens, ord, opts);
}

std::vector<Polynomial> elimination_ideal(std::span<const Polynomial> gens, std::span<const VarIndex> keep_vars,
                                          const GroebnerOptions& opts) {
  auto G = elimination_basis(gens, keep_vars, opts);
  std::vector<Polynomial> out;
  for (const auto& g : G.elements())
    if (g.uses_only(keep_vars)) out.push_back(g);
  return out;
}

int HilbertSeries::dimension() const {
  if (numerator.empty()) return -1;
  // strip factors (1 - t) from the numerator
  TPoly q = numerator;
  int k = 0;
  while (true) {
    Integer at_one = 0;
    for (const auto& c : q) at_one += c;
    if (at_one != 0) break;
    // synthetic division by (1 - t): q = (1 - t) * s, s_i = sum_{j<=i} q_j
    TPoly s(q.size() - 1);
    Integer run = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      run += q[i];
      s[i] = run;
    }
    q = std::move(s);
    ++k;
  }
  return static_cast<int>(nvars) - k;
}

Integer HilbertSeries::degree() const {
  if (numerator.empty()) return 0;
  TPoly q = numerator;
  while (true) {
    Integer at_one = 0;
    for (const auto& c : q) at_one += c;
    if (at_one != 0) return at_one;
    TPoly s(q.size() - 1);
    Integer run = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      run += q[i];
      s[i] = run;
    }
    q = std::move(s);
  }
}

Integer HilbertSeries::count_in_degree(std::size_t k) const {
  // coefficient of t^k in N(t) / (1-t)^n = sum_i N_i * C(k - i + n - 1, n - 1)
  Integer total = 0;
  for (std::size_t i = 0; i < numerator.size() && i <= k; ++i) {
    if (numerator[i] == 0) continue;
    Integer c;
    if (nvars == 0) {
      c = (k == i) ? 1 : 0;
    } else {
      mpz_bin_uiui(c.get_mpz_t(), k - i + nvars - 1, nvars - 1);
    }
    total += numerator[i] * c;
  }
  return total;
}

HilbertSeries hilbert_series_monomial(std::span<const Monomial> gens, std::size_t nvars) {
  std::vector<Dense> dense;
  dense.reserve(gens.size());
  for (const auto& m : gens) {
    if (m.width() > nvars) throw PreconditionError("monomial uses a variable beyond the ring size");
    Dense d(nvars, 0);
    for (auto [v, e] : m.support()) d[v] = e;
    dense.push_back(std::move(d));
  }
  return {nvars, hilbert_numerator(std::move(dense), nvars)};
}

HilbertSeries hilbert_series(const GroebnerBasis& G) {
  return {G.order().size(), hilbert_numerator(dense_leads(G), G.order().size())};
}

int dimension(const GroebnerBasis& G) {
  if (G.is_unit()) throw PreconditionError("dimension of the unit ideal");
  const std::size_t n = G.order().size();
  if (n > kMaxDimensionVars)
    throw PreconditionError("dimension search supports at most " + std::to_string(kMaxDimensionVars) +
                            " variables");
  std::vector<std::uint64_t> supports;
  for (const auto& lead : dense_leads(G)) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (lead[i]) s |= std::uint64_t{1} << i;
    supports.push_back(s);
  }
  // branch and bound over variable subsets independent modulo the lead terms
  int best = 0;
  auto independent = [&](std::uint64_t set) {
    for (auto s : supports)
      if ((s & ~set) == 0) return false;
    return true;
  };
  auto dfs = [&](auto&& self, std::size_t i, std::uint64_t set, int size) -> void {
    if (size + static_cast<int>(n - i) <= best) return;
    if (i == n) {
      best = size;
      return;
    }
    std::uint64_t with = set | (std::uint64_t{1} << i);
    if (independent(with)) self(self, i + 1, with, size + 1);
    self(self, i + 1, set, size);
  };
  dfs(dfs, 0, 0, 0);
  return best;
}

Integer degree_top(const GroebnerBasis& G) {
  if (G.is_unit()) throw PreconditionError("degree of the unit ideal");
  const auto& blocks = G.order().blocks();
  bool graded = blocks.size() <= 1 && (blocks.empty() || blocks[0].inner == OrderKind::Grevlex ||
                                       blocks[0].vars.size() == 1);
  if (!graded) throw PreconditionError("degree_top needs a degree-compatible order");
  return hilbert_series(G).degree();
}

Polynomial minimal_polynomial(const GroebnerBasis& G, VarIndex v) {
  if (G.modulus()) throw PreconditionError("minimal polynomial needs a basis over Q");
  if (G.is_unit()) throw PreconditionError("minimal polynomial modulo the unit ideal");
  if (hilbert_series(G).dimension() != 0) throw PreconditionError("ideal is not zero-dimensional");
  const std::size_t vs_dim = hilbert_series(G).degree().get_ui();
  auto reg = G.registry();

  struct Row {
    std::map<std::vector<Exponent>, Rational> vec;  // keyed by exponent vector
    std::vector<Rational> comb;                     // as a combination of powers of v
  };
  std::vector<Row> rows;  // echelon: pivot = largest key of each row
  Polynomial power = reduce(Polynomial::constant(reg, 1), G);
  const Polynomial xv = Polynomial::variable(reg, v);
  for (std::size_t k = 0; k <= vs_dim; ++k) {
    Row r;
    for (const auto& t : power.terms()) r.vec[t.mono.exponents()] = t.coeff;
    r.comb.assign(k + 1, 0);
    r.comb[k] = 1;
    for (const auto& piv : rows) {
      const auto& key = piv.vec.rbegin()->first;
      auto it = r.vec.find(key);
      if (it == r.vec.end()) continue;
      Rational f = it->second / piv.vec.rbegin()->second;
      for (const auto& [m, c] : piv.vec) {
        Rational& slot = r.vec[m];
        slot -= f * c;
        if (slot == 0) r.vec.erase(m);
      }
      for (std::size_t i = 0; i < piv.comb.size(); ++i) r.comb[i] -= f * piv.comb[i];
    }
    if (r.vec.empty()) {
      Dense1 coeffs = r.comb;
      trim1(coeffs);
      return from_dense(coeffs, v, reg).primitive_part();
    }
    // keep rows sorted so elimination by earlier pivots cannot reintroduce them
    rows.push_back(std::move(r));
    std::sort(rows.begin(), rows.end(),
              [](const Row& a, const Row& b) { return a.vec.rbegin()->first > b.vec.rbegin()->first; });
    power = reduce(power * xv, G);
  }
  throw InternalConsistencyError("no minimal polynomial within the quotient dimension");
}

bool is_radical_zero_dimensional(const GroebnerBasis& G) {
  for (VarIndex v : G.order().variables())
    if (!is_squarefree_univariate(minimal_polynomial(G, v), v)) return false;
  return true;
}

Polynomial univariate_gcd(const Polynomial& f, const Polynomial& g, VarIndex v) {
  Dense1 a = to_dense(f, v), b = to_dense(g, v);
  trim1(a);
  trim1(b);
  while (!b.empty()) {
    Dense1 r = rem1(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  auto reg = f.registry() ? f.registry() : g.registry();
  if (a.empty()) return Polynomial(reg);
  return from_dense(a, v, reg).primitive_part();
}

bool is_squarefree_univariate(const Polynomial& f, VarIndex v) {
  if (f.is_zero()) return false;
  return univariate_gcd(f, f.partial(v), v).is_constant();
}

}  // namespace diffelim
