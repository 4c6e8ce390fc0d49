// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero when a criterion fails that was not listed with --allow-fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "diffelim/bounds.hpp"
#include "diffelim/elim.hpp"
#include "diffelim/error.hpp"
#include "diffelim/groebner.hpp"
#include "diffelim/randcheck.hpp"
#include "diffelim/system_file.hpp"
#include "diffelim/witness.hpp"

using namespace diffelim;

namespace {

std::string g_systems;

DiffSystem load(const std::string& name) { return load_system(g_systems + "/" + name); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// Collects failed sub-checks of one criterion.
struct Check {
  std::vector<std::string> failures;
  std::vector<std::string> info;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { info.push_back(s); }
};

Polynomial parse_over(const DiffSystem& S, const std::string& expr) {
  std::string text = "vars ";
  bool first = true;
  for (const auto* group : {&S.eliminate, &S.keep, &S.params})
    for (const auto& n : *group) {
      text += (first ? "" : ", ") + n;
      first = false;
    }
  return transport(parse_system(text + "\n" + expr).equations.at(0), S.registry);
}

bool any_proportional(const std::vector<Polynomial>& rels, const Polynomial& p) {
  for (const auto& g : rels)
    if (g.proportional_to(p)) return true;
  return false;
}

std::string profile_string(const std::vector<Integer>& D) {
  std::string s = "(";
  for (std::size_t i = 0; i < D.size(); ++i) s += (i ? "," : "") + D[i].get_str();
  return s + ")";
}

/// D-profile padded with zeros to `len` entries (components above m are empty).
std::vector<Integer> padded(std::vector<Integer> D, std::size_t len) {
  while (D.size() < len) D.push_back(0);
  return D;
}

EliminationConfig config(std::uint64_t seed, bool augment = false) {
  EliminationConfig cfg;
  cfg.seed = seed;
  cfg.augment_derivatives = augment;
  return cfg;
}

void criterion1(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  DiffSystem S = load("van_der_pol.sys");
  DimensionEstimate est;
  BoundReport b = compute_bound(S, config(1), &est);
  c.expect(est.m == 0, "m = " + std::to_string(est.m));
  c.expect(b.B == 1, "B = " + b.B.get_str());
  EliminationReport r = run_elimination(S, config(1));
  c.expect(r.verdict == Verdict::RelationFound && r.depth == 1, "no relation at depth 1");
  c.expect(any_proportional(r.relations, parse_over(S, "z'^2 - z'*z - 4*z'*z^3 + z^4 + 4*z^6")),
           "relation differs from the expected polynomial");
  double s = seconds_since(t0);
  c.expect(s < 30, "runtime " + std::to_string(s) + " s");
  c.note("m=0 B=1 depth=1, " + std::to_string(s) + " s");
}

void criterion2(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  DiffSystem S = load("lotka_volterra.sys");
  BoundReport b = compute_bound(S, config(2));
  c.expect(b.B == 1, "B = " + b.B.get_str());
  EliminationReport r = run_elimination(S, config(2));
  c.expect(r.verdict == Verdict::RelationFound, "no relation found");
  c.expect(any_proportional(r.relations, parse_over(S, "x*x'' - x'^2 + x*(alpha*x - x')*(delta*x - gamma)")),
           "relation differs from the expected polynomial");
  VarIndex beta = S.registry->intern({"beta", 0});
  for (const auto& g : r.relations)
    for (VarIndex v : g.variables()) c.expect(v != beta, "beta occurs in " + g.to_string());
  double s = seconds_since(t0);
  c.expect(s < 30, "runtime " + std::to_string(s) + " s");
  c.note("B=1, beta absent, " + std::to_string(s) + " s");
}

struct Row {
  std::vector<std::string> keep;
  std::vector<Integer> D;  // expected profile; empty to skip
  Integer B;
  bool possible;
  bool augment = true;
};

/// Bound rows plus 20 seeded randomized runs per impossible row; at most one
/// disagreeing run overall. Augmentation follows the rows where the added
/// derivatives keep the order tuple.
void table(Check& c, const std::string& file, const std::vector<Row>& rows, std::uint64_t base_seed) {
  DiffSystem S0 = load(file);
  int runs = 0, disagree = 0;
  for (const auto& row : rows) {
    DiffSystem S = with_keep(S0, row.keep);
    std::string name;
    for (const auto& k : row.keep) name += (name.empty() ? "" : ",") + k;
    BoundReport b = compute_bound(S, config(base_seed, row.augment));
    std::vector<Integer> D = padded(b.D, row.D.size());
    if (!row.D.empty()) c.expect(D == row.D, name + ": D-profile " + profile_string(b.D));
    c.expect(b.B == row.B, name + ": B = " + b.B.get_str());
    c.note(name + ": D=" + profile_string(D) + " B=" + b.B.get_str());
    if (row.possible) {
      EliminationReport r = run_elimination(S, config(base_seed, row.augment));
      c.expect(r.verdict == Verdict::RelationFound && r.depth == 1, name + ": no relation at depth 1");
      if (!r.relations.empty()) c.note(name + ": relation " + r.relations.front().to_string());
      continue;
    }
    for (std::uint64_t k = 0; k < 20; ++k, ++runs) {
      RandomizedVerdict v = randomized_dae_check(S, Rational(99, 100), base_seed * 1000 + k, config(k, row.augment));
      if (!v.conclusive) c.expect(false, name + ": inconclusive randomized run");
      disagree += v.elimination_possible;
    }
  }
  c.expect(disagree <= 1, std::to_string(disagree) + " of " + std::to_string(runs) + " runs disagree");
  c.note(std::to_string(runs - disagree) + "/" + std::to_string(runs) + " randomized runs report impossible");
}

void criterion3(Check& c) {
  table(c, "pendulum.sys",
        {{{"x"}, {0, 2}, 5, false},
         {{"y"}, {0, 2}, 5, false},
         {{"x", "F1"}, {2, 0}, 1, false},
         {{"y", "F2"}, {2, 0}, 1, false}},
        3);
}

void criterion4(Check& c) {
  table(c, "control.sys",
        {{{"x1", "x2"}, {0, 2, 0}, 5, false, true},
         {{"x1", "x3"}, {0, 0, 1}, 3, false, false},
         {{"x2", "x3"}, {0, 0, 1}, 3, true, false}},
        4);
}

void criterion5(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  long cases = 0;
  // bound_radical against the regrouped sum over every D-list of length <= 3
  // with entries <= 20, and all m <= 4 with constant lists.
  for (int len = 1; len <= 3; ++len) {
    std::vector<int> D(len, 0);
    for (;;) {
      std::vector<Integer> Di(D.begin(), D.end());
      Integer sum = 0;
      for (int j = 0; j < len; ++j) sum += bound_B(j, Di[j]);
      c.expect(bound_radical(Di) == sum, "radical sum mismatch");
      ++cases;
      int k = 0;
      while (k < len && ++D[k] > 20) D[k++] = 0;
      if (k == len) break;
    }
  }
  for (unsigned m = 0; m <= 4; ++m)
    for (int v = 0; v <= 20; ++v) {
      std::vector<Integer> Di(m + 1, v);
      Integer sum = 0;
      for (unsigned j = 0; j <= m; ++j) sum += bound_B(j, v);
      c.expect(bound_radical(Di) == sum, "radical sum mismatch, m = " + std::to_string(m));
      ++cases;
    }
  for (unsigned long d = 1; d <= 5; ++d)
    for (unsigned a = 1; a <= 6; ++a)
      for (unsigned m = 0; m <= std::min(4u, a); ++m) {
        Integer g = bound_general(d, a, m);
        if (d == 1) c.expect(g == m + 1, "d = 1 branch");
        if (m + 1 > a) continue;
        for (unsigned long d0 = 1; d0 <= d; ++d0)
          for (unsigned r = 1; r <= 6; ++r, ++cases)
            if (d >= 2) c.expect(bound_tighter(d0, d, r, a, m) <= g, "tighter exceeds general");
      }
  double s = seconds_since(t0);
  c.expect(s < 10, "runtime " + std::to_string(s) + " s");
  c.note(std::to_string(cases) + " cases, " + std::to_string(s) + " s");
}

void criterion6(Check& c) {
  Witness w2 = solve_witness(2);
  DiffSystem S = w2.system;
  c.expect(w2.P.proportional_to(parse_over(S, "-2*x^2 - 8*x*y + y^2 - 10*x + 16*y - 17")), "d=2 polynomial");
  auto series = [](std::size_t len) {
    return std::map<std::string, TruncatedSeries>{{"x", TruncatedSeries::t_pow_exp(1, 0, len)},
                                                  {"y", TruncatedSeries::t_pow_exp(0, 1, len)}};
  };
  c.expect(certify_nonmembership(w2.system, series(w2.B + 1), 5).holds, "d=2 certificate at N=5");
  Witness w1 = solve_witness(1);
  c.expect(certify_nonmembership(w1.system, series(w1.B + 1), 2).holds, "d=1 certificate at N=2");
  c.expect(check_consistency(w1.system, 1), "d=1: 1 in ideal^(1)");
  InconsistencySearch s1 = minimal_inconsistency_depth(w1.system, 6);
  c.expect(s1.depth.has_value() && *s1.depth >= 2, "d=1 search did not find N >= 2");
  c.note("d=1 inconsistency depth " + (s1.depth ? std::to_string(*s1.depth) : std::string("none")));
  GroebnerOptions lim;
  lim.limits.timeout_seconds = 60;
  InconsistencySearch s2 = minimal_inconsistency_depth(w2.system, 6, lim);
  if (s2.depth) {
    c.expect(*s2.depth >= 5, "d=2 inconsistency below B");
    c.note("d=2 inconsistency depth " + std::to_string(*s2.depth));
  } else {
    c.note("d=2 search stopped after depth " + std::to_string(s2.searched) + (s2.cutoff ? " (cutoff)" : ""));
  }
}

/// One-sided 99% Clopper-Pearson upper bound for k successes in n trials.
double binomial_upper_99(long k, long n) {
  if (k >= n) return 1.0;
  auto cdf = [&](double p) {  // P(X <= k)
    double total = 0;
    for (long i = 0; i <= k; ++i) {
      double lp = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0) + i * std::log(p) +
                  (n - i) * std::log1p(-p);
      total += std::exp(lp);
    }
    return total;
  };
  double lo = double(k) / n, hi = 1.0;
  for (int it = 0; it < 60; ++it) {
    double mid = (lo + hi) / 2;
    (cdf(mid) > 0.01 ? lo : hi) = mid;
  }
  return hi;
}

void criterion7(Check& c) {
  const long trials = 10000;
  const Rational p(3, 4);
  for (const auto& eqs : {std::vector<std::string>{"x*y - 1"}, std::vector<std::string>{"x + y", "x"}}) {
    std::string text = "vars x, y\n";
    for (const auto& e : eqs) text += e + "\n";
    DiffSystem S = parse_system(text);
    VarIndex x = S.registry->intern({"x", 0}), y = S.registry->intern({"y", 0});
    std::vector<VarIndex> xs{x}, ys{y};
    bool truth = !elimination_ideal(S.equations, ys).empty();
    GroebnerBasis G = buchberger(S.equations, grevlex_for(S.equations));
    Integer degX = degree_top(G);
    long errors = 0;
    Integer size;
    for (long k = 0; k < trials; ++k) {
      RandomizedVerdict v = dominance_check(S.equations, xs, ys, p, static_cast<std::uint64_t>(k));
      size = v.sample_size;
      errors += v.elimination_possible != truth;
    }
    double rate = double(errors) / trials;
    double prop_bound = degX.get_d() / size.get_d();
    double ucb = binomial_upper_99(errors, trials);
    std::string name = "{" + eqs.front() + (eqs.size() > 1 ? ", " + eqs.back() : "") + "}";
    c.expect(rate <= 0.25, name + ": error rate " + std::to_string(rate) + " > 0.25");
    c.expect(rate <= 2 * prop_bound, name + ": error rate above 2 deg X/|S| = " + std::to_string(2 * prop_bound));
    c.expect(ucb < 0.25, name + ": 99% upper bound " + std::to_string(ucb) + " not below 0.25");
    c.note(name + ": |S|=" + size.get_str() + " deg X=" + degX.get_str() + " errors " + std::to_string(errors) +
           "/" + std::to_string(trials) + " rate " + std::to_string(rate) + " ucb99 " + std::to_string(ucb));
  }
}

void criterion8(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  auto reg = VarRegistry::create();
  std::vector<VarIndex> base{reg->intern({"a", 0}), reg->intern({"b", 0}), reg->intern({"c", 0})};
  std::vector<VarIndex> dvars = base;
  for (VarIndex v : base) dvars.push_back(reg->intern({reg->at(v).base, 1}));
  std::mt19937_64 rng(8);
  auto random_poly = [&](const std::vector<VarIndex>& vars, int terms, unsigned max_deg, int range) {
    std::uniform_int_distribution<int> coeff(-range, range);
    std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    Polynomial p = Polynomial::constant(reg, 0);
    for (int t = 0; t < terms; ++t) {
      std::vector<std::pair<VarIndex, Exponent>> pairs;
      for (unsigned j = deg(rng); j > 0; --j) pairs.emplace_back(vars[pick(rng)], 1);
      p += Polynomial::monomial(reg, Monomial::from_pairs(pairs), Rational(coeff(rng)));
    }
    return p;
  };
  const int n = 1000;
  int bad_spoly = 0, bad_ring = 0, bad_leibniz = 0, bad_hilbert = 0;
  for (int k = 0; k < n; ++k) {
    std::vector<Polynomial> gens{random_poly(base, 3, 2, 3), random_poly(base, 3, 2, 3), random_poly(base, 2, 2, 3)};
    auto ord = k % 2 ? MonomialOrder::lex(base) : MonomialOrder::grevlex(base);
    GroebnerBasis G = buchberger(gens, ord);
    const auto& E = G.elements();
    bool ok = true;
    for (std::size_t i = 0; i < E.size(); ++i)
      for (std::size_t j = i + 1; j < E.size(); ++j) ok = ok && reduce(s_polynomial(E[i], E[j], ord), G).is_zero();
    for (const auto& g : gens) ok = ok && reduce(g, G).is_zero();
    bad_spoly += !ok;
  }
  for (int k = 0; k < n; ++k) {
    auto p = random_poly(base, 4, 3, 5), q = random_poly(base, 4, 3, 5), r = random_poly(base, 4, 3, 5);
    bool ok = p + q == q + p && p * q == q * p && (p + q) + r == p + (q + r) && (p * q) * r == p * (q * r) &&
              p * (q + r) == p * q + p * r && (p - p).is_zero();
    bad_ring += !ok;
  }
  for (int k = 0; k < n; ++k) {
    auto f = random_poly(dvars, 4, 3, 5), g = random_poly(dvars, 4, 3, 5);
    bool ok = derive(f + g) == derive(f) + derive(g) && derive(f * g) == derive(f) * g + f * derive(g);
    bad_leibniz += !ok;
  }
  std::uniform_int_distribution<Exponent> e(0, 4);
  std::uniform_int_distribution<int> ngens(1, 5);
  for (int k = 0; k < n; ++k) {
    std::size_t nv = 2 + k % 3;
    std::vector<std::vector<Exponent>> raw;
    std::vector<Monomial> gens;
    for (int g = ngens(rng); g > 0; --g) {
      std::vector<Exponent> v(nv);
      for (auto& x : v) x = e(rng);
      raw.push_back(v);
      gens.push_back(Monomial::from_exponents(v));
    }
    HilbertSeries H = hilbert_series_monomial(gens, nv);
    bool ok = true;
    for (unsigned deg = 0; deg <= 10; ++deg) {
      // standard monomials of degree deg by enumeration
      long count = 0;
      std::vector<Exponent> m(nv, 0);
      std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 == nv) {
          m[i] = left;
          bool standard = true;
          for (const auto& g : raw) {
            bool div = true;
            for (std::size_t v = 0; v < nv; ++v) div = div && g[v] <= m[v];
            standard = standard && !div;
          }
          count += standard;
          return;
        }
        for (unsigned a = 0; a <= left; ++a) {
          m[i] = a;
          rec(i + 1, left - a);
        }
      };
      rec(0, deg);
      ok = ok && H.count_in_degree(deg) == count;
    }
    bad_hilbert += !ok;
  }
  c.expect(bad_spoly == 0, std::to_string(bad_spoly) + " S-pair failures");
  c.expect(bad_ring == 0, std::to_string(bad_ring) + " ring-axiom failures");
  c.expect(bad_leibniz == 0, std::to_string(bad_leibniz) + " derivation failures");
  c.expect(bad_hilbert == 0, std::to_string(bad_hilbert) + " Hilbert count failures");
  double s = seconds_since(t0);
  c.expect(s < 60, "runtime " + std::to_string(s) + " s");
  c.note("4 x " + std::to_string(n) + " cases, " + std::to_string(s) + " s");
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> allowed;
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--allow-fail" && i + 1 < argc) {
      allowed.insert(std::stoi(argv[++i]));
    } else if (a == "--only" && i + 1 < argc) {
      only.insert(std::stoi(argv[++i]));
    } else {
      g_systems = a;
    }
  }
  if (g_systems.empty()) {
    std::cerr << "usage: acceptance SYSTEMS_DIR [--allow-fail N]... [--only N]...\n";
    return 1;
  }
  std::vector<std::pair<std::string, void (*)(Check&)>> criteria{
      {"Van der Pol relation and bound", criterion1},
      {"Lotka-Volterra relation and bound", criterion2},
      {"pendulum table", criterion3},
      {"control table", criterion4},
      {"bound formula grid", criterion5},
      {"lower-bound witness", criterion6},
      {"randomized error rate", criterion7},
      {"kernel properties", criterion8},
  };
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    bool pass = c.failures.empty();
    std::printf("%s %d %s (%.1f s)\n", pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(), seconds_since(t0));
    for (const auto& s : c.info) std::printf("     %s\n", s.c_str());
    for (const auto& s : c.failures) std::printf("     failed: %s\n", s.c_str());
    if (!pass) {
      if (allowed.count(id))
        std::printf("     known failure, allowed by --allow-fail %d\n", id);
      else
        ++unexpected;
    }
    std::fflush(stdout);
  }
  return unexpected ? 1 : 0;
}
