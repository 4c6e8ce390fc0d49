#include "diffelim/elim.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "diffelim/error.hpp"
#include "diffelim/random.hpp"

namespace diffelim {

namespace {

std::vector<VarIndex> window_variables(const DiffSystem& S) {
  OrderTuple alpha = order_tuple(S);
  std::vector<VarIndex> out;
  for (std::size_t i = 0; i < alpha.names.size(); ++i)
    for (unsigned j = 0; j < alpha.counts[i]; ++j) out.push_back(S.registry->intern({alpha.names[i], j}));
  return out;
}

std::size_t distinct_up_to_scalar(const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> seen;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    bool dup = false;
    for (const auto& h : seen)
      if (h.proportional_to(g)) {
        dup = true;
        break;
      }
    if (!dup) seen.push_back(g);
  }
  return seen.size();
}

struct Trial {
  int m = -1;
  std::optional<Integer> degree;
  bool ci = false;
  std::vector<Polynomial> gens;
  GroebnerBasis basis;
};

Trial run_trial(const DiffSystem& S, const std::vector<VarIndex>& window, const EliminationConfig& cfg, Rng& rng) {
  std::map<VarIndex, Rational> values;
  for (VarRole role : {VarRole::Keep, VarRole::Parameter})
    for (VarIndex v : S.occurring(role))
      values[v] = Rational(rng.uniform_int(-cfg.specialization_range, cfg.specialization_range));
  Trial t;
  for (const auto& eq : S.equations) {
    Polynomial g = eq.substitute(values);
    if (g.is_zero()) continue;
    if (g.is_constant()) return t;  // generically inconsistent
    t.gens.push_back(g.primitive_part());
  }
  GroebnerOptions opts;
  opts.limits = cfg.limits;
  t.basis = buchberger(t.gens, MonomialOrder::grevlex(window), opts);
  if (t.basis.is_unit()) return t;
  t.m = dimension(t.basis);
  t.degree = degree_top(t.basis);
  t.ci = distinct_up_to_scalar(t.gens) == window.size() - static_cast<std::size_t>(t.m);
  return t;
}

}  // namespace

DimensionEstimate dim_over_param_field(const DiffSystem& S, const EliminationConfig& cfg) {
  if (cfg.trials < 1) throw PreconditionError("dim_over_param_field: need at least one trial");
  S.validate();
  const std::vector<VarIndex> window = window_variables(S);
  Rng rng(cfg.seed);
  std::vector<Trial> trials;
  for (unsigned k = 0; k < cfg.trials; ++k) trials.push_back(run_trial(S, window, cfg, rng));

  // modal (m, degree) pair; ties go to the earliest trial
  std::vector<unsigned> votes(trials.size(), 0);
  for (std::size_t a = 0; a < trials.size(); ++a)
    for (std::size_t b = 0; b < trials.size(); ++b)
      if (trials[a].m == trials[b].m && trials[a].degree == trials[b].degree) ++votes[a];
  std::size_t best = 0;
  for (std::size_t a = 1; a < trials.size(); ++a)
    if (votes[a] > votes[best]) best = a;

  DimensionEstimate est;
  const Trial& t = trials[best];
  est.m = t.m;
  est.degree_top = t.degree;
  est.window_size = static_cast<unsigned>(window.size());
  est.trials = cfg.trials;
  est.agreeing = votes[best];
  if (t.m < 0) return est;
  est.equidimensional = t.m == 0 || t.ci;

  GroebnerOptions opts;
  opts.limits = cfg.limits;
  if (t.m == 0) {
    est.radical_verified = is_radical_zero_dimensional(t.basis);
    est.radical_method = "squarefree minimal polynomials (zero-dimensional)";
  } else if (t.ci) {
    // A complete intersection is unmixed, so radicality can be read off a
    // generic zero-dimensional linear slice.
    std::vector<Polynomial> sliced = t.gens;
    auto reg = S.registry;
    for (int k = 0; k < t.m; ++k) {
      Polynomial form = Polynomial::constant(reg, Rational(rng.uniform_int(-cfg.specialization_range,
                                                                           cfg.specialization_range)));
      for (VarIndex v : window)
        form += Polynomial::variable(reg, v) *
                Rational(rng.uniform_int(-cfg.specialization_range, cfg.specialization_range));
      sliced.push_back(form);
    }
    GroebnerBasis G = buchberger(sliced, MonomialOrder::grevlex(window), opts);
    if (!G.is_unit() && dimension(G) == 0) {
      est.radical_verified = is_radical_zero_dimensional(G);
      est.radical_method = "squarefree minimal polynomials on a generic linear slice";
    }
  }
  return est;
}

DegreeData eliminate_degrees(const DiffSystem& S) {
  std::vector<VarIndex> xs = S.occurring(VarRole::Eliminate);
  DegreeData dd;
  bool first = true;
  for (const auto& eq : S.equations) {
    if (eq.is_zero()) continue;
    auto deg = static_cast<unsigned long>(std::max<std::int64_t>(0, eq.degree_in(xs)));
    dd.d = std::max(dd.d, deg);
    if (deg == 0) continue;
    dd.d0 = first ? deg : std::min(dd.d0, deg);
    first = false;
  }
  return dd;
}

BoundReport compute_bound(const DiffSystem& S0, const EliminationConfig& cfg, DimensionEstimate* estimate) {
  DiffSystem S = cfg.augment_derivatives ? augment_derivatives(S0) : S0;
  S.validate();
  const unsigned alpha = order_tuple(S).total();
  const unsigned beta = beta_tuple(S).total();
  const DegreeData dd = eliminate_degrees(S);

  if (alpha == 0 || dd.d == 0) {
    BoundReport rep;
    rep.abs_alpha = alpha;
    rep.abs_beta = beta;
    rep.r = static_cast<unsigned>(S.equations.size());
    rep.d = dd.d;
    rep.d0 = dd.d0;
    rep.B = 0;
    rep.notes.push_back("no eliminate variables occur; every equation is already a relation");
    return rep;
  }

  DimensionEstimate est = dim_over_param_field(S, cfg);
  if (estimate) *estimate = est;

  BoundInputs in;
  in.d = dd.d;
  in.d0 = dd.d0;
  in.abs_alpha = alpha;
  in.abs_beta = beta;
  in.r = static_cast<unsigned>(S.equations.size());
  in.m = est.m;
  in.degree_top = est.degree_top;
  in.equidimensional = est.equidimensional;
  if (cfg.assert_radical) {
    in.radical = true;
    in.radical_source = "asserted";
  } else if (est.radical_verified) {
    in.radical = true;
    in.radical_source = "verified";
  }
  BoundReport rep = select_bound(in, cfg.theorem);
  if (!est.radical_method.empty() && !est.radical_verified && !cfg.assert_radical)
    rep.notes.push_back("radicality check failed: " + est.radical_method);
  if (est.agreeing < est.trials)
    rep.notes.push_back("specialisation trials disagreed: " + std::to_string(est.agreeing) + " of " +
                        std::to_string(est.trials) + " match the reported dimension data");
  return rep;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::RelationFound: return "RELATION_FOUND";
    case Verdict::NoRelationUpToBound: return "NO_RELATION_UP_TO_BOUND";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::vector<VarIndex> keep_block(const DiffSystem& S) {
  std::vector<VarIndex> out = S.occurring(VarRole::Keep);
  for (VarIndex v : S.occurring(VarRole::Parameter)) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

EliminationReport run_elimination(const DiffSystem& S0, const EliminationConfig& cfg) {
  EliminationReport rep;
  DiffSystem S = cfg.augment_derivatives ? augment_derivatives(S0) : S0;
  S.validate();
  if (cfg.augment_derivatives && S.equations.size() > S0.equations.size())
    rep.notes.push_back("augmented with " + std::to_string(S.equations.size() - S0.equations.size()) +
                        " derivative equation(s) inside the order window");

  std::optional<Integer> bound;
  try {
    EliminationConfig inner = cfg;
    inner.augment_derivatives = false;
    rep.bound = compute_bound(S, inner, &rep.estimate);
    bound = rep.bound.B;
  } catch (const ResourceLimitExceeded& e) {
    rep.notes.push_back(std::string("bound computation stopped: ") + e.what());
  }

  Integer limit = Integer(cfg.max_depth);
  if (bound && *bound < limit) limit = *bound;
  GroebnerOptions opts;
  opts.limits = cfg.limits;
  for (int N = 0; Integer(N) <= limit; ++N) {
    auto start = std::chrono::steady_clock::now();
    DiffSystem P = prolong(S, N);
    std::vector<VarIndex> keep = keep_block(P);
    GroebnerBasis G;
    try {
      G = elimination_basis(P.equations, keep, opts);
    } catch (const ResourceLimitExceeded& e) {
      rep.verdict = Verdict::Inconclusive;
      rep.inconclusive_reason = std::string(e.what()) + " at depth " + std::to_string(N);
      return rep;
    }
    DepthRecord rec;
    rec.depth = N;
    rec.equations = P.equations.size();
    rec.variables = G.order().size();
    rec.gb = G.stats();
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rep.depths.push_back(rec);
    rep.depth_reached = N;
    for (const auto& g : G.elements())
      if (g.uses_only(keep)) rep.relations.push_back(g);
    if (!rep.relations.empty()) {
      rep.verdict = Verdict::RelationFound;
      rep.depth = N;
      return rep;
    }
  }
  if (bound && *bound <= Integer(cfg.max_depth)) {
    rep.verdict = Verdict::NoRelationUpToBound;
  } else {
    rep.verdict = Verdict::Inconclusive;
    rep.inconclusive_reason = bound ? "bound " + bound->get_str() + " exceeds the depth cap " +
                                          std::to_string(cfg.max_depth)
                                    : "no bound available; searched to depth " + std::to_string(cfg.max_depth);
  }
  return rep;
}

bool check_consistency(const DiffSystem& S, int depth, const GroebnerOptions& opts) {
  return !contains_one(prolong(S, depth).equations, opts);
}

}  // namespace diffelim
