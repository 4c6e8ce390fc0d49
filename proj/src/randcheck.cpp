#include "diffelim/randcheck.hpp"

#include <map>

#include "diffelim/error.hpp"
#include "diffelim/groebner.hpp"

namespace diffelim {

Integer sample_size(unsigned long d, std::size_t q, std::size_t r, const Rational& p) {
  if (d < 1) throw PreconditionError("sample_size: d must be at least 1");
  if (p <= 0 || p >= 1) throw PreconditionError("sample_size: p must lie strictly between 0 and 1");
  Integer num;
  mpz_ui_pow_ui(num.get_mpz_t(), d, q + r);
  Rational ratio = Rational(num) / (1 - p);
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
  return out;
}

namespace {

bool unit_over_q(const std::vector<Polynomial>& gens, const RandcheckOptions& opts) {
  GroebnerOptions g;
  g.limits = opts.limits;
  return contains_one(gens, g);
}

}  // namespace

RandomizedVerdict dominance_check(std::span<const Polynomial> F, std::span<const VarIndex> x_vars,
                                  std::span<const VarIndex> y_vars, const Rational& p, std::uint64_t seed,
                                  const RandcheckOptions& opts) {
  RandomizedVerdict v;
  v.p = p;
  v.seed = seed;
  v.q = x_vars.size();
  v.r = y_vars.size();
  for (const auto& f : F)
    if (!f.is_zero()) v.d = std::max<unsigned long>(v.d, static_cast<unsigned long>(f.total_degree()));
  if (v.d == 0) v.d = 1;
  v.sample_size = diffelim::sample_size(v.d, v.q, v.r, p);

  Rng rng(seed);
  std::map<VarIndex, Rational> values;
  std::shared_ptr<VarRegistry> reg;
  for (const auto& f : F)
    if (f.registry()) reg = f.registry();
  for (VarIndex y : y_vars) {
    Integer a = rng.uniform_below(v.sample_size);
    v.point.push_back(a);
    v.point_vars.push_back(reg ? reg->name(y) : std::to_string(y));
    values[y] = Rational(a);
  }
  std::vector<Polynomial> fiber;
  for (const auto& f : F) {
    Polynomial g = f.substitute(values);
    if (!g.is_zero()) fiber.push_back(g);
  }

  if (opts.modular_prefilter) {
    GroebnerOptions g;
    g.field = CoefficientField::PrimeField;
    g.prime = opts.prime;
    g.limits = opts.limits;
    bool unit_mod_p = false;
    try {
      unit_mod_p = contains_one(fiber, g);
    } catch (const PreconditionError&) {
      unit_mod_p = true;  // a denominator vanished mod p; decide over Q
    }
    if (!unit_mod_p) {
      v.fiber_empty = false;
      v.method = "fiber nonempty modulo " + std::to_string(opts.prime);
    } else {
      v.fiber_empty = unit_over_q(fiber, opts);
      v.method = v.fiber_empty ? "1 in the fiber ideal over Q" : "fiber nonempty over Q (prime was unlucky)";
    }
  } else {
    v.fiber_empty = unit_over_q(fiber, opts);
    v.method = v.fiber_empty ? "1 in the fiber ideal over Q" : "fiber nonempty over Q";
  }
  v.elimination_possible = v.fiber_empty;
  return v;
}

RandomizedVerdict randomized_dae_check(const DiffSystem& S0, const Rational& p, std::uint64_t seed,
                                       const EliminationConfig& cfg, const RandcheckOptions& opts) {
  DiffSystem S = cfg.augment_derivatives ? augment_derivatives(S0) : S0;
  S.validate();
  EliminationConfig inner = cfg;
  inner.augment_derivatives = false;
  BoundReport bound = compute_bound(S, inner);

  Integer cap = Integer(cfg.max_depth);
  bool capped = bound.B > cap;
  int last = static_cast<int>(capped ? cap.get_si() : bound.B.get_si());
  RandomizedVerdict v;
  for (int N = 0; N <= last; ++N) {
    DiffSystem P = prolong(S, N);
    std::vector<VarIndex> xs = P.occurring(VarRole::Eliminate);
    std::vector<VarIndex> ys = keep_block(P);
    v = dominance_check(P.equations, xs, ys, p, Rng::derive(seed, static_cast<std::uint64_t>(N)), opts);
    v.depth = N;
    v.bound = bound.B;
    if (v.elimination_possible) return v;
  }
  v.seed = seed;
  if (capped) {
    v.conclusive = false;
    v.note = "bound " + bound.B.get_str() + " exceeds the depth cap " + std::to_string(cfg.max_depth);
  }
  return v;
}

}  // namespace diffelim
