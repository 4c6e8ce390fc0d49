#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diffelim/elim.hpp"
#include "diffelim/polynomial.hpp"
#include "diffelim/random.hpp"
#include "diffelim/scalar.hpp"

namespace diffelim {

/// |S| = ceil(d^(q+r) / (1 - p)), exact. Throws PreconditionError unless
/// d >= 1 and 0 < p < 1.
Integer sample_size(unsigned long d, std::size_t q, std::size_t r, const Rational& p);

struct RandomizedVerdict {
  bool elimination_possible = false;
  Rational p;
  Integer sample_size;  // S = {0, ..., sample_size - 1}
  std::vector<std::string> point_vars;
  std::vector<Integer> point;
  std::uint64_t seed = 0;
  std::string generator = Rng::kName;
  unsigned long d = 0;
  std::size_t q = 0, r = 0;
  bool fiber_empty = false;          // 1 lies in the substituted ideal
  std::string method;                // how fiber_empty was decided
  std::optional<int> depth;          // DAE check: depth of this verdict
  std::optional<Integer> bound;      // DAE check: prolongation bound used
  bool conclusive = true;            // false when the depth cap stopped the DAE check
  std::string note;
};

struct RandcheckOptions {
  /// Decide "fiber nonempty" modulo a 61-bit prime and only confirm
  /// "fiber empty" over Q.
  bool modular_prefilter = true;
  std::uint64_t prime = ModP::kDefaultPrime;
  ResourceLimits limits;
};

/// Draws a from S^r and reports elimination as possible iff the fiber
/// F(x, a) = 0 is empty, i.e. 1 lies in the substituted ideal.
RandomizedVerdict dominance_check(std::span<const Polynomial> F, std::span<const VarIndex> x_vars,
                                  std::span<const VarIndex> y_vars, const Rational& p, std::uint64_t seed,
                                  const RandcheckOptions& opts = {});

/// Prolongs to N = 0..B (B from compute_bound, capped by cfg.max_depth) and
/// runs dominance_check at each depth with q = #eliminate variables and
/// r = #keep variables and parameters present. Returns the first depth
/// certifying elimination, else "impossible" at the last depth.
RandomizedVerdict randomized_dae_check(const DiffSystem& S, const Rational& p, std::uint64_t seed,
                                       const EliminationConfig& cfg, const RandcheckOptions& opts = {});

}  // namespace diffelim
