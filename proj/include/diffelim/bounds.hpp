#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diffelim/scalar.hpp"

namespace diffelim {

// Closed-form prolongation bounds. All results are exact; a value whose
// binary size would exceed kMaxBoundBits raises ResourceLimitExceeded rather
// than being materialised. Powers use the convention 0^0 = 0.

inline constexpr std::size_t kMaxBoundBits = std::size_t{1} << 26;

/// B(m, D) = sum_{i=0}^{m} D^(2(2^i - 1)).
Integer bound_B(unsigned m, const Integer& D);

/// sum over 0 <= i <= j <= m of D_j^(2(2^i - 1)); D lists D_0..D_m.
Integer bound_radical(std::span<const Integer> D);

/// d^((|alpha| - m + 1) 2^(m+1)) for d >= 2, m + 1 for d = 1.
Integer bound_general(unsigned long d, unsigned abs_alpha, unsigned m);

/// As bound_general with |alpha| + |beta| in place of |alpha|.
Integer bound_full(unsigned long d, unsigned abs_alpha, unsigned abs_beta, unsigned m);

/// d0 * d^(min(r, |alpha|) - 1).
Integer noether_bound(unsigned long d0, unsigned long d, unsigned r, unsigned abs_alpha);

/// d0 * d^(|alpha| - i - 1), for 0 <= i <= |alpha| - 1.
Integer component_degree_bound(unsigned long d0, unsigned long d, unsigned abs_alpha, unsigned i);

/// noether_bound * sum_{i=0}^{m} B(i, component_degree_bound(i)).
Integer bound_tighter(unsigned long d0, unsigned long d, unsigned r, unsigned abs_alpha, unsigned m);

/// mu * sum_i B(i, D_i).
Integer bound_prop_any(const Integer& mu, std::span<const Integer> D);

/// d(d+3)/2, the prolongation order forced by the witness systems.
Integer lower_bound_order(unsigned long d);

enum class Theorem { T1, T2, T3, PropAny, Tighter };
enum class TheoremChoice { Auto, T1, T2, T3, Tighter };

std::string to_string(Theorem t);

/// Data feeding the selection policy.
struct BoundInputs {
  unsigned long d = 1;   // max degree in the eliminate variables
  unsigned long d0 = 1;  // min degree in the eliminate variables
  unsigned abs_alpha = 0;
  unsigned abs_beta = 0;
  unsigned r = 0;  // number of equations
  int m = 0;       // dimension over the keep field, -1 if generically inconsistent
  std::optional<Integer> degree_top;  // degree surrogate of the top component
  bool radical = false;
  std::string radical_source;  // "asserted", "verified", or empty
  bool equidimensional = false;
};

struct BoundReport {
  Theorem theorem = Theorem::Tighter;
  unsigned long d = 1, d0 = 1;
  unsigned abs_alpha = 0, abs_beta = 0, r = 0;
  int m = 0;
  unsigned m_bar = 0;  // |alpha| - m
  std::vector<Integer> D;  // D_0..D_m used by the chosen formula
  std::optional<Integer> mu_bound;
  bool radical = false;
  std::string radical_source;
  bool equidimensional = false;
  bool degree_surrogate = false;
  Integer B;
  std::optional<Integer> general;  // T1 value for comparison
  std::optional<Integer> tighter;
  std::vector<std::string> notes;
};

/// Applies the selection policy. Auto: radical and equidimensional data give
/// the radical bound; otherwise the Noether-exponent bound times the
/// component sums when a degree surrogate is known; otherwise the tighter
/// closed form. m < 0 yields B = 0 (nothing to prolong).
BoundReport select_bound(const BoundInputs& in, TheoremChoice choice = TheoremChoice::Auto);

}  // namespace diffelim
