#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diffelim/bounds.hpp"
#include "diffelim/diff_system.hpp"
#include "diffelim/groebner.hpp"

namespace diffelim {

struct EliminationConfig {
  TheoremChoice theorem = TheoremChoice::Auto;
  bool assert_radical = false;
  bool augment_derivatives = false;
  unsigned trials = 3;
  std::uint64_t seed = 0;
  /// Depth cap of the search loop; a bound beyond it gives an inconclusive
  /// outcome unless a relation shows up first.
  int max_depth = 8;
  ResourceLimits limits;
  /// Specialisation values are drawn uniformly from [-range, range].
  std::int64_t specialization_range = 1 << 15;
};

/// Dimension data of the system over the field generated by the keep
/// variables, obtained by specialising keep variables and parameters.
struct DimensionEstimate {
  int m = -1;  // -1: the specialised ideal was trivial
  std::optional<Integer> degree_top;
  bool equidimensional = false;  // zero-dimensional, or a complete intersection
  bool radical_verified = false;
  std::string radical_method;  // empty when radicality was not examined
  unsigned window_size = 0;    // |alpha| variables of the ring
  unsigned trials = 0;
  unsigned agreeing = 0;  // trials matching the modal (m, degree) pair
};

DimensionEstimate dim_over_param_field(const DiffSystem& S, const EliminationConfig& cfg);

/// Degrees of the equations in the eliminate variables.
struct DegreeData {
  unsigned long d = 0;   // max
  unsigned long d0 = 0;  // min over equations involving eliminate variables
};
DegreeData eliminate_degrees(const DiffSystem& S);

/// Runs augmentation (when configured), the dimension estimate, and the
/// theorem selection policy.
BoundReport compute_bound(const DiffSystem& S, const EliminationConfig& cfg,
                          DimensionEstimate* estimate = nullptr);

enum class Verdict { RelationFound, NoRelationUpToBound, Inconclusive };
std::string to_string(Verdict v);

struct DepthRecord {
  int depth = 0;
  std::size_t equations = 0;
  std::size_t variables = 0;
  GroebnerStats gb;
  double seconds = 0;
};

struct EliminationReport {
  Verdict verdict = Verdict::Inconclusive;
  BoundReport bound;
  DimensionEstimate estimate;
  std::optional<int> depth;  // depth at which relations appeared
  std::vector<Polynomial> relations;
  std::vector<DepthRecord> depths;
  int depth_reached = -1;
  std::string inconclusive_reason;
  std::vector<std::string> notes;
};

/// Prolongs to N = 0, 1, ... and returns the first nonzero elimination ideal
/// in the keep variables and parameters. Relations are primitive over the
/// integers with positive leading coefficient under the elimination order.
EliminationReport run_elimination(const DiffSystem& S, const EliminationConfig& cfg);

/// Variables of the prolonged system to keep: keep variables and parameters.
std::vector<VarIndex> keep_block(const DiffSystem& S);

/// True iff 1 is not in the ideal generated by prolong(S, depth).
bool check_consistency(const DiffSystem& S, int depth, const GroebnerOptions& opts = {});

}  // namespace diffelim
