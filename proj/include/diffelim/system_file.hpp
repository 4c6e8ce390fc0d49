#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "diffelim/diff_system.hpp"

namespace diffelim {

// System file grammar (UTF-8, one statement per line or ';'-separated):
//
//   # comment
//   vars x1, x2;          eliminate set
//   keep y1;              keep set
//   params a, b;          constants of the derivation
//   x1' = x2 + a*y1^2     equation, or a bare polynomial meaning "= 0"
//
// Derivatives are written x', x'', x''' or x^(k); "^n" after any factor is a
// power. Numbers are integers or decimals, and "/" divides by a constant.
// Every identifier must be declared in a header.

DiffSystem parse_system(std::string_view text);
DiffSystem load_system(const std::string& path);

/// Canonical text form: the three headers, then one bare polynomial per line.
std::string print_system(const DiffSystem& S);

/// Same partition and equal equations in order, compared by variable names.
bool same_system(const DiffSystem& a, const DiffSystem& b);

/// Moves the named base variables into the keep set; every other declared
/// non-parameter variable becomes an eliminate variable.
DiffSystem with_keep(const DiffSystem& S, const std::vector<std::string>& keep);

/// Rewrites p over another registry, matching variables by name.
Polynomial transport(const Polynomial& p, const std::shared_ptr<VarRegistry>& target);

}  // namespace diffelim
