#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "diffelim/polynomial.hpp"
#include "diffelim/var_registry.hpp"

namespace diffelim {

enum class VarRole { Eliminate, Keep, Parameter };

/// Finite set of differential polynomials with the base variables split into
/// eliminate (x), keep (y) and parameters (constants of the derivation).
struct DiffSystem {
  std::shared_ptr<VarRegistry> registry;
  std::vector<Polynomial> equations;
  std::vector<std::string> eliminate;
  std::vector<std::string> keep;
  std::vector<std::string> params;

  std::optional<VarRole> role_of(const std::string& base) const;
  std::optional<VarRole> role_of(VarIndex v) const { return role_of(registry->at(v).base); }

  /// Every variable of every equation has a base name in exactly one group,
  /// names are not declared twice, and parameters occur without derivatives.
  /// Throws PreconditionError otherwise.
  void validate() const;

  /// Registry indices of variables occurring in the equations with the given
  /// role, increasing.
  std::vector<VarIndex> occurring(VarRole role) const;
};

/// Total derivative: sum over variables v of (dp/dv) * v'. Variables whose
/// base is listed in constants have derivative zero; new derivative
/// variables are interned into p's registry.
Polynomial derive(const Polynomial& p, const std::vector<std::string>& constants = {});

/// derive() with the system's parameters as constants.
Polynomial derive(const Polynomial& p, const DiffSystem& S);

/// Equations f^(j) for every f in S and 0 <= j <= depth, listed depth-major
/// (all f, then all f', ...). Throws PreconditionError for negative depth.
DiffSystem prolong(const DiffSystem& S, int depth);

/// alpha_i = 1 + highest derivative order of variable i (0 when absent).
struct OrderTuple {
  std::vector<std::string> names;
  std::vector<unsigned> counts;

  unsigned total() const;
  unsigned of(const std::string& name) const;
};

OrderTuple order_tuple(const DiffSystem& S);  // over S.eliminate
OrderTuple beta_tuple(const DiffSystem& S);   // over S.keep

/// Adds f' for every equation f involving eliminate variables whose
/// derivative keeps each eliminate variable inside its current order window
/// (order < alpha_i), repeating until nothing new appears. Equations equal
/// up to a scalar are added once. The order tuple is unchanged.
DiffSystem augment_derivatives(const DiffSystem& S);

}  // namespace diffelim
