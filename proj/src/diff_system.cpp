#include "diffelim/diff_system.hpp"

#include <algorithm>
#include <set>

#include "diffelim/error.hpp"

namespace diffelim {

std::optional<VarRole> DiffSystem::role_of(const std::string& base) const {
  auto in = [&](const std::vector<std::string>& v) { return std::find(v.begin(), v.end(), base) != v.end(); };
  if (in(eliminate)) return VarRole::Eliminate;
  if (in(keep)) return VarRole::Keep;
  if (in(params)) return VarRole::Parameter;
  return std::nullopt;
}

void DiffSystem::validate() const {
  if (!registry) throw PreconditionError("system without a variable registry");
  std::set<std::string> seen;
  for (const auto* group : {&eliminate, &keep, &params})
    for (const auto& name : *group)
      if (!seen.insert(name).second) throw PreconditionError("variable '" + name + "' declared twice");
  for (const auto& eq : equations) {
    if (eq.registry() && eq.registry() != registry) throw RegistryMismatch();
    for (VarIndex v : eq.variables()) {
      const auto& dv = registry->at(v);
      auto role = role_of(dv.base);
      if (!role) throw PreconditionError("undeclared variable '" + dv.base + "'");
      if (*role == VarRole::Parameter && dv.order > 0)
        throw PreconditionError("parameter '" + dv.base + "' occurs with a derivative");
    }
  }
}

std::vector<VarIndex> DiffSystem::occurring(VarRole role) const {
  std::set<VarIndex> out;
  for (const auto& eq : equations)
    for (VarIndex v : eq.variables())
      if (role_of(v) == role) out.insert(v);
  return {out.begin(), out.end()};
}

Polynomial derive(const Polynomial& p, const std::vector<std::string>& constants) {
  if (p.is_constant()) return Polynomial(p.registry());
  const auto& reg = p.registry();
  Polynomial out(reg);
  for (VarIndex v : p.variables()) {
    const DiffVariable dv = reg->at(v);
    if (std::find(constants.begin(), constants.end(), dv.base) != constants.end()) {
      if (dv.order > 0) throw PreconditionError("derivative of constant '" + dv.base + "' occurs");
      continue;
    }
    VarIndex next = reg->intern(dv.derivative());
    out += p.partial(v) * Polynomial::variable(reg, next);
  }
  return out;
}

Polynomial derive(const Polynomial& p, const DiffSystem& S) { return derive(p, S.params); }

DiffSystem prolong(const DiffSystem& S, int depth) {
  if (depth < 0) throw PreconditionError("negative prolongation depth");
  DiffSystem out = S;
  std::vector<Polynomial> layer = S.equations;
  for (int j = 1; j <= depth; ++j) {
    for (auto& f : layer) f = derive(f, S);
    out.equations.insert(out.equations.end(), layer.begin(), layer.end());
  }
  return out;
}

unsigned OrderTuple::total() const {
  unsigned t = 0;
  for (auto c : counts) t += c;
  return t;
}

unsigned OrderTuple::of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return counts[i];
  return 0;
}

namespace {

OrderTuple tuple_over(const DiffSystem& S, const std::vector<std::string>& names) {
  OrderTuple t{names, std::vector<unsigned>(names.size(), 0)};
  for (const auto& eq : S.equations)
    for (VarIndex v : eq.variables()) {
      const auto& dv = S.registry->at(v);
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == dv.base) t.counts[i] = std::max(t.counts[i], dv.order + 1);
    }
  return t;
}

}  // namespace

OrderTuple order_tuple(const DiffSystem& S) { return tuple_over(S, S.eliminate); }
OrderTuple beta_tuple(const DiffSystem& S) { return tuple_over(S, S.keep); }

DiffSystem augment_derivatives(const DiffSystem& S) {
  const OrderTuple alpha = order_tuple(S);
  auto inside_window = [&](const Polynomial& f, bool& touches_x) {
    touches_x = false;
    for (VarIndex v : f.variables()) {
      const auto& dv = S.registry->at(v);
      if (S.role_of(dv.base) != VarRole::Eliminate) continue;
      touches_x = true;
      if (dv.order >= alpha.of(dv.base)) return false;
    }
    return true;
  };
  auto known = [](const std::vector<Polynomial>& eqs, const Polynomial& f) {
    for (const auto& g : eqs)
      if (g.proportional_to(f)) return true;
    return false;
  };

  DiffSystem out = S;
  std::vector<Polynomial> frontier = S.equations;
  while (!frontier.empty()) {
    std::vector<Polynomial> next;
    for (const auto& f : frontier) {
      bool touches = false;
      inside_window(f, touches);
      if (!touches) continue;
      Polynomial g = derive(f, S);
      if (g.is_zero()) continue;
      bool g_touches = false;
      if (!inside_window(g, g_touches)) continue;
      if (known(out.equations, g)) continue;
      out.equations.push_back(g);
      next.push_back(g);
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace diffelim
