#pragma once

#include <random>
#include <string>
#include <vector>

#include "diffelim/diff_system.hpp"
#include "diffelim/polynomial.hpp"
#include "diffelim/system_file.hpp"

namespace testing_support {

using namespace diffelim;

inline std::string systems_path(const std::string& name) { return std::string(DIFFELIM_SYSTEMS_DIR) + "/" + name; }

inline DiffSystem system_file(const std::string& name) { return load_system(systems_path(name)); }

/// Polynomials over one registry whose base variables are `names`, in order.
struct Ring {
  std::shared_ptr<VarRegistry> reg = VarRegistry::create();
  std::vector<VarIndex> vars;

  explicit Ring(const std::vector<std::string>& names) {
    for (const auto& n : names) vars.push_back(reg->intern({n, 0}));
  }
  Polynomial var(std::size_t i) const { return Polynomial::variable(reg, vars[i]); }
  Polynomial cst(const Rational& c) const { return Polynomial::constant(reg, c); }

  /// Parses each expression with the grammar of system files.
  std::vector<Polynomial> parse_all(const std::vector<std::string>& exprs) const {
    std::string text = "vars ";
    for (std::size_t i = 0; i < vars.size(); ++i) text += (i ? ", " : "") + reg->at(vars[i]).base;
    text += "\n";
    for (const auto& e : exprs) text += e + "\n";
    DiffSystem S = parse_system(text);
    std::vector<Polynomial> out;
    for (const auto& p : S.equations) out.push_back(transport(p, reg));
    return out;
  }
  Polynomial parse(const std::string& expr) const { return parse_all({expr}).at(0); }
};

/// Random polynomial with up to `terms` terms of total degree <= max_deg and
/// integer coefficients in [-range, range].
inline Polynomial random_poly(const Ring& R, std::mt19937_64& rng, int terms, unsigned max_deg, int range = 5) {
  std::uniform_int_distribution<int> coeff(-range, range);
  std::uniform_int_distribution<std::size_t> pick(0, R.vars.size() - 1);
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  Polynomial p = R.cst(0);
  for (int t = 0; t < terms; ++t) {
    unsigned k = deg(rng);
    std::vector<std::pair<VarIndex, Exponent>> pairs;
    for (unsigned j = 0; j < k; ++j) pairs.emplace_back(R.vars[pick(rng)], 1);
    p += Polynomial::monomial(R.reg, Monomial::from_pairs(pairs), Rational(coeff(rng)));
  }
  return p;
}

}  // namespace testing_support
