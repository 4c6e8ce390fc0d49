#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diffelim/var_registry.hpp"

namespace diffelim {

using Exponent = std::uint32_t;

/// Power product over a VarRegistry. Stored as an exponent vector indexed by
/// registry position with trailing zeros trimmed, so the encoding is
/// canonical and stays valid when the registry grows.
class Monomial {
 public:
  Monomial() = default;
  /// x_var^exp
  static Monomial variable(VarIndex var, Exponent exp = 1);
  static Monomial from_exponents(std::vector<Exponent> exps);
  /// Builds from (var, exponent) pairs; repeated variables multiply.
  static Monomial from_pairs(std::span<const std::pair<VarIndex, Exponent>> pairs);

  bool is_one() const { return exps_.empty(); }
  Exponent exponent(VarIndex var) const { return var < exps_.size() ? exps_[var] : 0; }
  std::uint64_t degree() const { return degree_; }
  std::uint64_t degree_in(std::span<const VarIndex> vars) const;
  /// Sparse view: (var, exponent) with strictly increasing var and exponent >= 1.
  std::vector<std::pair<VarIndex, Exponent>> support() const;
  const std::vector<Exponent>& exponents() const { return exps_; }
  std::size_t width() const { return exps_.size(); }

  bool divides(const Monomial& other) const;
  /// this / other; other must divide this.
  Monomial quotient(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

  /// Storage order used by Polynomial: graded, then lexicographic by index.
  friend std::strong_ordering canonical_compare(const Monomial& a, const Monomial& b);

  std::string to_string(const VarRegistry& reg) const;

 private:
  void trim();
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

enum class OrderKind { Lex, Grevlex };

/// Monomial order over an explicit list of ring variables.
///
/// Blocks are compared lexicographically (first block most significant); each
/// block uses its own inner order. Within a block variables are listed from
/// greatest to smallest. The variable set of the order is the variable set of
/// the polynomial ring it is used with.
class MonomialOrder {
 public:
  struct Block {
    std::vector<VarIndex> vars;
    OrderKind inner = OrderKind::Grevlex;
  };

  MonomialOrder() = default;
  static MonomialOrder lex(std::vector<VarIndex> vars);
  static MonomialOrder grevlex(std::vector<VarIndex> vars);
  /// grevlex on registry variables 0..n-1 with 0 greatest
  static MonomialOrder grevlex(std::size_t n);
  static MonomialOrder block(std::vector<Block> blocks);

  const std::vector<Block>& blocks() const { return blocks_; }
  /// All variables, greatest first.
  const std::vector<VarIndex>& variables() const { return flat_; }
  std::size_t size() const { return flat_.size(); }
  bool contains(VarIndex v) const { return position(v).has_value(); }
  std::optional<std::size_t> position(VarIndex v) const;

  /// Throws PreconditionError if either monomial uses a variable outside the order.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string describe(const VarRegistry& reg) const;

 private:
  void index();
  std::vector<Block> blocks_;
  std::vector<VarIndex> flat_;
  std::vector<std::int64_t> pos_;  // registry index -> position, -1 when absent
};

}  // namespace diffelim
