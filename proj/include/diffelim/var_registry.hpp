#pragma once

#include <compare>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>

namespace diffelim {

using VarIndex = std::uint32_t;

/// A coordinate of the polynomial ring: the j-th derivative of a base name.
/// Rendering: x^(0) -> "x", x^(1) -> "x'", up to three primes, then "x^(j)".
struct DiffVariable {
  std::string base;
  unsigned order = 0;

  auto operator<=>(const DiffVariable&) const = default;

  std::string to_string() const;
  DiffVariable derivative() const { return {base, order + 1}; }
  /// Inverse of to_string(); nullopt on anything that is not a rendered variable.
  static std::optional<DiffVariable> parse(std::string_view text);
};

/// Append-only table of ring coordinates shared by every polynomial of one
/// computation. Indices never change meaning once handed out, so encoded
/// monomials stay valid while derivatives are being added.
class VarRegistry {
 public:
  VarRegistry() = default;
  VarRegistry(const VarRegistry&) = delete;
  VarRegistry& operator=(const VarRegistry&) = delete;

  static std::shared_ptr<VarRegistry> create() { return std::make_shared<VarRegistry>(); }

  /// Index of v, appending it when absent.
  VarIndex intern(const DiffVariable& v);
  std::optional<VarIndex> find(const DiffVariable& v) const;
  const DiffVariable& at(VarIndex i) const;
  std::string name(VarIndex i) const { return at(i).to_string(); }
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::deque<DiffVariable> vars_;
  std::map<DiffVariable, VarIndex> index_;
};

}  // namespace diffelim
