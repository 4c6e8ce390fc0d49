#include "diffelim/var_registry.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace diffelim {

std::string DiffVariable::to_string() const {
  if (order <= 3) return base + std::string(order, '\'');
  return base + "^(" + std::to_string(order) + ")";
}

std::optional<DiffVariable> DiffVariable::parse(std::string_view text) {
  auto is_ident = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || static_cast<unsigned char>(c) >= 0x80;
  };
  std::size_t n = 0;
  while (n < text.size() && is_ident(text[n])) ++n;
  if (n == 0 || std::isdigit(static_cast<unsigned char>(text[0]))) return std::nullopt;
  DiffVariable v{std::string(text.substr(0, n)), 0};
  std::string_view rest = text.substr(n);
  if (rest.empty()) return v;
  if (rest.front() == '\'') {
    for (char c : rest)
      if (c != '\'') return std::nullopt;
    v.order = static_cast<unsigned>(rest.size());
    return v;
  }
  if (rest.size() >= 4 && rest.substr(0, 2) == "^(" && rest.back() == ')') {
    auto digits = rest.substr(2, rest.size() - 3);
    unsigned k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
    v.order = k;
    return v;
  }
  return std::nullopt;
}

VarIndex VarRegistry::intern(const DiffVariable& v) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = index_.find(v); it != index_.end()) return it->second;
  }
  std::unique_lock lock(mutex_);
  if (auto it = index_.find(v); it != index_.end()) return it->second;
  auto idx = static_cast<VarIndex>(vars_.size());
  vars_.push_back(v);
  index_.emplace(v, idx);
  return idx;
}

std::optional<VarIndex> VarRegistry::find(const DiffVariable& v) const {
  std::shared_lock lock(mutex_);
  if (auto it = index_.find(v); it != index_.end()) return it->second;
  return std::nullopt;
}

const DiffVariable& VarRegistry::at(VarIndex i) const {
  std::shared_lock lock(mutex_);
  if (i >= vars_.size()) throw std::out_of_range("variable index out of range");
  return vars_[i];
}

std::size_t VarRegistry::size() const {
  std::shared_lock lock(mutex_);
  return vars_.size();
}

}  // namespace diffelim
