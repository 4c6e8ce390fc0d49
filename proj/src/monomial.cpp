#include "diffelim/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "diffelim/error.hpp"

namespace diffelim {

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial Monomial::variable(VarIndex var, Exponent exp) {
  Monomial m;
  if (exp == 0) return m;
  m.exps_.assign(var + 1, 0);
  m.exps_[var] = exp;
  m.degree_ = exp;
  return m;
}

Monomial Monomial::from_exponents(std::vector<Exponent> exps) {
  Monomial m;
  m.exps_ = std::move(exps);
  m.trim();
  return m;
}

Monomial Monomial::from_pairs(std::span<const std::pair<VarIndex, Exponent>> pairs) {
  Monomial m;
  for (auto [v, e] : pairs) {
    if (v >= m.exps_.size()) m.exps_.resize(v + 1, 0);
    m.exps_[v] += e;
  }
  m.trim();
  return m;
}

std::uint64_t Monomial::degree_in(std::span<const VarIndex> vars) const {
  std::uint64_t d = 0;
  for (VarIndex v : vars) d += exponent(v);
  return d;
}

std::vector<std::pair<VarIndex, Exponent>> Monomial::support() const {
  std::vector<std::pair<VarIndex, Exponent>> out;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i]) out.emplace_back(static_cast<VarIndex>(i), exps_[i]);
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (exps_.size() > other.exps_.size() || degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
  if (!other.divides(*this)) throw PreconditionError("monomial quotient: not divisible");
  Monomial m = *this;
  for (std::size_t i = 0; i < other.exps_.size(); ++i) m.exps_[i] -= other.exps_[i];
  m.trim();
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m;
  m.exps_.assign(std::max(exps_.size(), other.exps_.size()), 0);
  for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] = std::max(exponent(i), other.exponent(i));
  m.trim();
  return m;
}

bool Monomial::coprime(const Monomial& other) const {
  std::size_t n = std::min(exps_.size(), other.exps_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (exps_[i] && other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  m.exps_.assign(std::max(exps_.size(), other.exps_.size()), 0);
  for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] = exponent(i) + other.exponent(i);
  m.degree_ = degree_ + other.degree_;
  return m;
}

std::strong_ordering canonical_compare(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  std::size_t n = std::max(a.exps_.size(), b.exps_.size());
  for (std::size_t i = 0; i < n; ++i) {
    Exponent ea = a.exponent(i), eb = b.exponent(i);
    if (ea != eb) return ea <=> eb;
  }
  return std::strong_ordering::equal;
}

std::string Monomial::to_string(const VarRegistry& reg) const {
  if (is_one()) return "1";
  std::string out;
  for (auto [v, e] : support()) {
    if (!out.empty()) out += '*';
    out += reg.name(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

MonomialOrder MonomialOrder::lex(std::vector<VarIndex> vars) {
  return block({Block{std::move(vars), OrderKind::Lex}});
}

MonomialOrder MonomialOrder::grevlex(std::vector<VarIndex> vars) {
  return block({Block{std::move(vars), OrderKind::Grevlex}});
}

MonomialOrder MonomialOrder::grevlex(std::size_t n) {
  std::vector<VarIndex> vars(n);
  std::iota(vars.begin(), vars.end(), VarIndex{0});
  return grevlex(std::move(vars));
}

MonomialOrder MonomialOrder::block(std::vector<Block> blocks) {
  MonomialOrder o;
  for (auto& b : blocks)
    if (!b.vars.empty()) o.blocks_.push_back(std::move(b));
  o.index();
  return o;
}

void MonomialOrder::index() {
  flat_.clear();
  pos_.clear();
  for (const auto& b : blocks_) {
    for (VarIndex v : b.vars) {
      if (v >= pos_.size()) pos_.resize(v + 1, -1);
      if (pos_[v] != -1) throw PreconditionError("variable listed twice in monomial order");
      pos_[v] = static_cast<std::int64_t>(flat_.size());
      flat_.push_back(v);
    }
  }
}

std::optional<std::size_t> MonomialOrder::position(VarIndex v) const {
  if (v >= pos_.size() || pos_[v] < 0) return std::nullopt;
  return static_cast<std::size_t>(pos_[v]);
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const Monomial* m : {&a, &b})
    for (std::size_t i = 0; i < m->width(); ++i)
      if (m->exponent(static_cast<VarIndex>(i)) && !contains(static_cast<VarIndex>(i)))
        throw PreconditionError("monomial uses a variable outside the monomial order");
  for (const auto& blk : blocks_) {
    if (blk.inner == OrderKind::Lex) {
      for (VarIndex v : blk.vars) {
        Exponent ea = a.exponent(v), eb = b.exponent(v);
        if (ea != eb) return ea <=> eb;
      }
    } else {
      std::uint64_t da = a.degree_in(blk.vars), db = b.degree_in(blk.vars);
      if (da != db) return da <=> db;
      for (auto it = blk.vars.rbegin(); it != blk.vars.rend(); ++it) {
        Exponent ea = a.exponent(*it), eb = b.exponent(*it);
        if (ea != eb) return eb <=> ea;
      }
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::describe(const VarRegistry& reg) const {
  std::string out;
  for (const auto& blk : blocks_) {
    if (!out.empty()) out += " >> ";
    out += blk.inner == OrderKind::Lex ? "lex(" : "grevlex(";
    for (std::size_t i = 0; i < blk.vars.size(); ++i) {
      if (i) out += ",";
      out += reg.name(blk.vars[i]);
    }
    out += ")";
  }
  return out;
}

}  // namespace diffelim
