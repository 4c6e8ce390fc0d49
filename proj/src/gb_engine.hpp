#pragma once

// Buchberger engine over a dense, order-permuted exponent layout.
//
// Internal header: the public surface is diffelim/groebner.hpp. The engine is
// parameterised by a coefficient policy: fraction-free integers (content is
// removed after every reduction step), rationals, or GF(p).

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "diffelim/error.hpp"
#include "diffelim/groebner.hpp"
#include "diffelim/monomial.hpp"
#include "diffelim/polynomial.hpp"
#include "diffelim/scalar.hpp"

namespace diffelim::detail {

using Exp = std::uint32_t;

/// Monomial order on internal positions 0..n-1 (blocks are contiguous).
struct Layout {
  struct Range {
    std::size_t begin, end;
    OrderKind kind;
  };
  std::size_t n = 0;
  std::vector<Range> blocks;

  explicit Layout(const MonomialOrder& ord) : n(ord.size()) {
    std::size_t at = 0;
    for (const auto& b : ord.blocks()) {
      blocks.push_back({at, at + b.vars.size(), b.inner});
      at += b.vars.size();
    }
  }

  int compare(const Exp* a, const Exp* b) const {
    for (const auto& r : blocks) {
      if (r.kind == OrderKind::Lex) {
        for (std::size_t i = r.begin; i < r.end; ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      } else {
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = r.begin; i < r.end; ++i) {
          da += a[i];
          db += b[i];
        }
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = r.end; i-- > r.begin;)
          if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
    }
    return 0;
  }
};

inline std::uint64_t degree(const Exp* a, std::size_t n) {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < n; ++i) d += a[i];
  return d;
}

inline bool divides(const Exp* a, const Exp* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline std::uint64_t divmask(const Exp* a, std::size_t n) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (a[i]) m |= std::uint64_t{1} << (i % 64);
  return m;
}

inline bool coprime(const Exp* a, const Exp* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] && b[i]) return false;
  return true;
}

template <class C>
struct IPoly {
  std::vector<Exp> exps;
  std::vector<C> coeffs;
  std::size_t size() const { return coeffs.size(); }
  bool empty() const { return coeffs.empty(); }
  const Exp* mono(std::size_t i, std::size_t n) const { return exps.data() + i * n; }
};

// ---- coefficient policies -------------------------------------------------

struct IntegerOps {
  using C = Integer;
  static constexpr bool kField = false;
  static bool is_zero(const C& c) { return c == 0; }
  static bool is_one(const C& c) { return c == 1; }
  // a * cf == b * cg with (a, b) as small as possible and a > 0
  static void multipliers(const C& cf, const C& cg, C& a, C& b) {
    C g;
    mpz_gcd(g.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), cg.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), cf.get_mpz_t(), g.get_mpz_t());
    if (a < 0) {
      a = -a;
      b = -b;
    }
  }
  static void normalize(std::vector<C>& cs) {
    if (cs.empty()) return;
    C g = 0;
    for (const auto& c : cs) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
    if (cs.front() < 0) g = -g;
    if (g != 1)
      for (auto& c : cs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  static std::size_t bits(const C& c) { return bit_length(c); }
  static C from_rational_scaled(const Rational& q, const Integer& scale) { return C(q * scale); }
  static Rational to_rational(const C& c) { return Rational(c); }
};

struct RationalOps {
  using C = Rational;
  static constexpr bool kField = true;
  static bool is_zero(const C& c) { return c == 0; }
  static bool is_one(const C& c) { return c == 1; }
  static void multipliers(const C& cf, const C& cg, C& a, C& b) {
    a = 1;
    b = cg == 1 ? cf : C(cf / cg);
  }
  static void normalize(std::vector<C>& cs) {
    if (cs.empty() || cs.front() == 1) return;
    C inv = 1 / cs.front();
    for (auto& c : cs) c *= inv;
  }
  static std::size_t bits(const C& c) { return std::max(bit_length(c.get_num()), bit_length(c.get_den())); }
  static C from_rational_scaled(const Rational& q, const Integer&) { return q; }
  static Rational to_rational(const C& c) { return c; }
};

struct ModPOps {
  using C = ModP;
  static constexpr bool kField = true;
  static bool is_zero(const C& c) { return c.is_zero(); }
  static bool is_one(const C& c) { return c.value() == 1; }
  static void multipliers(const C& cf, const C& cg, C& a, C& b) {
    a = C(1);
    b = cg.value() == 1 ? cf : cf / cg;
  }
  static void normalize(std::vector<C>& cs) {
    if (cs.empty() || cs.front().value() == 1) return;
    C inv = cs.front().inverse();
    for (auto& c : cs) c *= inv;
  }
  static std::size_t bits(const C&) { return 0; }
  static C from_rational_scaled(const Rational& q, const Integer&) { return ModP::from_rational(q); }
  static Rational to_rational(const C& c) { return Rational(Integer(std::to_string(c.value()), 10)); }
};

// ---- engine ---------------------------------------------------------------

template <class Ops>
class Engine {
 public:
  using C = typename Ops::C;
  using Poly = IPoly<C>;

  Engine(const MonomialOrder& ord, const ResourceLimits& limits)
      : ord_(ord), layout_(ord), n_(ord.size()), limits_(limits), start_(std::chrono::steady_clock::now()) {}

  std::size_t nvars() const { return n_; }
  const Layout& layout() const { return layout_; }

  Poly import(const Polynomial& p) const {
    std::vector<Term> terms = p.terms();
    Integer scale = 1;
    if constexpr (!Ops::kField)
      for (const auto& t : terms) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), t.coeff.get_den_mpz_t());
    struct Row {
      std::vector<Exp> e;
      C c;
    };
    std::vector<Row> rows;
    rows.reserve(terms.size());
    for (const auto& t : terms) {
      Row r{std::vector<Exp>(n_, 0), Ops::from_rational_scaled(t.coeff, scale)};
      for (auto [v, e] : t.mono.support()) {
        auto pos = ord_.position(v);
        if (!pos) throw PreconditionError("polynomial uses a variable outside the monomial order");
        r.e[*pos] = e;
      }
      if (!Ops::is_zero(r.c)) rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end(),
              [&](const Row& a, const Row& b) { return layout_.compare(a.e.data(), b.e.data()) > 0; });
    Poly out;
    for (auto& r : rows) {
      out.exps.insert(out.exps.end(), r.e.begin(), r.e.end());
      out.coeffs.push_back(std::move(r.c));
    }
    return out;
  }

  Polynomial export_poly(const Poly& p, const std::shared_ptr<VarRegistry>& reg) const {
    std::vector<Term> terms;
    terms.reserve(p.size());
    const auto& vars = ord_.variables();
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::vector<std::pair<VarIndex, Exponent>> pairs;
      const Exp* m = p.mono(i, n_);
      for (std::size_t k = 0; k < n_; ++k)
        if (m[k]) pairs.emplace_back(vars[k], m[k]);
      terms.push_back({Monomial::from_pairs(pairs), Ops::to_rational(p.coeffs[i])});
    }
    return Polynomial(reg, std::move(terms));
  }

  Monomial export_monomial(const Exp* m) const {
    std::vector<std::pair<VarIndex, Exponent>> pairs;
    const auto& vars = ord_.variables();
    for (std::size_t k = 0; k < n_; ++k)
      if (m[k]) pairs.emplace_back(vars[k], m[k]);
    return Monomial::from_pairs(pairs);
  }

  /// a * f[f_from..] - b * m * g[g_from..]; m may be null (meaning 1).
  Poly combine(const C& a, const Poly& f, std::size_t f_from, const C& b, const Exp* m, const Poly& g,
               std::size_t g_from) const {
    Poly out;
    out.exps.reserve((f.size() - f_from + g.size() - g_from) * n_);
    out.coeffs.reserve(f.size() - f_from + g.size() - g_from);
    std::vector<Exp> tmp(n_);
    bool a_one = Ops::is_one(a);
    auto load = [&](std::size_t j) {
      const Exp* ge = g.mono(j, n_);
      for (std::size_t k = 0; k < n_; ++k) tmp[k] = ge[k] + (m ? m[k] : 0);
    };
    std::size_t i = f_from, j = g_from;
    if (j < g.size()) load(j);
    while (i < f.size() || j < g.size()) {
      int c;
      if (i == f.size())
        c = -1;
      else if (j == g.size())
        c = 1;
      else
        c = layout_.compare(f.mono(i, n_), tmp.data());
      if (c > 0) {
        out.exps.insert(out.exps.end(), f.mono(i, n_), f.mono(i, n_) + n_);
        out.coeffs.push_back(a_one ? f.coeffs[i] : C(a * f.coeffs[i]));
        ++i;
      } else if (c < 0) {
        out.exps.insert(out.exps.end(), tmp.begin(), tmp.end());
        out.coeffs.push_back(C(-(b * g.coeffs[j])));
        if (++j < g.size()) load(j);
      } else {
        C v = a_one ? C(f.coeffs[i] - b * g.coeffs[j]) : C(a * f.coeffs[i] - b * g.coeffs[j]);
        if (!Ops::is_zero(v)) {
          out.exps.insert(out.exps.end(), tmp.begin(), tmp.end());
          out.coeffs.push_back(std::move(v));
        }
        ++i;
        if (++j < g.size()) load(j);
      }
    }
    return out;
  }

  void normalize(Poly& p) const { Ops::normalize(p.coeffs); }

  /// Index into `reducers` of a polynomial whose leading monomial divides t.
  std::optional<std::size_t> find_reducer(const Exp* t, const std::vector<std::size_t>& reducers) const {
    std::uint64_t tm = divmask(t, n_);
    std::optional<std::size_t> best;
    for (std::size_t idx : reducers) {
      const Lead& ld = leads_[idx];
      if ((ld.mask & ~tm) != 0) continue;
      if (!divides(polys_[idx].exps.data(), t, n_)) continue;
      if (!best || polys_[idx].size() < polys_[*best].size()) best = idx;
    }
    return best;
  }

  /// Full reduction of f by the polynomials listed in reducers. Over the
  /// integers the result is a nonzero integer multiple of the normal form.
  Poly reduce(Poly f, const std::vector<std::size_t>& reducers) { return reduce_from(std::move(f), 0, reducers); }

  void check_limits(const Poly& f) {
    if (limits_.max_coeff_bits) {
      for (const auto& c : f.coeffs) {
        std::size_t bits = Ops::bits(c);
        stats_.max_coeff_bits = std::max(stats_.max_coeff_bits, bits);
        if (bits > limits_.max_coeff_bits)
          throw ResourceLimitExceeded("coefficient size exceeded " + std::to_string(limits_.max_coeff_bits) +
                                      " bits");
      }
    }
    check_time();
  }

  void check_time() const {
    if (limits_.timeout_seconds > 0) {
      std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
      if (el.count() > limits_.timeout_seconds)
        throw ResourceLimitExceeded("wall-time limit of " + std::to_string(limits_.timeout_seconds) +
                                    " s exceeded");
    }
  }

  std::size_t add_poly(Poly p) {
    Lead ld;
    ld.mask = divmask(p.exps.data(), n_);
    ld.deg = degree(p.exps.data(), n_);
    polys_.push_back(std::move(p));
    leads_.push_back(ld);
    return polys_.size() - 1;
  }

  const Poly& poly(std::size_t i) const { return polys_[i]; }

  /// Runs Buchberger's algorithm; returns indices of the reduced basis sorted
  /// by increasing leading monomial.
  std::vector<std::size_t> run(std::vector<Poly> gens) {
    std::sort(gens.begin(), gens.end(), [&](const Poly& x, const Poly& y) {
      if (x.empty() || y.empty()) return !x.empty() && y.empty();
      return layout_.compare(x.exps.data(), y.exps.data()) < 0;
    });
    for (auto& g : gens) {
      if (g.empty()) continue;
      Poly h = reduce(std::move(g), basis_);
      if (h.empty()) continue;
      normalize(h);
      if (is_constant(h)) return unit_basis(std::move(h));
      update(add_poly(std::move(h)));
    }
    while (!pairs_.empty()) {
      auto it = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& x, const Pair& y) {
        if (x.deg != y.deg) return x.deg < y.deg;
        int c = layout_.compare(x.lcm.data(), y.lcm.data());
        if (c != 0) return c < 0;
        return x.serial < y.serial;
      });
      Pair p = std::move(*it);
      *it = std::move(pairs_.back());
      pairs_.pop_back();
      ++stats_.pairs_reduced;
      if (limits_.max_pairs && stats_.pairs_reduced > limits_.max_pairs)
        throw ResourceLimitExceeded("pair limit of " + std::to_string(limits_.max_pairs) + " exceeded");
      Poly s = spoly(p.i, p.j);
      Poly h = reduce(std::move(s), basis_);
      if (h.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      normalize(h);
      if (is_constant(h)) return unit_basis(std::move(h));
      update(add_poly(std::move(h)));
    }
    return interreduce();
  }

  const GroebnerStats& stats() const { return stats_; }

 private:
  struct Lead {
    std::uint64_t mask = 0;
    std::uint64_t deg = 0;
  };
  struct Pair {
    std::size_t i, j;
    std::vector<Exp> lcm;
    std::uint64_t deg;
    std::uint64_t serial;
  };

  bool is_constant(const Poly& h) const { return h.size() == 1 && degree(h.exps.data(), n_) == 0; }

  std::vector<std::size_t> unit_basis(Poly h) {
    h.coeffs[0] = C(1);
    pairs_.clear();
    basis_ = {add_poly(std::move(h))};
    return basis_;
  }

  std::vector<Exp> lcm_of(std::size_t i, std::size_t j) const {
    std::vector<Exp> l(n_);
    const Exp* a = polys_[i].exps.data();
    const Exp* b = polys_[j].exps.data();
    for (std::size_t k = 0; k < n_; ++k) l[k] = std::max(a[k], b[k]);
    return l;
  }

  Poly spoly(std::size_t i, std::size_t j) {
    const Poly& f = polys_[i];
    const Poly& g = polys_[j];
    std::vector<Exp> l = lcm_of(i, j), mf(n_), mg(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      mf[k] = l[k] - f.exps[k];
      mg[k] = l[k] - g.exps[k];
    }
    C a, b;
    Ops::multipliers(f.coeffs[0], g.coeffs[0], a, b);
    // a*mf*f - b*mg*g with the leading terms cancelling
    Poly fm;
    fm.exps.reserve((f.size() - 1) * n_);
    for (std::size_t t = 1; t < f.size(); ++t) {
      const Exp* e = f.mono(t, n_);
      for (std::size_t k = 0; k < n_; ++k) fm.exps.push_back(e[k] + mf[k]);
      fm.coeffs.push_back(f.coeffs[t]);
    }
    return combine(a, fm, 0, b, mg.data(), g, 1);
  }

  // Gebauer-Moeller installation of a new basis element h.
  void update(std::size_t h) {
    const Exp* lh = polys_[h].exps.data();
    struct Cand {
      std::size_t g;
      std::vector<Exp> lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (std::size_t g : basis_) cands.push_back({g, lcm_of(h, g), coprime(lh, polys_[g].exps.data(), n_)});

    std::vector<bool> keep(cands.size(), true);
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].coprime) continue;
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (!divides(cands[b].lcm.data(), cands[a].lcm.data(), n_)) continue;
        // strict divisibility, or equal lcm with a tie broken by position
        bool equal = std::equal(cands[a].lcm.begin(), cands[a].lcm.end(), cands[b].lcm.begin());
        if (!equal || b < a) {
          keep[a] = false;
          break;
        }
      }
    }
    std::vector<Pair> fresh;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (!keep[a]) {
        ++stats_.pairs_skipped;
        continue;
      }
      if (cands[a].coprime) {
        ++stats_.pairs_skipped;
        continue;
      }
      std::uint64_t d = degree(cands[a].lcm.data(), n_);
      fresh.push_back({cands[a].g, h, std::move(cands[a].lcm), d, serial_++});
    }

    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + fresh.size());
    for (auto& p : pairs_) {
      bool drop = divides(lh, p.lcm.data(), n_);
      if (drop) {
        auto li = lcm_of(p.i, h), lj = lcm_of(p.j, h);
        if (std::equal(li.begin(), li.end(), p.lcm.begin()) || std::equal(lj.begin(), lj.end(), p.lcm.begin()))
          drop = false;
      }
      if (drop)
        ++stats_.pairs_skipped;
      else
        kept.push_back(std::move(p));
    }
    for (auto& p : fresh) kept.push_back(std::move(p));
    pairs_ = std::move(kept);

    std::vector<std::size_t> nb;
    for (std::size_t g : basis_)
      if (!divides(lh, polys_[g].exps.data(), n_)) nb.push_back(g);
    nb.push_back(h);
    basis_ = std::move(nb);
    stats_.basis_size = std::max(stats_.basis_size, basis_.size());
  }

  // Tail-reduces the minimal basis in increasing order of leading monomial;
  // a term below lm(g) can only be divided by smaller leading monomials.
  std::vector<std::size_t> interreduce() {
    std::vector<std::size_t> order = basis_;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return layout_.compare(polys_[x].exps.data(), polys_[y].exps.data()) < 0;
    });
    std::vector<std::size_t> done;
    for (std::size_t idx : order) {
      Poly red = reduce_from(polys_[idx], 1, done);
      normalize(red);
      done.push_back(add_poly(std::move(red)));
    }
    basis_ = done;
    return done;
  }

  Poly reduce_from(Poly f, std::size_t done, const std::vector<std::size_t>& reducers) {
    if constexpr (Ops::kField)
      return reduce_buckets(std::move(f), done, reducers);
    else
      return reduce_merge(std::move(f), done, reducers);
  }

  // Fraction-free reduction: the whole remainder is rescaled at every step.
  Poly reduce_merge(Poly f, std::size_t done, const std::vector<std::size_t>& reducers) {
    std::vector<Exp> quot(n_);
    C a, b;
    while (done < f.size()) {
      const Exp* t = f.mono(done, n_);
      auto r = find_reducer(t, reducers);
      if (!r) {
        ++done;
        continue;
      }
      const Poly& g = polys_[*r];
      for (std::size_t k = 0; k < n_; ++k) quot[k] = t[k] - g.exps[k];
      Ops::multipliers(f.coeffs[done], g.coeffs[0], a, b);
      Poly head;
      head.exps.assign(f.exps.begin(), f.exps.begin() + done * n_);
      head.coeffs.assign(f.coeffs.begin(), f.coeffs.begin() + done);
      if (!Ops::is_one(a))
        for (auto& c : head.coeffs) c = C(c * a);
      Poly tail = combine(a, f, done + 1, b, quot.data(), g, 1);
      head.exps.insert(head.exps.end(), tail.exps.begin(), tail.exps.end());
      head.coeffs.insert(head.coeffs.end(), std::make_move_iterator(tail.coeffs.begin()),
                         std::make_move_iterator(tail.coeffs.end()));
      f = std::move(head);
      Ops::normalize(f.coeffs);
      check_limits(f);
    }
    return f;
  }

  // Geobucket accumulator: bucket k holds at most 4^(k+1) terms, so each
  // reduction step merges into a short polynomial.
  class Buckets {
   public:
    explicit Buckets(const Engine& e) : e_(e) {}

    void add(Poly g) {
      if (g.empty()) return;
      std::size_t k = 0;
      while (capacity(k) < g.size()) ++k;
      while (true) {
        if (k >= slots_.size()) slots_.resize(k + 1);
        Slot& s = slots_[k];
        if (s.start < s.p.size()) g = e_.combine(C(1), s.p, s.start, C(-1), nullptr, g, 0);
        s.p = Poly{};
        s.start = 0;
        if (g.size() <= capacity(k)) {
          s.p = std::move(g);
          return;
        }
        ++k;
      }
    }

    // Removes and returns the leading term; false once everything cancelled.
    bool pop_leading(std::vector<Exp>& mono, C& coeff) {
      const std::size_t n = e_.n_;
      while (true) {
        std::size_t best = slots_.size();
        for (std::size_t k = 0; k < slots_.size(); ++k) {
          const Slot& s = slots_[k];
          if (s.start >= s.p.size()) continue;
          if (best == slots_.size() ||
              e_.layout_.compare(s.p.mono(s.start, n), slots_[best].p.mono(slots_[best].start, n)) > 0)
            best = k;
        }
        if (best == slots_.size()) return false;
        const Exp* lead = slots_[best].p.mono(slots_[best].start, n);
        mono.assign(lead, lead + n);
        coeff = slots_[best].p.coeffs[slots_[best].start];
        ++slots_[best].start;
        for (std::size_t k = 0; k < slots_.size(); ++k) {
          Slot& s = slots_[k];
          if (k == best || s.start >= s.p.size()) continue;
          if (std::equal(mono.begin(), mono.end(), s.p.mono(s.start, n))) {
            coeff = C(coeff + s.p.coeffs[s.start]);
            ++s.start;
          }
        }
        if (!Ops::is_zero(coeff)) return true;
      }
    }

   private:
    struct Slot {
      Poly p;
      std::size_t start = 0;
    };
    static std::size_t capacity(std::size_t k) { return std::size_t{4} << (2 * k); }

    const Engine& e_;
    std::vector<Slot> slots_;
  };

  Poly reduce_buckets(Poly f, std::size_t done, const std::vector<std::size_t>& reducers) {
    Poly out;
    out.exps.assign(f.exps.begin(), f.exps.begin() + done * n_);
    out.coeffs.assign(f.coeffs.begin(), f.coeffs.begin() + done);
    Buckets acc(*this);
    {
      Poly rest;
      rest.exps.assign(f.exps.begin() + done * n_, f.exps.end());
      rest.coeffs.assign(f.coeffs.begin() + done, f.coeffs.end());
      acc.add(std::move(rest));
    }
    const Poly empty;
    std::vector<Exp> t, quot(n_);
    C c, a, b;
    std::size_t steps = 0;
    while (acc.pop_leading(t, c)) {
      auto r = find_reducer(t.data(), reducers);
      if (!r) {
        out.exps.insert(out.exps.end(), t.begin(), t.end());
        out.coeffs.push_back(c);
        continue;
      }
      const Poly& g = polys_[*r];
      for (std::size_t k = 0; k < n_; ++k) quot[k] = t[k] - g.exps[k];
      Ops::multipliers(c, g.coeffs[0], a, b);
      acc.add(combine(C(1), empty, 0, b, quot.data(), g, 1));
      if (++steps % 64 == 0) check_time();
    }
    check_limits(out);
    return out;
  }

  MonomialOrder ord_;
  Layout layout_;
  std::size_t n_;
  ResourceLimits limits_;
  std::chrono::steady_clock::time_point start_;
  std::vector<Poly> polys_;
  std::vector<Lead> leads_;
  std::vector<std::size_t> basis_;
  std::vector<Pair> pairs_;
  std::uint64_t serial_ = 0;
  GroebnerStats stats_;
};

}  // namespace diffelim::detail
