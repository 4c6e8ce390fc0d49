#include "diffelim/bounds.hpp"

#include <algorithm>

#include "diffelim/error.hpp"

namespace diffelim {

namespace {

// base^exp with 0^0 = 0, refusing results beyond kMaxBoundBits.
Integer power(const Integer& base, const Integer& exp) {
  if (base == 0) return 0;
  if (exp == 0 || base == 1) return 1;
  Integer bits = exp * Integer(bit_length(base) - 1);
  if (!exp.fits_ulong_p() || bits > Integer(kMaxBoundBits))
    throw ResourceLimitExceeded("bound exceeds " + std::to_string(kMaxBoundBits) + " bits; not materialised");
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
  return out;
}

Integer two_pow(unsigned k) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, k);
  return out;
}

}  // namespace

Integer bound_B(unsigned m, const Integer& D) {
  if (D < 0) throw PreconditionError("bound_B: negative degree");
  Integer sum = 0;
  for (unsigned i = 0; i <= m; ++i) sum += power(D, 2 * (two_pow(i) - 1));
  return sum;
}

Integer bound_radical(std::span<const Integer> D) {
  Integer sum = 0;
  for (std::size_t j = 0; j < D.size(); ++j) sum += bound_B(static_cast<unsigned>(j), D[j]);
  return sum;
}

Integer bound_general(unsigned long d, unsigned abs_alpha, unsigned m) {
  if (d < 1) throw PreconditionError("bound_general: d must be at least 1");
  if (m > abs_alpha) throw PreconditionError("bound_general: m exceeds |alpha|");
  if (d == 1) return Integer(m) + 1;
  return power(Integer(d), Integer(abs_alpha - m + 1) * two_pow(m + 1));
}

Integer bound_full(unsigned long d, unsigned abs_alpha, unsigned abs_beta, unsigned m) {
  if (d < 1) throw PreconditionError("bound_full: d must be at least 1");
  if (m > abs_alpha + abs_beta) throw PreconditionError("bound_full: m exceeds |alpha| + |beta|");
  if (d == 1) return Integer(m) + 1;
  return power(Integer(d), Integer(abs_alpha + abs_beta - m + 1) * two_pow(m + 1));
}

Integer noether_bound(unsigned long d0, unsigned long d, unsigned r, unsigned abs_alpha) {
  if (d0 < 1 || d0 > d) throw PreconditionError("noether_bound: need 1 <= d0 <= d");
  if (r < 1 || abs_alpha < 1) throw PreconditionError("noether_bound: need r >= 1 and |alpha| >= 1");
  return Integer(d0) * power(Integer(d), Integer(std::min(r, abs_alpha) - 1));
}

Integer component_degree_bound(unsigned long d0, unsigned long d, unsigned abs_alpha, unsigned i) {
  if (abs_alpha < 1 || i > abs_alpha - 1) throw PreconditionError("component_degree_bound: index out of range");
  if (d < 1) throw PreconditionError("component_degree_bound: d must be at least 1");
  return Integer(d0) * power(Integer(d), Integer(abs_alpha - i - 1));
}

Integer bound_tighter(unsigned long d0, unsigned long d, unsigned r, unsigned abs_alpha, unsigned m) {
  if (abs_alpha < 1 || m > abs_alpha - 1) throw PreconditionError("bound_tighter: need m <= |alpha| - 1");
  Integer sum = 0;
  for (unsigned i = 0; i <= m; ++i) sum += bound_B(i, component_degree_bound(d0, d, abs_alpha, i));
  return noether_bound(d0, d, r, abs_alpha) * sum;
}

Integer bound_prop_any(const Integer& mu, std::span<const Integer> D) {
  if (mu < 1) throw PreconditionError("bound_prop_any: mu must be at least 1");
  return mu * bound_radical(D);
}

Integer lower_bound_order(unsigned long d) {
  if (d < 1) throw PreconditionError("lower_bound_order: d must be at least 1");
  return Integer(d) * Integer(d + 3) / 2;
}

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::T1: return "T1";
    case Theorem::T2: return "T2";
    case Theorem::T3: return "T3";
    case Theorem::PropAny: return "PropAny";
    case Theorem::Tighter: return "Tighter";
  }
  return "?";
}

BoundReport select_bound(const BoundInputs& in, TheoremChoice choice) {
  BoundReport rep;
  rep.d = in.d;
  rep.d0 = in.d0;
  rep.abs_alpha = in.abs_alpha;
  rep.abs_beta = in.abs_beta;
  rep.r = in.r;
  rep.m = in.m;
  rep.radical = in.radical;
  rep.radical_source = in.radical_source;
  rep.equidimensional = in.equidimensional;

  if (in.m < 0) {
    rep.theorem = Theorem::Tighter;
    rep.B = 0;
    rep.notes.push_back("generically inconsistent: 1 lies in the ideal over the keep field");
    return rep;
  }
  const unsigned m = static_cast<unsigned>(in.m);
  rep.m_bar = in.abs_alpha >= m ? in.abs_alpha - m : 0;

  try {
    if (m <= in.abs_alpha) rep.general = bound_general(in.d, in.abs_alpha, m);
  } catch (const ResourceLimitExceeded& e) {
    rep.notes.push_back(std::string("T1 value not materialised: ") + e.what());
  }
  bool tighter_ok = in.abs_alpha >= 1 && m + 1 <= in.abs_alpha && in.d0 >= 1 && in.d0 <= in.d && in.r >= 1;
  if (tighter_ok) {
    try {
      rep.tighter = bound_tighter(in.d0, in.d, in.r, in.abs_alpha, m);
    } catch (const ResourceLimitExceeded& e) {
      rep.notes.push_back(std::string("tighter bound not materialised: ") + e.what());
    }
  }

  // D-profile: equidimensional data places the whole degree on the top
  // component; otherwise lower components get their a priori bound.
  std::vector<Integer> profile(m + 1, 0);
  if (in.degree_top) {
    if (in.equidimensional) {
      profile[m] = *in.degree_top;
    } else if (tighter_ok) {
      for (unsigned i = 0; i < m; ++i) profile[i] = component_degree_bound(in.d0, in.d, in.abs_alpha, i);
      profile[m] = std::min(*in.degree_top, component_degree_bound(in.d0, in.d, in.abs_alpha, m));
    } else {
      profile[m] = *in.degree_top;
    }
    if (!in.radical || !in.equidimensional) rep.degree_surrogate = true;
  }

  auto use_radical = [&] {
    rep.theorem = Theorem::T2;
    rep.D = profile;
    rep.B = bound_radical(profile);
  };
  auto use_prop_any = [&] {
    rep.theorem = Theorem::PropAny;
    rep.D = profile;
    rep.mu_bound = in.radical ? Integer(1) : noether_bound(in.d0, in.d, in.r, in.abs_alpha);
    rep.B = bound_prop_any(*rep.mu_bound, profile);
  };

  switch (choice) {
    case TheoremChoice::T1:
      if (!rep.general) throw ResourceLimitExceeded("T1 bound too large to materialise");
      rep.theorem = Theorem::T1;
      rep.B = *rep.general;
      return rep;
    case TheoremChoice::T3:
      rep.theorem = Theorem::T3;
      rep.B = bound_full(in.d, in.abs_alpha, in.abs_beta, m);
      rep.notes.push_back("full-elimination bound; relations are searched in the non-radical elimination ideal");
      return rep;
    case TheoremChoice::Tighter:
      if (!rep.tighter) throw PreconditionError("tighter bound unavailable for these inputs");
      rep.theorem = Theorem::Tighter;
      rep.B = *rep.tighter;
      return rep;
    case TheoremChoice::T2:
      if (!in.degree_top) throw PreconditionError("radical bound needs degree data");
      if (!in.radical) rep.notes.push_back("radical bound used without established radicality");
      if (!in.equidimensional) rep.notes.push_back("equidimensionality not established; D-profile is a surrogate");
      use_radical();
      return rep;
    case TheoremChoice::Auto:
      break;
  }

  if (in.degree_top && in.radical && in.equidimensional) {
    use_radical();
  } else if (in.degree_top && tighter_ok) {
    use_prop_any();
  } else if (rep.tighter) {
    rep.theorem = Theorem::Tighter;
    rep.B = *rep.tighter;
  } else if (rep.general) {
    rep.theorem = Theorem::T1;
    rep.B = *rep.general;
  } else {
    throw ResourceLimitExceeded("no bound could be materialised");
  }
  // prefer the smallest proven value
  if (rep.theorem != Theorem::Tighter && rep.tighter && *rep.tighter < rep.B) {
    rep.notes.push_back(to_string(rep.theorem) + " value " + rep.B.get_str() + " exceeds the tighter bound");
    rep.theorem = Theorem::Tighter;
    rep.B = *rep.tighter;
    rep.D.clear();
    rep.mu_bound.reset();
  }
  if (rep.degree_surrogate && rep.theorem != Theorem::Tighter)
    rep.notes.push_back("degree surrogate (with multiplicity) used for D_m");
  return rep;
}

}  // namespace diffelim
