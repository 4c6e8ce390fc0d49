#include "diffelim/report.hpp"

namespace diffelim {

using nlohmann::json;

namespace {

json big(const Integer& z) { return z.get_str(); }

json opt_big(const std::optional<Integer>& z) { return z ? json(z->get_str()) : json(nullptr); }

json rationals(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

json polys(const std::vector<Polynomial>& v) {
  json out = json::array();
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

std::string choice_name(TheoremChoice c) {
  switch (c) {
    case TheoremChoice::Auto: return "auto";
    case TheoremChoice::T1: return "t1";
    case TheoremChoice::T2: return "t2";
    case TheoremChoice::T3: return "t3";
    case TheoremChoice::Tighter: return "tighter";
  }
  return "?";
}

}  // namespace

json report_header(const std::string& command) {
  return {{"schema_version", kReportSchemaVersion},
          {"tool", {{"name", kToolName}, {"version", kToolVersion}}},
          {"command", command}};
}

json to_json(const DiffSystem& S) {
  return {{"eliminate", S.eliminate}, {"keep", S.keep}, {"params", S.params}, {"equations", polys(S.equations)}};
}

json to_json(const ResourceLimits& l) {
  return {{"max_pairs", l.max_pairs}, {"max_coeff_bits", l.max_coeff_bits}, {"timeout_seconds", l.timeout_seconds}};
}

json to_json(const EliminationConfig& cfg) {
  return {{"theorem", choice_name(cfg.theorem)},
          {"assert_radical", cfg.assert_radical},
          {"augment_derivatives", cfg.augment_derivatives},
          {"trials", cfg.trials},
          {"max_depth", cfg.max_depth},
          {"limits", to_json(cfg.limits)}};
}

json to_json(const BoundReport& r) {
  json D = json::array();
  for (const auto& x : r.D) D.push_back(big(x));
  return {{"theorem", to_string(r.theorem)},
          {"B", big(r.B)},
          {"d", r.d},
          {"d0", r.d0},
          {"abs_alpha", r.abs_alpha},
          {"abs_beta", r.abs_beta},
          {"r", r.r},
          {"m", r.m},
          {"m_bar", r.m_bar},
          {"D", D},
          {"degree_surrogate", r.degree_surrogate},
          {"mu_bound", opt_big(r.mu_bound)},
          {"radical", r.radical},
          {"radical_source", r.radical_source},
          {"equidimensional", r.equidimensional},
          {"general", opt_big(r.general)},
          {"tighter", opt_big(r.tighter)},
          {"notes", r.notes}};
}

json to_json(const DimensionEstimate& e) {
  return {{"m", e.m},
          {"degree_top", opt_big(e.degree_top)},
          {"equidimensional", e.equidimensional},
          {"radical_verified", e.radical_verified},
          {"radical_method", e.radical_method},
          {"window_size", e.window_size},
          {"trials", e.trials},
          {"agreeing", e.agreeing}};
}

json to_json(const GroebnerStats& s) {
  return {{"pairs_reduced", s.pairs_reduced},
          {"pairs_skipped", s.pairs_skipped},
          {"zero_reductions", s.zero_reductions},
          {"basis_size", s.basis_size},
          {"max_coeff_bits", s.max_coeff_bits}};
}

json to_json(const EliminationReport& r, bool timings) {
  json depths = json::array();
  for (const auto& d : r.depths) {
    json row = {{"depth", d.depth}, {"equations", d.equations}, {"variables", d.variables}, {"groebner", to_json(d.gb)}};
    if (timings) row["seconds"] = d.seconds;
    depths.push_back(row);
  }
  return {{"verdict", to_string(r.verdict)},
          {"depth", r.depth ? json(*r.depth) : json(nullptr)},
          {"depth_reached", r.depth_reached},
          {"relations", polys(r.relations)},
          {"inconclusive_reason", r.inconclusive_reason},
          {"depths", depths},
          {"notes", r.notes}};
}

json to_json(const RandomizedVerdict& v) {
  json point = json::object();
  for (std::size_t i = 0; i < v.point.size(); ++i) point[v.point_vars[i]] = big(v.point[i]);
  return {{"elimination_possible", v.elimination_possible},
          {"p", to_string(v.p)},
          {"sample_size", big(v.sample_size)},
          {"point", point},
          {"seed", std::to_string(v.seed)},
          {"generator", v.generator},
          {"d", v.d},
          {"q", v.q},
          {"r", v.r},
          {"fiber_empty", v.fiber_empty},
          {"method", v.method},
          {"depth", v.depth ? json(*v.depth) : json(nullptr)},
          {"bound", opt_big(v.bound)},
          {"conclusive", v.conclusive},
          {"note", v.note}};
}

json to_json(const Witness& w) {
  json mu = json::array();
  auto exps = witness_exponents(w.d);
  for (std::size_t k = 0; k < exps.size(); ++k)
    mu.push_back({{"i", exps[k].first}, {"j", exps[k].second}, {"value", to_string(w.mu[k])}});
  return {{"d", w.d},
          {"B", w.B},
          {"P", w.P.to_string()},
          {"scale", to_string(w.scale)},
          {"mu", mu},
          {"series_coefficients", rationals(w.substituted)},
          {"irreducible", w.irreducible ? json(*w.irreducible) : json(nullptr)},
          {"irreducibility_method", w.irreducibility_method},
          {"system", to_json(w.system)}};
}

json to_json(const SeriesCertificate& c) {
  json rows = json::array();
  for (const auto& r : c.rows)
    rows.push_back({{"equation", r.equation},
                    {"valuation", r.valuation ? json(*r.valuation) : json(nullptr)},
                    {"known_terms", r.known}});
  return {{"holds", c.holds}, {"N", c.N}, {"certifies_depth", static_cast<int>(c.N) - 1}, {"rows", rows}};
}

json to_json(const InconsistencySearch& s) {
  return {{"depth", s.depth ? json(*s.depth) : json(nullptr)},
          {"searched", s.searched},
          {"cutoff", s.cutoff},
          {"reason", s.reason}};
}

}  // namespace diffelim
