#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diffelim/error.hpp"
#include "diffelim/random.hpp"
#include "diffelim/report.hpp"
#include "diffelim/system_file.hpp"

using namespace diffelim;
using nlohmann::json;

namespace {

constexpr int kExitDefinite = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

struct Options {
  std::string file;
  std::vector<std::string> keep;
  bool json = false;
  bool timings = false;
  std::uint64_t seed = 0;
  std::string theorem = "auto";
  bool radical = false;
  unsigned trials = 3;
  int max_depth = 8;
  bool augment = false;
  std::size_t max_pairs = 0;
  std::size_t max_bits = 0;
  double timeout = 0;
  bool randomized = false;
  std::string p = "0.99";
  unsigned degree = 1;
  int search_depth = -1;
};

TheoremChoice parse_theorem(const std::string& s) {
  if (s == "auto") return TheoremChoice::Auto;
  if (s == "t1") return TheoremChoice::T1;
  if (s == "t2") return TheoremChoice::T2;
  if (s == "t3") return TheoremChoice::T3;
  return TheoremChoice::Tighter;
}

void add_system_options(CLI::App* sub, Options& o) {
  sub->add_option("file", o.file, "system file")->required()->check(CLI::ExistingFile);
  sub->add_option("--keep", o.keep, "keep exactly these variables, eliminating the other declared ones")
      ->delimiter(',');
}

void add_seed_option(CLI::App* sub, Options& o, CLI::Option*& slot) {
  slot = sub->add_option("--seed", o.seed, "random seed; drawn from system entropy and recorded when absent");
}

void add_bound_options(CLI::App* sub, Options& o) {
  sub->add_option("--theorem", o.theorem, "bound to apply")
      ->check(CLI::IsMember({"auto", "t1", "t2", "t3", "tighter"}));
  sub->add_flag("--radical", o.radical, "assert that the ideal is radical");
  sub->add_option("--trials", o.trials, "specialisation trials for the dimension estimate")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--augment-derivatives", o.augment,
                "add derivatives of equations that stay inside the order window");
}

void add_limit_options(CLI::App* sub, Options& o) {
  sub->add_option("--max-pairs", o.max_pairs, "stop a Groebner basis run after this many pairs (0: no limit)");
  sub->add_option("--max-bits", o.max_bits, "stop when a coefficient exceeds this many bits (0: no limit)");
  sub->add_option("--timeout", o.timeout, "wall-time limit per Groebner basis run in seconds (0: none)")
      ->check(CLI::NonNegativeNumber);
}

void add_output_options(CLI::App* sub, Options& o) {
  sub->add_flag("--json", o.json, "print the JSON report");
  sub->add_flag("--timings", o.timings, "include wall times in the report");
}

EliminationConfig make_config(const Options& o, std::uint64_t seed) {
  EliminationConfig cfg;
  cfg.theorem = parse_theorem(o.theorem);
  cfg.assert_radical = o.radical;
  cfg.augment_derivatives = o.augment;
  cfg.trials = o.trials;
  cfg.seed = seed;
  cfg.max_depth = o.max_depth;
  cfg.limits.max_pairs = o.max_pairs;
  cfg.limits.max_coeff_bits = o.max_bits;
  cfg.limits.timeout_seconds = o.timeout;
  return cfg;
}

DiffSystem load(const Options& o) {
  DiffSystem S = load_system(o.file);
  if (!o.keep.empty()) S = with_keep(S, o.keep);
  return S;
}

std::string join(const std::vector<Integer>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].get_str();
  return out;
}

void print_bound(const BoundReport& b) {
  std::cout << "bound: B = " << b.B.get_str() << " (" << to_string(b.theorem) << ")\n";
  std::cout << "  d = " << b.d << ", d0 = " << b.d0 << ", |alpha| = " << b.abs_alpha << ", |beta| = " << b.abs_beta
            << ", r = " << b.r << ", m = " << b.m << "\n";
  if (!b.D.empty()) std::cout << "  D = (" << join(b.D) << ")" << (b.degree_surrogate ? " [surrogate]" : "") << "\n";
  if (b.mu_bound) std::cout << "  Noether exponent bound = " << b.mu_bound->get_str() << "\n";
  std::cout << "  radical: " << (b.radical ? b.radical_source : "no") << ", equidimensional: "
            << (b.equidimensional ? "yes" : "no") << "\n";
  for (const auto& n : b.notes) std::cout << "  note: " << n << "\n";
}

struct Outcome {
  json report;
  int code = kExitDefinite;
};

Outcome run_bound(const Options& o, std::uint64_t seed) {
  DiffSystem S = load(o);
  EliminationConfig cfg = make_config(o, seed);
  Outcome out;
  out.report["system"] = to_json(S);
  out.report["options"] = to_json(cfg);
  out.report["seed"] = std::to_string(seed);
  try {
    DimensionEstimate est;
    BoundReport b = compute_bound(S, cfg, &est);
    out.report["bound"] = to_json(b);
    out.report["estimate"] = to_json(est);
    if (!o.json) print_bound(b);
  } catch (const ResourceLimitExceeded& e) {
    out.code = kExitInconclusive;
    out.report["inconclusive_reason"] = e.what();
    if (!o.json) std::cout << "bound: inconclusive (" << e.what() << ")\n";
  }
  return out;
}

Outcome run_eliminate(const Options& o, std::uint64_t seed) {
  DiffSystem S = load(o);
  EliminationConfig cfg = make_config(o, seed);
  EliminationReport r = run_elimination(S, cfg);
  Outcome out;
  out.report["system"] = to_json(S);
  out.report["options"] = to_json(cfg);
  out.report["seed"] = std::to_string(seed);
  out.report["bound"] = to_json(r.bound);
  out.report["estimate"] = to_json(r.estimate);
  out.report["elimination"] = to_json(r, o.timings);
  out.code = r.verdict == Verdict::Inconclusive ? kExitInconclusive : kExitDefinite;
  if (!o.json) {
    std::cout << to_string(r.verdict);
    if (r.depth) std::cout << " at depth " << *r.depth;
    std::cout << " (bound " << r.bound.B.get_str() << ", searched to depth " << r.depth_reached << ")\n";
    for (const auto& p : r.relations) std::cout << "  " << p.to_string() << " = 0\n";
    if (!r.inconclusive_reason.empty()) std::cout << "  reason: " << r.inconclusive_reason << "\n";
    for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
  }
  return out;
}

Outcome run_check(const Options& o, std::uint64_t seed) {
  DiffSystem S = load(o);
  EliminationConfig cfg = make_config(o, seed);
  Outcome out;
  out.report["system"] = to_json(S);
  out.report["options"] = to_json(cfg);
  out.report["seed"] = std::to_string(seed);
  if (!o.randomized) {
    EliminationReport r = run_elimination(S, cfg);
    out.report["elimination"] = to_json(r, o.timings);
    out.report["bound"] = to_json(r.bound);
    bool definite = r.verdict != Verdict::Inconclusive;
    out.code = definite ? kExitDefinite : kExitInconclusive;
    out.report["elimination_possible"] = definite ? json(r.verdict == Verdict::RelationFound) : json(nullptr);
    if (!o.json) {
      if (!definite)
        std::cout << "inconclusive (" << r.inconclusive_reason << ")\n";
      else if (r.verdict == Verdict::RelationFound)
        std::cout << "possible, depth " << *r.depth << "\n";
      else
        std::cout << "impossible\n";
    }
    return out;
  }
  Rational p = parse_rational(o.p);
  RandcheckOptions ropts;
  ropts.limits = cfg.limits;
  RandomizedVerdict v = randomized_dae_check(S, p, seed, cfg, ropts);
  out.report["randomized"] = to_json(v);
  out.report["elimination_possible"] = v.elimination_possible;
  if (!v.conclusive) out.code = kExitInconclusive;
  if (!o.json) {
    if (v.elimination_possible)
      std::cout << "possible, depth " << *v.depth << "\n";
    else
      std::cout << "impossible (p >= " << o.p << ")" << (v.conclusive ? "" : ", depth cap reached before the bound")
                << "\n";
    std::cout << "  |S| = " << v.sample_size.get_str() << ", seed " << seed << " (point drawn with " << v.seed
              << "), " << v.method << "\n";
    if (!v.note.empty()) std::cout << "  note: " << v.note << "\n";
  }
  return out;
}

Outcome run_witness(const Options& o) {
  Witness w = solve_witness(o.degree);
  const std::size_t len = w.B + 2;
  std::map<std::string, TruncatedSeries> series{{"x", TruncatedSeries::t_pow_exp(1, 0, len)},
                                                {"y", TruncatedSeries::t_pow_exp(0, 1, len)}};
  SeriesCertificate cert = certify_nonmembership(w.system, series, w.B);
  if (!cert.holds) throw InternalConsistencyError("series certificate failed for the witness system");
  Outcome out;
  out.report["witness"] = to_json(w);
  out.report["certificate"] = to_json(cert);
  if (!o.json) {
    std::cout << "P = " << w.P.to_string() << "\n";
    std::cout << "  degree " << w.d << ", B = " << w.B << ", irreducible: "
              << (w.irreducible ? (*w.irreducible ? "yes" : "no") : "not checked") << "\n";
    std::cout << "  (t, e^t) solves every equation to order " << w.B << ", so 1 is not in the ideal prolonged "
              << w.B - 1 << " times\n";
    for (const auto& r : cert.rows)
      std::cout << "    " << r.equation << ": "
                << (r.valuation ? "O(t^" + std::to_string(*r.valuation) + ")" : "0 to known order") << "\n";
  }
  if (o.search_depth >= 0) {
    GroebnerOptions gopts;
    gopts.limits.max_pairs = o.max_pairs;
    gopts.limits.max_coeff_bits = o.max_bits;
    gopts.limits.timeout_seconds = o.timeout;
    InconsistencySearch s = minimal_inconsistency_depth(w.system, o.search_depth, gopts);
    out.report["inconsistency_search"] = to_json(s);
    if (s.cutoff) out.code = kExitInconclusive;
    if (!o.json) {
      if (s.depth)
        std::cout << "  1 lies in the ideal prolonged " << *s.depth << " times\n";
      else if (s.cutoff)
        std::cout << "  inconsistency search stopped: " << s.reason << "\n";
      else
        std::cout << "  1 not found up to depth " << s.searched << "\n";
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elimination bounds and checks for differential-algebraic systems"};
  app.require_subcommand(1);
  Options o;
  CLI::Option* bound_seed = nullptr;
  CLI::Option* elim_seed = nullptr;
  CLI::Option* check_seed = nullptr;

  auto* bound = app.add_subcommand("bound", "prolongation bound for eliminating the vars block");
  add_system_options(bound, o);
  add_bound_options(bound, o);
  add_seed_option(bound, o, bound_seed);
  add_limit_options(bound, o);
  add_output_options(bound, o);

  auto* elim = app.add_subcommand("eliminate", "prolong and eliminate until a relation appears or the bound is met");
  add_system_options(elim, o);
  add_bound_options(elim, o);
  add_seed_option(elim, o, elim_seed);
  elim->add_option("--max-depth", o.max_depth, "depth cap of the search")->check(CLI::NonNegativeNumber);
  add_limit_options(elim, o);
  add_output_options(elim, o);

  auto* check = app.add_subcommand("check-elim", "decide whether the vars block can be eliminated");
  add_system_options(check, o);
  add_bound_options(check, o);
  add_seed_option(check, o, check_seed);
  check->add_flag("--randomized", o.randomized, "use the randomized fiber test");
  check->add_option("-p", o.p, "success probability, 0 < p < 1 (decimal or fraction)");
  check->add_option("--max-depth", o.max_depth, "depth cap of the search")->check(CLI::NonNegativeNumber);
  add_limit_options(check, o);
  add_output_options(check, o);

  auto* wit = app.add_subcommand("witness", "lower-bound witness system of a given degree");
  wit->add_option("-d,--degree", o.degree, "degree of P")->required()->check(CLI::PositiveNumber);
  wit->add_option("--search-depth", o.search_depth,
                  "also search the least inconsistency depth up to this bound (-1: skip)");
  add_limit_options(wit, o);
  add_output_options(wit, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitDefinite : kExitError;
  }

  auto start = std::chrono::steady_clock::now();
  try {
    Outcome out;
    std::string command;
    if (*bound || *elim || *check) {
      CLI::Option* seed_opt = *bound ? bound_seed : *elim ? elim_seed : check_seed;
      std::uint64_t seed = seed_opt->count() ? o.seed : Rng::entropy_seed();
      if (*bound) {
        command = "bound";
        out = run_bound(o, seed);
      } else if (*elim) {
        command = "eliminate";
        out = run_eliminate(o, seed);
      } else {
        command = "check-elim";
        out = run_check(o, seed);
      }
      out.report["seed_source"] = seed_opt->count() ? "argument" : "entropy";
      out.report["system"]["file"] = o.file;
    } else {
      command = "witness";
      out = run_witness(o);
    }
    json report = report_header(command);
    report["status"] = out.code == kExitInconclusive ? "inconclusive" : "definite";
    report.update(out.report);
    if (o.timings)
      report["timings"] = {
          {"total_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
    if (o.json) std::cout << report.dump(2) << "\n";
    return out.code;
  } catch (const ParseError& e) {
    std::cerr << o.file << ": " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const ResourceLimitExceeded& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
  }
  return kExitError;
}
