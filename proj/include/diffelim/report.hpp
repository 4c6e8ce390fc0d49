#pragma once

#include <string>

#include <json.hpp>

#include "diffelim/bounds.hpp"
#include "diffelim/elim.hpp"
#include "diffelim/randcheck.hpp"
#include "diffelim/witness.hpp"

namespace diffelim {

// JSON rendering of every result type. Integers that can exceed 53 bits
// (bounds, |S|, seeds, sample points) are written as decimal strings so that
// any JSON reader keeps them exact.

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolName = "diffelim";
inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::json to_json(const DiffSystem& S);
nlohmann::json to_json(const ResourceLimits& l);
nlohmann::json to_json(const EliminationConfig& cfg);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const DimensionEstimate& e);
nlohmann::json to_json(const GroebnerStats& s);
/// Per-depth wall times are included only when `timings` is set, so that
/// reports of seeded runs stay byte-identical.
nlohmann::json to_json(const EliminationReport& r, bool timings);
nlohmann::json to_json(const RandomizedVerdict& v);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const SeriesCertificate& c);
nlohmann::json to_json(const InconsistencySearch& s);

/// Envelope shared by every subcommand.
nlohmann::json report_header(const std::string& command);

}  // namespace diffelim
