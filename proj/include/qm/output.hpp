#pragma once

#include <string>

#include <json.hpp>

#include "qm/count_polynomial.hpp"
#include "qm/montecarlo.hpp"
#include "qm/pgf_engine.hpp"
#include "qm/verify.hpp"

namespace qm::output {

inline constexpr const char* kToolName = "qm";
inline constexpr const char* kToolVersion = "1.0.0";

// Envelopes keep a fixed key order (command, parameters, results, metadata)
// and never hold exact values as floats: big integers and rationals travel
// as decimal strings, so reserializing parsed output is byte-identical.
using Json = nlohmann::ordered_json;

Json dist_envelope(const CountPolynomial& dist, const std::string& statistic, unsigned max_n);
Json moments_envelope(const pgf::MomentReport& report, const std::string& source);
Json simulate_envelope(const mc::SampleStats& stats);
Json verify_envelope(const verify::Report& report, unsigned max_n_brute, unsigned max_n_exact,
                     unsigned series_order);

/// Rendered JSON document (two-space indent, trailing newline).
std::string to_json_text(const Json& envelope);

/// CSV rendering of the same payload values; one table per command.
std::string dist_csv(const CountPolynomial& dist, const std::string& statistic);
std::string moments_csv(const pgf::MomentReport& report, const std::string& source);
std::string simulate_csv(const mc::SampleStats& stats);
std::string verify_csv(const verify::Report& report);

} // namespace qm::output
