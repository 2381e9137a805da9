#ifndef CITESWING_REPORT_HPP
#define CITESWING_REPORT_HPP

#include "citeswing/ingest.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace citeswing {

// Doubles entering a report are quantized to 12 significant digits so
// serialized values stay tolerance-stable across platforms.
double round12(double x);

// Per-snapshot core and swing metrics. Every report carries
// tool_version, command, source and a per_snapshot array; a snapshot
// whose swing metrics are undefined gets "swing": null plus a
// machine-readable "swing_undefined_reason".
nlohmann::json compute_report(const Dataset& dataset);

// compute_report plus power-law fits of theta(t) and epsilon(t) over
// the snapshots with defined swing metrics, and the differential
// components at each of those snapshot times. Throws InsufficientData
// when fewer than 2 snapshots have defined swing metrics.
nlohmann::json timeseries_report(const Dataset& dataset);

// compute_report plus consecutive-pair transition matrices with net
// flows. Throws InsufficientData for fewer than 2 snapshots.
nlohmann::json diffuse_report(const Dataset& dataset);

// Flat CSV rendering of a report's per_snapshot array.
std::string report_to_csv(const nlohmann::json& report);

} // namespace citeswing

#endif
