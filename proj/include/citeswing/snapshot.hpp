#ifndef CITESWING_SNAPSHOT_HPP
#define CITESWING_SNAPSHOT_HPP

#include "citeswing/indicators.hpp"
#include "citeswing/swing.hpp"

#include <optional>
#include <string>
#include <vector>

namespace citeswing {

// A set of citation records observed at one model time t >= 1.
struct Snapshot {
    std::string label;
    double t = 1.0;
    std::vector<CitationRecord> records;

    friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

// Everything derivable from a single snapshot. swing is absent when
// h = 0 or e_sq = 0; swing_undefined_reason then says which.
struct SnapshotAnalysis {
    std::string label;
    double t = 1.0;
    CoreMetrics core;
    std::optional<SwingMetrics> swing;
    std::string swing_undefined_reason;
    CaseLabel case_label = CaseLabel::DegenerateZero;
};

SnapshotAnalysis analyze_snapshot(const Snapshot& snapshot);

} // namespace citeswing

#endif
