#ifndef CITESWING_DIFFUSION_HPP
#define CITESWING_DIFFUSION_HPP

#include "citeswing/snapshot.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace citeswing {

// Row/column states of a TransitionMatrix. The first three mirror Zone;
// Absent marks an item missing from one of the two snapshots.
enum class ZoneState { Tail = 0, Core = 1, Excess = 2, Absent = 3 };

inline constexpr int kZoneStates = 4;

ZoneState to_state(Zone zone);
std::string_view to_string(ZoneState state);

// Item movements among {tail, core, excess, absent} between two
// snapshots. counts[from][to] is the number of items that held zone
// `from` in the earlier snapshot and `to` in the later one. The
// Absent->Absent cell is always zero.
struct TransitionMatrix {
    std::string from_label;
    std::string to_label;
    std::array<std::array<std::int64_t, kZoneStates>, kZoneStates> counts{};

    std::int64_t at(ZoneState from, ZoneState to) const
    {
        return counts[static_cast<int>(from)][static_cast<int>(to)];
    }

    std::int64_t& at(ZoneState from, ZoneState to)
    {
        return counts[static_cast<int>(from)][static_cast<int>(to)];
    }

    // Total number of distinct items across both snapshots.
    std::int64_t total() const;
};

// Zones are assigned independently per snapshot by zone_partition;
// items present in only one snapshot map to Absent on the other side.
// Throws NonMonotonicTime unless later.t > earlier.t.
TransitionMatrix transitions(const Snapshot& earlier, const Snapshot& later);

// The six off-diagonal item flows among the three citation zones.
struct NetFlow {
    std::int64_t tail_to_core = 0;
    std::int64_t core_to_excess = 0;
    std::int64_t excess_to_core = 0;
    std::int64_t core_to_tail = 0;
    std::int64_t tail_to_excess = 0;
    std::int64_t excess_to_tail = 0;
};

NetFlow net_flow(const TransitionMatrix& matrix);

// One matrix per consecutive snapshot pair, plus per-snapshot metrics
// ready for power-law fitting.
struct DiffusionSeries {
    std::vector<SnapshotAnalysis> snapshots;
    std::vector<TransitionMatrix> matrices;
};

// Throws InsufficientData for fewer than 2 snapshots and
// NonMonotonicTime when t values do not strictly increase.
DiffusionSeries diffusion_series(std::span<const Snapshot> series);

} // namespace citeswing

#endif
