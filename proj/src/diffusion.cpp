#include "citeswing/diffusion.hpp"

#include "citeswing/errors.hpp"

#include <string>
#include <unordered_map>

namespace citeswing {

ZoneState to_state(Zone zone)
{
    switch (zone) {
        case Zone::Tail: return ZoneState::Tail;
        case Zone::Core: return ZoneState::Core;
        case Zone::Excess: return ZoneState::Excess;
    }
    return ZoneState::Tail;
}

std::string_view to_string(ZoneState state)
{
    switch (state) {
        case ZoneState::Tail: return "TAIL";
        case ZoneState::Core: return "CORE";
        case ZoneState::Excess: return "EXCESS";
        case ZoneState::Absent: return "ABSENT";
    }
    return "ABSENT";
}

std::int64_t TransitionMatrix::total() const
{
    std::int64_t n = 0;
    for (const auto& row : counts) {
        for (auto cell : row) {
            n += cell;
        }
    }
    return n;
}

TransitionMatrix transitions(const Snapshot& earlier, const Snapshot& later)
{
    if (!(later.t > earlier.t)) {
        throw NonMonotonicTime("snapshot '" + later.label + "' (t = " + std::to_string(later.t) +
                               ") does not come after '" + earlier.label +
                               "' (t = " + std::to_string(earlier.t) + ")");
    }

    const auto zones_from = zone_partition(earlier.records);
    const auto zones_to = zone_partition(later.records);

    std::unordered_map<std::string_view, ZoneState> later_zone;
    later_zone.reserve(zones_to.size());
    for (const auto& z : zones_to) {
        later_zone.emplace(z.item_id, to_state(z.zone));
    }

    TransitionMatrix m;
    m.from_label = earlier.label;
    m.to_label = later.label;

    for (const auto& z : zones_from) {
        const auto it = later_zone.find(z.item_id);
        const ZoneState to = it == later_zone.end() ? ZoneState::Absent : it->second;
        ++m.at(to_state(z.zone), to);
        if (it != later_zone.end()) {
            later_zone.erase(it);
        }
    }
    // Whatever is left appeared between the snapshots.
    for (const auto& [id, state] : later_zone) {
        ++m.at(ZoneState::Absent, state);
    }
    return m;
}

NetFlow net_flow(const TransitionMatrix& matrix)
{
    NetFlow f;
    f.tail_to_core = matrix.at(ZoneState::Tail, ZoneState::Core);
    f.core_to_excess = matrix.at(ZoneState::Core, ZoneState::Excess);
    f.excess_to_core = matrix.at(ZoneState::Excess, ZoneState::Core);
    f.core_to_tail = matrix.at(ZoneState::Core, ZoneState::Tail);
    f.tail_to_excess = matrix.at(ZoneState::Tail, ZoneState::Excess);
    f.excess_to_tail = matrix.at(ZoneState::Excess, ZoneState::Tail);
    return f;
}

DiffusionSeries diffusion_series(std::span<const Snapshot> series)
{
    if (series.size() < 2) {
        throw InsufficientData("diffusion needs at least 2 snapshots, got " +
                               std::to_string(series.size()));
    }
    for (std::size_t i = 1; i < series.size(); ++i) {
        if (!(series[i].t > series[i - 1].t)) {
            throw NonMonotonicTime("snapshot t values must strictly increase ('" +
                                   series[i - 1].label + "' -> '" + series[i].label + "')");
        }
    }

    DiffusionSeries out;
    out.snapshots.reserve(series.size());
    for (const auto& snap : series) {
        out.snapshots.push_back(analyze_snapshot(snap));
    }
    out.matrices.reserve(series.size() - 1);
    for (std::size_t i = 1; i < series.size(); ++i) {
        out.matrices.push_back(transitions(series[i - 1], series[i]));
    }
    return out;
}

} // namespace citeswing
