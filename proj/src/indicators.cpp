#include "citeswing/indicators.hpp"

#include "citeswing/errors.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace citeswing {

std::string_view to_string(Zone zone)
{
    switch (zone) {
        case Zone::Tail: return "TAIL";
        case Zone::Core: return "CORE";
        case Zone::Excess: return "EXCESS";
    }
    return "TAIL";
}

std::vector<CitationRecord> rank_citations(std::span<const CitationRecord> records)
{
    std::unordered_set<std::string_view> seen;
    seen.reserve(records.size());
    for (const auto& rec : records) {
        if (rec.item_id.empty()) {
            throw DomainError("empty item_id");
        }
        if (rec.citations < 0) {
            throw DomainError("negative citation count for item '" + rec.item_id + "'");
        }
        if (!seen.insert(rec.item_id).second) {
            throw DuplicateItemId("duplicate item_id '" + rec.item_id + "'");
        }
    }

    std::vector<CitationRecord> ranked(records.begin(), records.end());
    std::sort(ranked.begin(), ranked.end(), [](const CitationRecord& a, const CitationRecord& b) {
        if (a.citations != b.citations) {
            return a.citations > b.citations;
        }
        return a.item_id < b.item_id;
    });
    return ranked;
}

std::int64_t h_index(std::span<const CitationRecord> ranked)
{
    std::int64_t h = 0;
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        const auto rank = static_cast<std::int64_t>(i) + 1;
        if (ranked[i].citations >= rank) {
            h = rank;
        } else {
            break;
        }
    }
    return h;
}

CoreMetrics core_metrics(std::span<const CitationRecord> records)
{
    const auto ranked = rank_citations(records);
    const std::int64_t h = h_index(ranked);

    CoreMetrics m;
    m.h = h;
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        const auto rank = static_cast<std::int64_t>(i) + 1;
        if (rank <= h) {
            m.d_sq += ranked[i].citations;
        } else {
            m.tail += ranked[i].citations;
        }
    }
    m.e_sq = m.d_sq - h * h;
    m.total = m.d_sq + m.tail;
    m.r = std::sqrt(static_cast<double>(m.d_sq));
    return m;
}

std::vector<ZoneAssignment> zone_partition(std::span<const CitationRecord> records)
{
    const auto ranked = rank_citations(records);
    const std::int64_t h = h_index(ranked);

    std::vector<ZoneAssignment> zones;
    zones.reserve(ranked.size());
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        const auto rank = static_cast<std::int64_t>(i) + 1;
        Zone zone = Zone::Tail;
        if (rank <= h) {
            zone = ranked[i].citations > h ? Zone::Excess : Zone::Core;
        }
        zones.push_back({ranked[i].item_id, zone, rank});
    }
    return zones;
}

} // namespace citeswing
