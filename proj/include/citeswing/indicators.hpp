#ifndef CITESWING_INDICATORS_HPP
#define CITESWING_INDICATORS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace citeswing {

// One cited item: opaque identifier plus a nonnegative citation count.
struct CitationRecord {
    std::string item_id;
    std::int64_t citations = 0;

    friend bool operator==(const CitationRecord&, const CitationRecord&) = default;
};

// Rank-based decomposition of a citation vector.
//
//   h      largest i such that the i-th ranked item has >= i citations
//   d_sq   total citations of the h-core (top h items), d^2 = h^2 + e^2
//   e_sq   citations of h-core items beyond h each
//   r      sqrt(d_sq), Euclidean norm of (h, e)
//   tail   citations of items ranked below the h-core
//   total  sum over all items, total = h^2 + e^2 + tail
//
// All counts are exact integers; only r is floating point.
struct CoreMetrics {
    std::int64_t h = 0;
    std::int64_t e_sq = 0;
    std::int64_t d_sq = 0;
    double r = 0.0;
    std::int64_t tail = 0;
    std::int64_t total = 0;
};

enum class Zone { Tail, Core, Excess };

std::string_view to_string(Zone zone);

// Per-item zone label. rank is the 1-based position in the canonical
// descending order (ties broken by item_id ascending).
struct ZoneAssignment {
    std::string item_id;
    Zone zone = Zone::Tail;
    std::int64_t rank = 0;
};

// Canonical ordering: citations descending, ties broken by item_id
// ascending. Throws DuplicateItemId on repeated ids and DomainError on
// negative citation counts.
std::vector<CitationRecord> rank_citations(std::span<const CitationRecord> records);

// h-index of an already ranked (descending) vector. 0 for empty or
// all-zero input.
std::int64_t h_index(std::span<const CitationRecord> ranked);

// Full decomposition of an (unordered) citation vector.
CoreMetrics core_metrics(std::span<const CitationRecord> records);

// Item-level zone rule:
//   rank >  h                 -> Tail
//   rank <= h, citations >  h -> Excess (the item carries excess mass)
//   rank <= h, citations <= h -> Core   (exactly h citations, by h's definition)
// Result is ordered by rank.
std::vector<ZoneAssignment> zone_partition(std::span<const CitationRecord> records);

} // namespace citeswing

#endif
