#ifndef CITESWING_INGEST_HPP
#define CITESWING_INGEST_HPP

#include "citeswing/snapshot.hpp"

#include <nlohmann/json_fwd.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace citeswing {

// Parsed, validated input: snapshots ordered by strictly increasing t,
// each internally valid. warnings collects non-fatal findings (an
// item's citation count decreasing between snapshots).
struct Dataset {
    std::vector<Snapshot> snapshots;
    std::string source_path;
    std::vector<std::string> warnings;
};

// Long-format CSV with header `item_id,snapshot,citations` and an
// optional numeric `t` column. Snapshots are grouped by label in order
// of first appearance; without a t column, t is assigned 1, 2, 3, ...
// in that order.
Dataset parse_csv(std::istream& in, std::string source_path = "-");
Dataset parse_csv_file(const std::string& path);

// {"snapshots":[{"label":str,"t":num?,"records":[{"item_id":str,
// "citations":int},...]},...]} with the same validation and
// t-assignment rules as CSV. Explicit t must be given for all
// snapshots or none.
Dataset parse_json(std::istream& in, std::string source_path = "-");
Dataset parse_json_file(const std::string& path);

// Serialization back to the JSON schema (always with explicit t);
// re-parsing the result reproduces the same snapshots.
nlohmann::json dataset_to_json(const Dataset& dataset);

// Item ids are restricted to [A-Za-z0-9_.:-]+ so the CSV form never
// needs quoting.
bool is_valid_item_id(std::string_view id);

} // namespace citeswing

#endif
