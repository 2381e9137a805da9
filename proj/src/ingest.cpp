#include "citeswing/ingest.hpp"

#include "citeswing/errors.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace citeswing {

namespace {

bool parse_int64(std::string_view text, std::int64_t& out)
{
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

bool parse_double(std::string_view text, double& out)
{
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last && std::isfinite(out);
}

std::vector<std::string_view> split_fields(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

std::string read_all(std::istream& in)
{
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Shared post-parse validation: t range and monotonicity, plus the
// decreasing-citations warning sweep.
void finalize_dataset(Dataset& dataset)
{
    for (std::size_t i = 0; i < dataset.snapshots.size(); ++i) {
        const auto& snap = dataset.snapshots[i];
        if (!(snap.t >= 1.0)) {
            throw SchemaError("snapshot '" + snap.label + "': t must be >= 1, got " +
                              std::to_string(snap.t));
        }
        if (i > 0 && !(snap.t > dataset.snapshots[i - 1].t)) {
            throw SchemaError("non-monotonic t: snapshot '" + snap.label +
                              "' does not come after '" + dataset.snapshots[i - 1].label + "'");
        }
    }

    struct LastSeen {
        std::int64_t citations;
        const std::string* label;
    };
    std::unordered_map<std::string_view, LastSeen> last;
    for (const auto& snap : dataset.snapshots) {
        for (const auto& rec : snap.records) {
            const auto it = last.find(rec.item_id);
            if (it != last.end() && rec.citations < it->second.citations) {
                dataset.warnings.push_back(
                    "item '" + rec.item_id + "': citations decreased from " +
                    std::to_string(it->second.citations) + " (" + *it->second.label + ") to " +
                    std::to_string(rec.citations) + " (" + snap.label + ")");
            }
            last[rec.item_id] = {rec.citations, &snap.label};
        }
    }
}

} // namespace

bool is_valid_item_id(std::string_view id)
{
    if (id.empty()) {
        return false;
    }
    for (const char c : id) {
        const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                        (c >= '0' && c <= '9') || c == '_' || c == '.' || c == ':' || c == '-';
        if (!ok) {
            return false;
        }
    }
    return true;
}

Dataset parse_csv(std::istream& in, std::string source_path)
{
    const std::string text = read_all(in);

    Dataset dataset;
    dataset.source_path = std::move(source_path);

    std::unordered_map<std::string, std::size_t> snapshot_index;
    std::unordered_set<std::string> seen_cells;
    bool header_seen = false;
    bool has_t_column = false;
    std::size_t expected_fields = 3;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line{text.data() + pos,
                              (eol == std::string::npos ? text.size() : eol) - pos};
        pos = eol == std::string::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.empty()) {
            continue;
        }

        if (!header_seen) {
            if (line == "item_id,snapshot,citations") {
                has_t_column = false;
            } else if (line == "item_id,snapshot,citations,t") {
                has_t_column = true;
                expected_fields = 4;
            } else {
                throw ParseError("line 1: expected header 'item_id,snapshot,citations[,t]'");
            }
            header_seen = true;
            continue;
        }

        const auto fields = split_fields(line);
        if (fields.size() != expected_fields) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(expected_fields) + " fields, got " +
                             std::to_string(fields.size()));
        }

        const std::string_view id = fields[0];
        const std::string_view label = fields[1];
        if (!is_valid_item_id(id)) {
            throw ParseError("line " + std::to_string(line_no) + ": invalid item_id '" +
                             std::string(id) + "' (allowed: [A-Za-z0-9_.:-]+)");
        }
        if (label.empty()) {
            throw ParseError("line " + std::to_string(line_no) + ": empty snapshot label");
        }

        std::int64_t citations = 0;
        if (!parse_int64(fields[2], citations)) {
            throw ParseError("line " + std::to_string(line_no) + ": citations must be an integer, got '" +
                             std::string(fields[2]) + "'");
        }
        if (citations < 0) {
            throw ParseError("line " + std::to_string(line_no) + ": negative citations for item '" +
                             std::string(id) + "'");
        }

        double t = 0.0;
        if (has_t_column && !parse_double(fields[3], t)) {
            throw ParseError("line " + std::to_string(line_no) + ": t must be numeric, got '" +
                             std::string(fields[3]) + "'");
        }

        const auto [it, inserted] =
            snapshot_index.emplace(std::string(label), dataset.snapshots.size());
        if (inserted) {
            Snapshot snap;
            snap.label = std::string(label);
            snap.t = has_t_column ? t : static_cast<double>(dataset.snapshots.size()) + 1.0;
            dataset.snapshots.push_back(std::move(snap));
        } else if (has_t_column && t != dataset.snapshots[it->second].t) {
            throw ParseError("line " + std::to_string(line_no) + ": inconsistent t for snapshot '" +
                             std::string(label) + "'");
        }

        if (!seen_cells.insert(std::string(id) + "\x1f" + std::string(label)).second) {
            throw DuplicateCell("line " + std::to_string(line_no) + ": duplicate (item_id, snapshot) = ('" +
                                std::string(id) + "', '" + std::string(label) + "')");
        }
        dataset.snapshots[it->second].records.push_back({std::string(id), citations});
    }

    if (dataset.snapshots.empty()) {
        throw EmptyInput("no data rows in '" + dataset.source_path + "'");
    }

    finalize_dataset(dataset);
    return dataset;
}

Dataset parse_csv_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    return parse_csv(in, path);
}

Dataset parse_json(std::istream& in, std::string source_path)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_all(in));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }

    if (!doc.is_object() || !doc.contains("snapshots")) {
        throw SchemaError("top-level object with a 'snapshots' array required");
    }
    const auto& snaps = doc["snapshots"];
    if (!snaps.is_array()) {
        throw SchemaError("'snapshots' must be an array");
    }
    if (snaps.empty()) {
        throw EmptyInput("no snapshots in '" + source_path + "'");
    }

    Dataset dataset;
    dataset.source_path = std::move(source_path);
    dataset.snapshots.reserve(snaps.size());

    int with_t = 0;
    std::unordered_set<std::string> labels;
    for (const auto& s : snaps) {
        if (!s.is_object() || !s.contains("label") || !s.contains("records")) {
            throw SchemaError("each snapshot needs 'label' and 'records'");
        }
        if (!s["label"].is_string()) {
            throw SchemaError("snapshot 'label' must be a string");
        }

        Snapshot snap;
        snap.label = s["label"].get<std::string>();
        if (snap.label.empty()) {
            throw SchemaError("empty snapshot label");
        }
        if (!labels.insert(snap.label).second) {
            throw SchemaError("duplicate snapshot label '" + snap.label + "'");
        }

        if (s.contains("t")) {
            if (!s["t"].is_number()) {
                throw SchemaError("snapshot '" + snap.label + "': 't' must be a number");
            }
            snap.t = s["t"].get<double>();
            ++with_t;
        }

        const auto& records = s["records"];
        if (!records.is_array()) {
            throw SchemaError("snapshot '" + snap.label + "': 'records' must be an array");
        }
        std::unordered_set<std::string> ids;
        for (const auto& r : records) {
            if (!r.is_object() || !r.contains("item_id") || !r.contains("citations")) {
                throw SchemaError("snapshot '" + snap.label +
                                  "': each record needs 'item_id' and 'citations'");
            }
            if (!r["item_id"].is_string()) {
                throw SchemaError("snapshot '" + snap.label + "': 'item_id' must be a string");
            }
            const auto id = r["item_id"].get<std::string>();
            if (!is_valid_item_id(id)) {
                throw ParseError("snapshot '" + snap.label + "': invalid item_id '" + id +
                                 "' (allowed: [A-Za-z0-9_.:-]+)");
            }
            if (!r["citations"].is_number_integer()) {
                throw ParseError("snapshot '" + snap.label + "', item '" + id +
                                 "': citations must be an integer");
            }
            const auto citations = r["citations"].get<std::int64_t>();
            if (citations < 0) {
                throw ParseError("snapshot '" + snap.label + "', item '" + id +
                                 "': negative citations");
            }
            if (!ids.insert(id).second) {
                throw DuplicateCell("duplicate (item_id, snapshot) = ('" + id + "', '" +
                                    snap.label + "')");
            }
            snap.records.push_back({id, citations});
        }
        dataset.snapshots.push_back(std::move(snap));
    }

    if (with_t != 0 && with_t != static_cast<int>(dataset.snapshots.size())) {
        throw SchemaError("'t' must be given for all snapshots or none");
    }
    if (with_t == 0) {
        for (std::size_t i = 0; i < dataset.snapshots.size(); ++i) {
            dataset.snapshots[i].t = static_cast<double>(i) + 1.0;
        }
    }

    finalize_dataset(dataset);
    return dataset;
}

Dataset parse_json_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    return parse_json(in, path);
}

nlohmann::json dataset_to_json(const Dataset& dataset)
{
    nlohmann::json snaps = nlohmann::json::array();
    for (const auto& snap : dataset.snapshots) {
        nlohmann::json records = nlohmann::json::array();
        for (const auto& rec : snap.records) {
            records.push_back({{"item_id", rec.item_id}, {"citations", rec.citations}});
        }
        snaps.push_back({{"label", snap.label}, {"t", snap.t}, {"records", std::move(records)}});
    }
    return nlohmann::json{{"snapshots", std::move(snaps)}};
}

} // namespace citeswing
