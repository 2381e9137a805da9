#include "citeswing/report.hpp"

#include "citeswing/diffusion.hpp"
#include "citeswing/errors.hpp"
#include "citeswing/temporal.hpp"
#include "citeswing/version.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace citeswing {

namespace {

using nlohmann::json;

json fit_to_json(const PowerLawFit& fit)
{
    return json{{"amplitude", round12(fit.amplitude)},
                {"exponent", round12(fit.exponent)},
                {"rms_log_residual", round12(fit.rms_log_residual)},
                {"n_points", fit.n_points},
                {"model_violation", fit.model_violation}};
}

json components_to_json(const DifferentialComponents& c)
{
    json j{{"spatial", round12(c.spatial_term)},
           {"temporal", round12(c.temporal_term)},
           {"total", round12(c.total)}};
    j["spatial_approx"] =
        c.spatial_term_approx ? json(round12(*c.spatial_term_approx)) : json(nullptr);
    return j;
}

json snapshot_to_json(const SnapshotAnalysis& a)
{
    json core{{"h", a.core.h},       {"e_sq", a.core.e_sq}, {"d_sq", a.core.d_sq},
              {"r", round12(a.core.r)}, {"tail", a.core.tail}, {"total", a.core.total}};

    json entry{{"label", a.label},
               {"t", round12(a.t)},
               {"core", std::move(core)},
               {"case", std::string(to_string(a.case_label))}};
    if (a.swing) {
        const auto& s = *a.swing;
        json swing{{"theta", round12(s.theta)},
                   {"epsilon", round12(s.epsilon)},
                   {"theta_sq", round12(s.theta_sq)},
                   {"epsilon_sq", round12(s.epsilon_sq)},
                   {"csf_exact", round12(s.csf_exact)},
                   {"branch", std::string(to_string(s.branch))}};
        swing["csf_approx"] = s.csf_approx ? json(round12(*s.csf_approx)) : json(nullptr);
        entry["swing"] = std::move(swing);
    } else {
        entry["swing"] = nullptr;
        entry["swing_undefined_reason"] = a.swing_undefined_reason;
    }
    return entry;
}

json base_report(const Dataset& dataset, const char* command,
                 std::vector<SnapshotAnalysis>& analyses)
{
    analyses.reserve(dataset.snapshots.size());
    for (const auto& snap : dataset.snapshots) {
        analyses.push_back(analyze_snapshot(snap));
    }

    json per_snapshot = json::array();
    for (const auto& a : analyses) {
        per_snapshot.push_back(snapshot_to_json(a));
    }
    return json{{"tool_version", kToolVersion},
                {"command", command},
                {"source", dataset.source_path},
                {"per_snapshot", std::move(per_snapshot)}};
}

std::string format_number(const json& value)
{
    if (value.is_number_integer()) {
        return std::to_string(value.get<std::int64_t>());
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value.get<double>());
    return buf;
}

} // namespace

double round12(double x)
{
    if (x == 0.0) {
        return 0.0;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::strtod(buf, nullptr);
}

json compute_report(const Dataset& dataset)
{
    std::vector<SnapshotAnalysis> analyses;
    return base_report(dataset, "compute", analyses);
}

json timeseries_report(const Dataset& dataset)
{
    std::vector<SnapshotAnalysis> analyses;
    json report = base_report(dataset, "timeseries", analyses);

    std::vector<const SnapshotAnalysis*> defined;
    std::vector<TimedPoint> theta_series;
    std::vector<TimedPoint> eps_series;
    for (const auto& a : analyses) {
        if (a.swing) {
            defined.push_back(&a);
            theta_series.push_back({a.t, a.swing->theta});
            eps_series.push_back({a.t, a.swing->epsilon});
        }
    }
    if (defined.size() < 2) {
        throw InsufficientData("time-series fit needs >= 2 snapshots with defined swing metrics, got " +
                               std::to_string(defined.size()));
    }

    const PowerLawFit theta_fit = fit_power_law(theta_series);
    const PowerLawFit eps_fit = fit_power_law(eps_series);
    report["fits"] = json{{"theta", fit_to_json(theta_fit)}, {"epsilon", fit_to_json(eps_fit)}};

    json components = json::array();
    for (const auto* a : defined) {
        json entry{{"label", a->label}, {"t", round12(a->t)}};
        entry["dtheta"] = theta_fit.model_violation
                              ? json(nullptr)
                              : components_to_json(dtheta_components(a->core, theta_fit, a->t));
        entry["depsilon"] = eps_fit.model_violation
                                ? json(nullptr)
                                : components_to_json(depsilon_components(a->core, eps_fit, a->t));
        components.push_back(std::move(entry));
    }
    report["components"] = std::move(components);
    return report;
}

json diffuse_report(const Dataset& dataset)
{
    std::vector<SnapshotAnalysis> analyses;
    json report = base_report(dataset, "diffuse", analyses);

    const DiffusionSeries series = diffusion_series(dataset.snapshots);

    json matrices = json::array();
    for (const auto& m : series.matrices) {
        json counts;
        for (int from = 0; from < kZoneStates; ++from) {
            json row;
            for (int to = 0; to < kZoneStates; ++to) {
                row[std::string(to_string(static_cast<ZoneState>(to)))] = m.counts[from][to];
            }
            counts[std::string(to_string(static_cast<ZoneState>(from)))] = std::move(row);
        }
        const NetFlow f = net_flow(m);
        matrices.push_back(json{{"from", m.from_label},
                                {"to", m.to_label},
                                {"counts", std::move(counts)},
                                {"net_flow",
                                 {{"tail_to_core", f.tail_to_core},
                                  {"core_to_excess", f.core_to_excess},
                                  {"excess_to_core", f.excess_to_core},
                                  {"core_to_tail", f.core_to_tail},
                                  {"tail_to_excess", f.tail_to_excess},
                                  {"excess_to_tail", f.excess_to_tail}}}});
    }
    report["transitions"] = std::move(matrices);
    return report;
}

std::string report_to_csv(const json& report)
{
    std::string out = "label,t,h,e_sq,d_sq,r,tail,total,theta,epsilon,theta_sq,epsilon_sq,"
                      "csf_exact,csf_approx,branch,case,swing_undefined_reason\n";
    for (const auto& entry : report.at("per_snapshot")) {
        const auto& core = entry.at("core");
        out += entry.at("label").get<std::string>();
        out += ',' + format_number(entry.at("t"));
        out += ',' + format_number(core.at("h"));
        out += ',' + format_number(core.at("e_sq"));
        out += ',' + format_number(core.at("d_sq"));
        out += ',' + format_number(core.at("r"));
        out += ',' + format_number(core.at("tail"));
        out += ',' + format_number(core.at("total"));
        const auto& swing = entry.at("swing");
        if (swing.is_null()) {
            out += ",,,,,,,";
            out += ',' + entry.at("case").get<std::string>();
            out += ',' + entry.at("swing_undefined_reason").get<std::string>();
        } else {
            out += ',' + format_number(swing.at("theta"));
            out += ',' + format_number(swing.at("epsilon"));
            out += ',' + format_number(swing.at("theta_sq"));
            out += ',' + format_number(swing.at("epsilon_sq"));
            out += ',' + format_number(swing.at("csf_exact"));
            out += ',';
            if (!swing.at("csf_approx").is_null()) {
                out += format_number(swing.at("csf_approx"));
            }
            out += ',' + swing.at("branch").get<std::string>();
            out += ',' + entry.at("case").get<std::string>();
            out += ',';
        }
        out += '\n';
    }
    return out;
}

} // namespace citeswing
