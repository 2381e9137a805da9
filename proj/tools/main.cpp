#include "citeswing/errors.hpp"
#include "citeswing/ingest.hpp"
#include "citeswing/report.hpp"
#include "citeswing/version.hpp"

#include "generator.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw citeswing::ParseError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Input format is sniffed: a document whose first non-whitespace byte
// is '{' is JSON, anything else is the CSV schema.
citeswing::Dataset load_dataset(const std::string& path)
{
    const std::string text = read_input(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    std::istringstream stream(text);
    if (first != std::string::npos && text[first] == '{') {
        return citeswing::parse_json(stream, path);
    }
    return citeswing::parse_csv(stream, path);
}

void emit_warnings(const citeswing::Dataset& dataset)
{
    for (const auto& w : dataset.warnings) {
        std::cerr << "warning: " << w << '\n';
    }
}

int run(int argc, char** argv)
{
    CLI::App app{"h-type citation indicators, swing factor and zone diffusion"};
    app.set_version_flag("--version", std::string("citeswing ") + citeswing::kToolVersion);
    app.require_subcommand(1);

    std::string compute_input = "-";
    std::string compute_format = "json";
    auto* compute = app.add_subcommand("compute", "Per-snapshot core and swing metrics");
    compute->add_option("-i,--input", compute_input, "input file, or '-' for stdin");
    compute->add_option("--format", compute_format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string timeseries_input = "-";
    auto* timeseries =
        app.add_subcommand("timeseries", "Power-law fits of theta(t) and epsilon(t)");
    timeseries->add_option("-i,--input", timeseries_input, "input file, or '-' for stdin");

    std::string diffuse_input = "-";
    auto* diffuse = app.add_subcommand("diffuse", "Zone transition matrices between snapshots");
    diffuse->add_option("-i,--input", diffuse_input, "input file, or '-' for stdin");

    citeswing::tools::GenParams params;
    std::string model_name = "uniform";
    auto* gen = app.add_subcommand("gen", "Generate a deterministic synthetic corpus (CSV)");
    gen->add_option("--seed", params.seed, "RNG seed");
    gen->add_option("--items", params.n_items, "number of items")->check(CLI::PositiveNumber);
    gen->add_option("--snapshots", params.n_snapshots, "number of snapshots")
        ->check(CLI::PositiveNumber);
    gen->add_option("--model", model_name, "growth model")
        ->check(CLI::IsMember({"uniform", "rich"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*compute) {
        const auto dataset = load_dataset(compute_input);
        emit_warnings(dataset);
        const auto report = citeswing::compute_report(dataset);
        if (compute_format == "csv") {
            std::cout << citeswing::report_to_csv(report);
        } else {
            std::cout << report.dump(2) << '\n';
        }
    } else if (*timeseries) {
        const auto dataset = load_dataset(timeseries_input);
        emit_warnings(dataset);
        std::cout << citeswing::timeseries_report(dataset).dump(2) << '\n';
    } else if (*diffuse) {
        const auto dataset = load_dataset(diffuse_input);
        emit_warnings(dataset);
        std::cout << citeswing::diffuse_report(dataset).dump(2) << '\n';
    } else if (*gen) {
        params.model = model_name == "rich" ? citeswing::tools::GrowthModel::Rich
                                            : citeswing::tools::GrowthModel::Uniform;
        std::cout << citeswing::tools::generate_csv(params);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const citeswing::EmptyInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const citeswing::InsufficientData& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const citeswing::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
