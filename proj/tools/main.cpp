// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: dataset fitting, closed-form tabulation, mobility
// sweeps and the self-validation suite.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "orilink/runner.hpp"
#include "orilink/version.hpp"

namespace {

using orilink::RunConfig;
using orilink::Scenario;
using orilink::TableArtifact;

// Relative outputs land in ORILINK_OUTPUT_DIR when it is set.
std::string resolve_output(const std::string& path) {
    if (path.empty()) return path;
    if (path.front() == '/') return path;
    const char* dir = std::getenv("ORILINK_OUTPUT_DIR");
    if (!dir || !*dir) return path;
    std::string base = dir;
    if (base.back() != '/') base += '/';
    return base + path;
}

void emit(const TableArtifact& table, const std::string& output) {
    const std::string path = resolve_output(output);
    if (path.empty()) {
        table.write_csv(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw orilink::ValidationError("cannot open output '" + path + "'");
    table.write_csv(out);
    std::cerr << "wrote " << table.rows.size() << " rows to " << path << "\n";
}

RunConfig load_or_default(const std::string& config_path) {
    if (config_path.empty()) return orilink::parse_config("{}");
    return orilink::load_config(config_path);
}

int run_and_emit(RunConfig cfg, const std::string& output_flag) {
    if (!output_flag.empty()) cfg.output = output_flag;
    const TableArtifact table = orilink::run(cfg);
    emit(table, cfg.output);
    if (cfg.scenario == Scenario::Validate) {
        std::size_t failed = 0;
        for (const auto& row : table.rows) {
            std::cerr << (row[3] == "pass" ? "[PASS] " : "[FAIL] ") << row[0]
                      << " measured=" << row[1] << " bound=" << row[2] << "\n";
            if (row[3] != "pass") ++failed;
        }
        if (!table.ok) {
            std::cerr << failed << " validation check(s) failed\n";
            return 2;
        }
        std::cerr << "all " << table.rows.size() << " validation checks passed\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Device-orientation statistics and optical wireless link models"};
    app.require_subcommand(1);

    std::string config_path;
    std::string output_flag;
    std::string dataset_path;
    std::uint64_t seed_flag = 0;
    bool seed_set = false;
    std::size_t trajectory_runs = 10;

    auto* fit = app.add_subcommand("fit", "Fit orientation models to a measurement CSV");
    fit->add_option("csv", dataset_path, "dataset with header t_seconds,alpha_deg,beta_deg,gamma_deg")
        ->required();
    fit->add_option("--output,-o", output_flag, "output CSV path (default: stdout)");

    auto* tabulate = app.add_subcommand("tabulate", "Tabulate closed-form densities");
    tabulate->require_subcommand(1);
    auto add_tab = [&](const char* name, const char* help) {
        auto* sub = tabulate->add_subcommand(name, help);
        sub->add_option("--config,-c", config_path, "JSON config file");
        sub->add_option("--output,-o", output_flag, "output CSV path (default: stdout)");
        return sub;
    };
    auto* tab_cospsi = add_tab("cospsi", "incidence-angle cosine density table");
    auto* tab_gain = add_tab("gain", "channel gain density table");
    auto* tab_snr = add_tab("snr", "SNR density table");

    auto* orwp = app.add_subcommand("orwp", "Mobility simulations");
    orwp->require_subcommand(1);
    auto* sweep = orwp->add_subcommand("sweep", "handover-rate sweep over room lengths and speeds");
    sweep->add_option("--config,-c", config_path, "JSON config file");
    sweep->add_option("--output,-o", output_flag, "output CSV path (default: stdout)");
    auto* traj = orwp->add_subcommand("trajectory", "export one seeded trajectory");
    traj->add_option("--config,-c", config_path, "JSON config file");
    traj->add_option("--output,-o", output_flag, "output CSV path (default: stdout)");
    traj->add_option("--runs,-n", trajectory_runs, "number of waypoint legs");

    auto* validate = app.add_subcommand("validate", "run the numerical self-checks");
    validate->add_option("--config,-c", config_path, "JSON config file");
    validate->add_option("--seed,-s", seed_flag, "override the config seed")
        ->each([&](const std::string&) { seed_set = true; });
    validate->add_option("--output,-o", output_flag, "output CSV path (default: stdout)");

    try {
        app.parse(argc, argv);

        if (fit->parsed()) {
            TableArtifact table = orilink::fit_dataset_table(
                orilink::ingest_orientation_csv(dataset_path));
            RunConfig cfg = orilink::parse_config("{}");
            cfg.scenario = Scenario::FitDataset;
            cfg.input = dataset_path;
            table.config_hash = orilink::config_hash(cfg);
            table.version = orilink::kVersion;
            emit(table, output_flag);
            return 0;
        }

        RunConfig cfg = load_or_default(config_path);
        if (tab_cospsi->parsed()) cfg.scenario = Scenario::TabulateCosPsi;
        if (tab_gain->parsed()) cfg.scenario = Scenario::TabulateGain;
        if (tab_snr->parsed()) cfg.scenario = Scenario::TabulateSnr;
        if (sweep->parsed()) cfg.scenario = Scenario::OrwpSweep;
        if (validate->parsed()) {
            cfg.scenario = Scenario::Validate;
            if (seed_set) cfg.seed = seed_flag;
        }
        if (traj->parsed()) {
            if (!output_flag.empty()) cfg.output = output_flag;
            emit(orilink::trajectory_table(cfg, trajectory_runs), cfg.output);
            return 0;
        }
        return run_and_emit(cfg, output_flag);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const orilink::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
