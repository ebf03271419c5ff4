#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mssc/error.hpp"
#include "mssc/io.hpp"
#include "mssc/multistart.hpp"
#include "mssc/registry.hpp"
#include "mssc/report.hpp"
#include "mssc/verify.hpp"

namespace {

void print_error(const std::string& kind, const std::string& message) {
    nlohmann::json j{{"error", kind}, {"message", message}};
    std::cerr << j.dump() << '\n';
}

struct RunOptions {
    std::string dataset;
    std::string name;
    std::string format = "matrix";
    std::size_t k = 2;
    std::string starter = "merging";
    double alpha = 1.5;
    std::string grasp = "on";
    std::string improve = "hybrid";
    int lloyd_cap = 10;
    std::size_t restarts = 1000;
    std::uint64_t seed = 1;
    std::size_t threads = 1;
    std::string out;
    std::string emit = "csv";
};

struct TableOptions {
    std::string preset = "small";
    std::string data_dir = MSSC_DEFAULT_DATA_DIR;
    std::size_t restarts = 0;
    std::uint64_t seed = 1;
    std::size_t threads = 1;
    std::string out;
    std::string emit = "table";
};

// Fill options missing from the command line with `key=value` lines from a config file.
void apply_config_file(CLI::App& cmd, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw mssc::IoError("cannot open config file '" + path + "'");
    }
    for (const auto& item : CLI::ConfigINI().from_config(in)) {
        if (item.name == "++" || item.name == "--") {
            continue;
        }
        CLI::Option* opt = cmd.get_option_no_throw("--" + item.name);
        if (opt == nullptr || item.name == "config") {
            throw mssc::InvalidInput("unknown config key '" + item.fullname() + "'");
        }
        if (opt->count() == 0) {
            opt->add_result(item.inputs);
            opt->run_callback();
        }
    }
}

mssc::RunConfig to_config(const RunOptions& o) {
    mssc::RunConfig c;
    c.dataset_path = o.dataset;
    c.dataset_name = o.name;
    c.format = mssc::parse_dataset_format(o.format);
    c.k = o.k;
    c.starter.kind = mssc::parse_starter_kind(o.starter);
    c.starter.alpha = mssc::AlphaRule(o.alpha);
    c.starter.grasp = o.grasp == "on";
    c.improve.mode = mssc::parse_improve_mode(o.improve);
    c.improve.lloyd_cap = o.lloyd_cap;
    c.restarts = o.restarts;
    c.seed = o.seed;
    c.threads = o.threads;
    c.out = o.out;
    return c;
}

int do_run(const RunOptions& o) {
    const mssc::RunConfig config = to_config(o);
    const mssc::RunReport report = mssc::run_multistart(config);
    for (std::size_t i = 0; i < report.runs.size(); ++i) {
        if (!report.runs[i].error.empty()) {
            nlohmann::json j{{"warning", "restart_failed"}, {"restart", i}, {"message", report.runs[i].error}};
            std::cerr << j.dump() << '\n';
        }
    }
    mssc::emit_report({mssc::to_row(report)}, mssc::parse_report_format(o.emit), o.out);
    return report.best_objective ? 0 : 1;
}

struct Preset {
    std::vector<std::string> datasets;
    std::size_t restarts;
    std::vector<mssc::StarterConfig> starters;
};

Preset preset(const std::string& name) {
    using mssc::AlphaRule;
    using mssc::StarterKind;
    const mssc::StarterConfig construction{StarterKind::construction, AlphaRule(1.5), true};
    const mssc::StarterConfig separation{StarterKind::separation, AlphaRule(1.5), true};
    auto merging = [](double a) { return mssc::StarterConfig{StarterKind::merging, AlphaRule(a), true}; };
    if (name == "small") {
        return {{"ruspini75", "fisher", "gr202", "gr666"}, 1000, {merging(1.5), construction, separation}};
    }
    if (name == "medium") {
        return {{"tsplib1060", "tsplib3038", "pendigit"},
                1000,
                {merging(1.5), merging(2.0), construction, separation}};
    }
    if (name == "large") {
        return {{"letter", "kegg", "pla85900"},
                100,
                {merging(1.1), merging(1.5), merging(2.0), construction, separation}};
    }
    throw mssc::InvalidInput("unknown preset '" + name + "'");
}

int do_table(const TableOptions& o) {
    const Preset grid = preset(o.preset);
    std::vector<mssc::ReportRow> rows;
    for (const auto& name : grid.datasets) {
        const auto entry = mssc::manifest_entry(name);
        const auto path = entry ? mssc::find_dataset_file(o.data_dir, *entry) : std::nullopt;
        if (!path) {
            nlohmann::json j{{"warning", "dataset_missing"}, {"dataset", name}, {"data_dir", o.data_dir}};
            std::cerr << j.dump() << '\n';
            continue;
        }
        const mssc::Dataset data = mssc::load_dataset(*path, entry->format, name);
        for (const auto& known : mssc::best_known_registry()) {
            if (known.name != name) {
                continue;
            }
            for (const auto& starter : grid.starters) {
                mssc::RunConfig c;
                c.k = known.k;
                c.starter = starter;
                c.restarts = o.restarts ? o.restarts : grid.restarts;
                c.seed = o.seed;
                c.threads = o.threads;
                rows.push_back(mssc::to_row(mssc::run_multistart(data, c)));
            }
        }
    }
    mssc::emit_report(rows, mssc::parse_report_format(o.emit), o.out);
    return 0;
}

int do_verify() {
    bool ok = true;
    for (const auto& check : mssc::run_verify()) {
        std::cout << (check.passed ? "PASS " : "FAIL ") << check.name << ": " << check.detail << '\n';
        ok = ok && check.passed;
    }
    return ok ? 0 : 1;
}

}

int main(int argc, char** argv) {
    CLI::App app{"Minimum sum-of-squares clustering heuristics"};
    app.require_subcommand(1);

    RunOptions run;
    auto* run_cmd = app.add_subcommand("run", "Multi-start runs on one dataset");
    std::string run_config;
    run_cmd->add_option("--config", run_config, "key=value file; command-line options take precedence");
    run_cmd->add_option("--dataset", run.dataset, "Dataset file");
    run_cmd->add_option("--name", run.name, "Dataset name for best-known lookup (default: file stem)");
    run_cmd->add_option("--format", run.format)->check(CLI::IsMember({"matrix", "tsplib"}))->capture_default_str();
    run_cmd->add_option("--k", run.k, "Number of clusters")->check(CLI::PositiveNumber);
    run_cmd->add_option("--starter", run.starter)
        ->check(CLI::IsMember({"merging", "merging-basic", "construction", "separation", "random-partition",
                               "random-points", "kmeanspp"}))
        ->capture_default_str();
    run_cmd->add_option("--alpha", run.alpha, "Merging acceptance factor (>= 1)")->capture_default_str();
    run_cmd->add_option("--grasp", run.grasp)->check(CLI::IsMember({"on", "off"}))->capture_default_str();
    run_cmd->add_option("--improve", run.improve)
        ->check(CLI::IsMember({"hybrid", "lloyd", "phase3", "none"}))
        ->capture_default_str();
    run_cmd->add_option("--lloyd-cap", run.lloyd_cap)->check(CLI::NonNegativeNumber)->capture_default_str();
    run_cmd->add_option("--restarts", run.restarts)->check(CLI::PositiveNumber)->capture_default_str();
    run_cmd->add_option("--seed", run.seed)->capture_default_str();
    run_cmd->add_option("--threads", run.threads, "Worker threads, 0 for all cores")->capture_default_str();
    run_cmd->add_option("--out", run.out, "Output file (default: stdout)");
    run_cmd->add_option("--emit", run.emit)->check(CLI::IsMember({"csv", "table"}))->capture_default_str();

    TableOptions table;
    auto* table_cmd = app.add_subcommand("table", "Best-known comparison tables for the available datasets");
    std::string table_config;
    table_cmd->add_option("--config", table_config, "key=value file; command-line options take precedence");
    table_cmd->add_option("--preset", table.preset)
        ->check(CLI::IsMember({"small", "medium", "large"}))
        ->capture_default_str();
    table_cmd->add_option("--data-dir", table.data_dir)->capture_default_str();
    table_cmd->add_option("--restarts", table.restarts, "Override the preset restart count");
    table_cmd->add_option("--seed", table.seed)->capture_default_str();
    table_cmd->add_option("--threads", table.threads)->capture_default_str();
    table_cmd->add_option("--out", table.out);
    table_cmd->add_option("--emit", table.emit)->check(CLI::IsMember({"csv", "table"}))->capture_default_str();

    app.add_subcommand("verify", "Check the implementation against the oracles");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("usage", e.what());
        return 2;
    }

    try {
        if (*run_cmd && !run_config.empty()) {
            apply_config_file(*run_cmd, run_config);
        }
        if (*table_cmd && !table_config.empty()) {
            apply_config_file(*table_cmd, table_config);
        }
        if (*run_cmd && (run_cmd->count("--dataset") == 0 || run_cmd->count("--k") == 0)) {
            print_error("usage", "run needs --dataset and --k");
            return 2;
        }
    } catch (const CLI::Error& e) {
        print_error("usage", e.what());
        return 2;
    } catch (const mssc::Error& e) {
        print_error(e.kind(), e.what());
        return 2;
    }

    try {
        if (*run_cmd) {
            return do_run(run);
        }
        if (*table_cmd) {
            return do_table(table);
        }
        return do_verify();
    } catch (const mssc::Error& e) {
        print_error(e.kind(), e.what());
    } catch (const std::exception& e) {
        print_error("internal", e.what());
    }
    return 1;
}
