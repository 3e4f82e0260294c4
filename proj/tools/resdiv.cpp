// resdiv: exact counts, variance statistics and bound checks for the
// restricted divisor function over arithmetic progressions.
//
// One-shot:  resdiv gamma --q 101 --M 21 --N 21 --R 10
// Grid scan: resdiv scan --config sweep.cfg
// Any flag value accepts the config syntax: lists (101,211), ranges
// (1..10..1) and power rules (q^{2/3}).

#include "resdiv/experiment.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

namespace {

struct CliOptions {
    std::string config_path;
    std::map<std::string, std::string> kv;  // merged key=value document
    bool timing = false;
};

int fail_validation(const std::vector<std::string>& errors) {
    for (const auto& e : errors) std::cerr << "error: " << e << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"restricted divisor function statistics over arithmetic progressions"};
    app.require_subcommand(1);

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"tau", "restricted divisor count tau_{M,N}(k)"},
        {"count", "per-residue congruence solution counts (T, T*, R families)"},
        {"charsum", "maximal nonprincipal incomplete character sum"},
        {"moments", "fourth moment of incomplete character sums"},
        {"delta", "variance of progression counts over one residue family"},
        {"gamma", "variance of dilated progression counts, prime modulus"},
        {"variance", "congruence-count variance about its main term (T* or R)"},
        {"bounds", "evaluate the upper-bound formulas at given parameters"},
        {"conjecture", "dilated progression total against M N R / q"},
        {"scan", "run the command and grid from a config file"},
    };
    const std::vector<std::string> value_flags = {"q",  "d",  "M",     "N",   "R", "X", "Y",
                                                  "Z",  "a",  "k",     "nu",  "delta", "eps",
                                                  "parallelism", "format", "out", "seed"};

    std::map<std::string, CliOptions> opts;
    std::map<std::string, std::map<std::string, std::string>> flag_values;
    for (const auto& [name, desc] : commands) {
        auto* sub = app.add_subcommand(name, desc);
        auto& o = opts[name];
        sub->add_option("--config", o.config_path, "key=value config file");
        sub->add_flag("--timing", o.timing, "measure per-row wall time (ms column)");
        for (const auto& flag : value_flags) {
            if (name == "scan") break;  // scans are fully config-driven
            if (flag == "k" && name != "tau") continue;
            sub->add_option("--" + flag, flag_values[name][flag]);
        }
    }

    CLI11_PARSE(app, argc, argv);
    const std::string sub_name = app.get_subcommands().front()->get_name();
    const CliOptions& o = opts[sub_name];

    std::vector<std::string> errors;
    std::map<std::string, std::string> kv;
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path, std::ios::binary);
        if (!in) {
            std::cerr << "error: cannot read config file '" << o.config_path << "'\n";
            return 3;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        kv = resdiv::parse_key_values(buf.str(), errors);
    } else if (sub_name == "scan") {
        std::cerr << "error: scan requires --config\n";
        return 1;
    }
    if (sub_name != "scan") {
        kv["command"] = sub_name;
        for (const auto& [flag, value] : flag_values[sub_name])
            if (!value.empty()) kv[flag] = value;  // flags override the file
    }
    if (o.timing) kv["timing"] = "on";

    auto parsed = resdiv::build_config(kv);
    errors.insert(errors.end(), parsed.errors.begin(), parsed.errors.end());
    if (!errors.empty()) return fail_validation(errors);
    const resdiv::ExperimentConfig& cfg = *parsed.config;

    std::vector<resdiv::ReportRow> rows;
    std::string bytes;
    try {
        rows = resdiv::run_scan(cfg);
        bytes = resdiv::emit_report(rows, cfg.format);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }

    if (cfg.output_path.empty() || cfg.output_path == "-") {
        std::cout << bytes;
        if (!std::cout) {
            std::cerr << "error: write to standard output failed\n";
            return 3;
        }
    } else {
        std::ofstream out(cfg.output_path, std::ios::binary);
        if (!out || !(out << bytes) || (out.close(), !out)) {
            std::cerr << "error: cannot write output file '" << cfg.output_path << "'\n";
            return 3;
        }
    }

    for (const auto& row : rows)
        if (!row.error.empty()) {
            std::cerr << "warning: " << row.error << " (error rows present)\n";
            return 2;
        }
    return 0;
}
