#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rebelscape/engine.hpp"
#include "rebelscape/metrics.hpp"
#include "rebelscape/scenario.hpp"
#include "rebelscape/sweep.hpp"

namespace fs = std::filesystem;
using namespace rebelscape;

namespace {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out.good()) throw std::runtime_error("failed writing " + path.string());
}

// Apply repeatable --set key=value overrides on top of a config.
void apply_overrides(ScenarioConfig& config, const std::vector<std::string>& sets) {
    for (const std::string& kv : sets) {
        std::size_t eq = kv.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("--set expects key=value, got '" + kv + "'");
        std::string key = kv.substr(0, eq);
        std::string value = kv.substr(eq + 1);
        apply_config_key(config, key, value, "--set " + key);
    }
}

int cmd_run(const std::string& preset_name, const std::string& config_path,
            const std::vector<std::string>& sets, long long seed_override,
            const std::string& out_dir, bool quiet) {
    ScenarioConfig config;
    if (!config_path.empty())
        config = parse_config(read_text_file(config_path));
    else if (!preset_name.empty())
        config = preset(preset_name);

    apply_overrides(config, sets);
    if (seed_override >= 0) config.seed = static_cast<std::uint64_t>(seed_override);
    validate_config(config);

    RunResult result = run(config);

    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        write_text_file(fs::path(out_dir) / "run.csv", run_csv(result));
        write_text_file(fs::path(out_dir) / "summary.txt", run_summary(result));
        write_text_file(fs::path(out_dir) / "config.txt", render_config(config));
    }
    if (!quiet) {
        std::cout << run_summary(result);
        if (out_dir.empty())
            std::cout << "# pass --out DIR to save run.csv and summary.txt\n";
    }
    return 0;
}

int cmd_sweep(const std::string& spec_path, const std::string& out_dir, int threads,
              bool quiet) {
    SweepSpec spec = parse_sweep_spec(read_text_file(spec_path));
    auto rows = run_sweep(spec, out_dir, threads);
    if (!quiet) {
        std::cout << "ran " << rows.size() << " runs into " << out_dir << "\n";
        int collapsed = 0;
        for (const auto& row : rows) collapsed += row.collapsed ? 1 : 0;
        std::cout << "collapsed runs: " << collapsed << "/" << rows.size() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rebelscape: civil unrest on a resource landscape"};
    app.require_subcommand(1);

    // run
    std::string run_preset;
    std::string run_config;
    std::vector<std::string> run_sets;
    long long run_seed = -1;
    std::string run_out;
    bool run_quiet = false;

    auto* run_cmd = app.add_subcommand("run", "simulate one scenario");
    run_cmd->add_option("--preset", run_preset, "named scenario (see --list-presets)");
    run_cmd->add_option("--config", run_config, "scenario file (key = value lines)")
        ->check(CLI::ExistingFile);
    run_cmd->add_option("--set", run_sets, "override one key, e.g. --set ticks=500")
        ->take_all();
    run_cmd->add_option("--seed", run_seed, "override the seed");
    run_cmd->add_option("--out", run_out, "directory for run.csv / summary.txt");
    run_cmd->add_flag("--quiet", run_quiet, "suppress the summary on stdout");
    run_cmd->callback([&] {
        if (!run_preset.empty() && !run_config.empty())
            throw CLI::ValidationError("run", "--preset and --config are exclusive");
    });

    // sweep
    std::string sweep_spec_path;
    std::string sweep_out;
    int sweep_threads = 0;
    bool sweep_quiet = false;

    auto* sweep_cmd = app.add_subcommand("sweep", "run a parameter sweep");
    sweep_cmd->add_option("spec", sweep_spec_path, "sweep spec file")
        ->required()
        ->check(CLI::ExistingFile);
    sweep_cmd->add_option("--out", sweep_out, "output directory")->required();
    sweep_cmd->add_option("--threads", sweep_threads,
                          "worker threads (default: hardware)");
    sweep_cmd->add_flag("--quiet", sweep_quiet, "suppress progress on stdout");

    // presets
    auto* presets_cmd = app.add_subcommand("presets", "list the named scenarios");

    CLI11_PARSE(app, argc, argv);

    try {
        if (presets_cmd->parsed()) {
            for (const auto& name : preset_names()) std::cout << name << "\n";
            return 0;
        }
        if (run_cmd->parsed())
            return cmd_run(run_preset, run_config, run_sets, run_seed, run_out,
                           run_quiet);
        if (sweep_cmd->parsed())
            return cmd_sweep(sweep_spec_path, sweep_out, sweep_threads, sweep_quiet);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
