#include "rebelscape/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rebelscape/engine.hpp"
#include "rebelscape/metrics.hpp"

namespace rebelscape {

namespace fs = std::filesystem;

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_values(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(trim(item));
    return out;
}

[[noreturn]] void fail(int lineno, const std::string& what) {
    throw std::runtime_error("sweep line " + std::to_string(lineno) + ": " + what);
}

std::string run_dir_name(int index) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "run_%04d", index);
    return buf;
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace

SweepSpec parse_sweep_spec(const std::string& text) {
    SweepSpec spec;
    std::set<std::string> base_keys;
    std::set<std::string> axis_keys;
    bool replicates_set = false;
    bool seed_base_set = false;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::string line = trim(raw);
        if (line.empty()) continue;

        std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail(lineno, "expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(lineno, "missing key before '='");
        std::string where = "line " + std::to_string(lineno);

        if (key == "replicates") {
            if (replicates_set) fail(lineno, "duplicate key 'replicates'");
            replicates_set = true;
            try {
                spec.replicates = std::stoi(value);
            } catch (const std::exception&) {
                fail(lineno, "replicates needs an integer, got '" + value + "'");
            }
            if (spec.replicates < 1) fail(lineno, "replicates must be at least 1");
            continue;
        }
        if (key == "seed_base") {
            if (seed_base_set) fail(lineno, "duplicate key 'seed_base'");
            seed_base_set = true;
            try {
                long long s = std::stoll(value);
                if (s < 0) throw std::runtime_error("negative");
                spec.seed_base = static_cast<std::uint64_t>(s);
            } catch (const std::exception&) {
                fail(lineno, "seed_base needs a non-negative integer, got '" + value + "'");
            }
            continue;
        }
        if (key.rfind("sweep.", 0) == 0) {
            std::string axis_key = key.substr(6);
            if (!is_config_key(axis_key))
                fail(lineno, "unknown sweep key '" + axis_key + "'");
            if (base_keys.count(axis_key))
                fail(lineno, "'" + axis_key + "' is both fixed and swept");
            if (!axis_keys.insert(axis_key).second)
                fail(lineno, "duplicate sweep axis '" + axis_key + "'");
            SweepAxis axis;
            axis.key = axis_key;
            axis.values = split_values(value);
            if (axis.values.empty() ||
                std::any_of(axis.values.begin(), axis.values.end(),
                            [](const std::string& v) { return v.empty(); }))
                fail(lineno, "sweep axis '" + axis_key + "' needs non-empty values");
            spec.axes.push_back(std::move(axis));
            continue;
        }

        // Anything else is a base-scenario setting.
        if (axis_keys.count(key)) fail(lineno, "'" + key + "' is both fixed and swept");
        if (!base_keys.insert(key).second) fail(lineno, "duplicate key '" + key + "'");
        apply_config_key(spec.base, key, value, where);
    }

    // The base alone need not validate (an axis may supply the missing
    // piece), but each materialised run is validated in run_sweep.
    return spec;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const std::string& out_dir,
                                int threads) {
    // Materialise every run's config first so bad values surface before any
    // filesystem work.
    long combos = 1;
    for (const SweepAxis& axis : spec.axes)
        combos *= static_cast<long>(axis.values.size());
    const long total = combos * spec.replicates;

    struct Job {
        ScenarioConfig config;
        SweepRow row;
    };
    std::vector<Job> jobs;
    jobs.reserve(total);

    for (long combo = 0; combo < combos; ++combo) {
        // Decode the combo index with the last axis fastest.
        std::vector<std::string> values(spec.axes.size());
        long rest = combo;
        for (std::size_t a = spec.axes.size(); a-- > 0;) {
            const auto& axis = spec.axes[a];
            values[a] = axis.values[rest % axis.values.size()];
            rest /= static_cast<long>(axis.values.size());
        }

        ScenarioConfig config = spec.base;
        for (std::size_t a = 0; a < spec.axes.size(); ++a)
            apply_config_key(config, spec.axes[a].key, values[a],
                             "sweep axis '" + spec.axes[a].key + "'");

        for (int rep = 0; rep < spec.replicates; ++rep) {
            Job job;
            job.config = config;
            int run_index = static_cast<int>(combo) * spec.replicates + rep;
            job.config.seed = spec.seed_base + static_cast<std::uint64_t>(run_index);
            validate_config(job.config);
            job.row.run_index = run_index;
            job.row.seed = job.config.seed;
            job.row.axis_values = values;
            jobs.push_back(std::move(job));
        }
    }

    fs::create_directories(out_dir);

    int workers = threads > 0 ? threads
                              : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    if (workers > static_cast<int>(jobs.size())) workers = static_cast<int>(jobs.size());

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    auto work = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            try {
                Job& job = jobs[i];
                RunResult result = run(job.config);

                fs::path dir = fs::path(out_dir) / run_dir_name(job.row.run_index);
                fs::create_directories(dir);
                {
                    std::ofstream csv(dir / "run.csv", std::ios::binary);
                    write_run_csv(result, csv);
                    if (!csv.good())
                        throw std::runtime_error("failed writing " +
                                                 (dir / "run.csv").string());
                }
                {
                    std::ofstream sum(dir / "summary.txt", std::ios::binary);
                    write_summary(result, sum);
                    if (!sum.good())
                        throw std::runtime_error("failed writing " +
                                                 (dir / "summary.txt").string());
                }

                const TickRecord& last = result.records.back();
                job.row.final_quiet = last.quiet;
                job.row.final_active = last.active;
                job.row.final_jailed = last.jailed;
                job.row.final_cops = last.cops;
                job.row.final_treasury = last.treasury;
                job.row.outbursts = static_cast<int>(result.outbursts.intervals.size());
                job.row.collapsed = result.collapse.collapsed;
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    std::vector<SweepRow> rows;
    rows.reserve(jobs.size());
    for (Job& job : jobs) rows.push_back(std::move(job.row));

    std::ofstream summary(fs::path(out_dir) / "sweep_summary.csv", std::ios::binary);
    summary << sweep_summary_csv(spec, rows);
    if (!summary.good())
        throw std::runtime_error("failed writing sweep_summary.csv under " + out_dir);
    return rows;
}

std::string sweep_summary_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "run,seed";
    for (const SweepAxis& axis : spec.axes) out << ',' << axis.key;
    out << ",quiet,active,jailed,cops,treasury,outbursts,collapsed\n";
    for (const SweepRow& row : rows) {
        out << row.run_index << ',' << row.seed;
        for (const std::string& v : row.axis_values) out << ',' << v;
        out << ',' << row.final_quiet << ',' << row.final_active << ','
            << row.final_jailed << ',' << row.final_cops << ','
            << fixed6(row.final_treasury) << ',' << row.outbursts << ','
            << (row.collapsed ? "true" : "false") << '\n';
    }
    return out.str();
}

} // namespace rebelscape
