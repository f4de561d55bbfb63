#include "rebelscape/metrics.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rebelscape {

namespace {

// Fixed 6-decimal rendering, locale-independent for our purposes (the
// binaries never switch locale).
std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace

OutburstReport detect_outbursts(const std::vector<int>& active_series, int high,
                                int low, int min_gap) {
    if (high <= low) throw std::invalid_argument("outburst high must exceed low");
    if (min_gap < 1) throw std::invalid_argument("outburst gap must be positive");

    OutburstReport report;

    // Maximal runs at or above `high`, as [first, last] indices.
    struct Run {
        int first;
        int last;
    };
    std::vector<Run> runs;
    const int n = static_cast<int>(active_series.size());
    for (int i = 0; i < n; ++i) {
        if (active_series[i] < high) continue;
        if (!runs.empty() && runs.back().last == i - 1)
            runs.back().last = i;
        else
            runs.push_back({i, i});
    }
    if (runs.empty()) return report;

    // Merge neighbouring runs unless a full quiet spell separates them: at
    // least min_gap consecutive ticks at or below `low`.
    auto quiet_spell_between = [&](int from, int to) {
        int streak = 0;
        for (int i = from; i <= to; ++i) {
            if (active_series[i] <= low) {
                if (++streak >= min_gap) return true;
            } else {
                streak = 0;
            }
        }
        return false;
    };

    std::vector<Run> merged{runs.front()};
    for (std::size_t r = 1; r < runs.size(); ++r) {
        if (quiet_spell_between(merged.back().last + 1, runs[r].first - 1))
            merged.push_back(runs[r]);
        else
            merged.back().last = runs[r].last;
    }

    for (const Run& run : merged) {
        OutburstInterval iv;
        iv.begin = run.first + 1; // ticks are 1-based
        iv.end = run.last + 1;
        int peak_at = run.first;
        for (int i = run.first + 1; i <= run.last; ++i)
            if (active_series[i] > active_series[peak_at]) peak_at = i;
        iv.peak_tick = peak_at + 1;
        iv.peak_value = active_series[peak_at];
        report.intervals.push_back(iv);
    }

    if (report.intervals.size() >= 2) {
        double sum = 0.0;
        for (std::size_t i = 1; i < report.intervals.size(); ++i)
            sum += static_cast<double>(report.intervals[i].peak_tick -
                                       report.intervals[i - 1].peak_tick);
        report.mean_peak_gap = sum / static_cast<double>(report.intervals.size() - 1);
    }
    return report;
}

CollapseReport detect_collapse(const std::vector<TickRecord>& records, int window) {
    if (window < 1) throw std::invalid_argument("collapse window must be positive");

    CollapseReport report;
    int streak = 0;
    for (const TickRecord& r : records) {
        if (r.active > r.quiet)
            ++streak;
        else
            streak = 0;
        bool majority_unrest = streak >= window;
        bool force_wiped = r.cops == 0 && r.active > 0;
        if (majority_unrest || force_wiped) {
            report.collapsed = true;
            report.first_tick = r.tick;
            return report;
        }
    }
    return report;
}

void write_run_csv(const RunResult& result, std::ostream& out) {
    out << "tick,quiet,active,jailed,cops,treasury,revenue,assistance_paid,"
           "new_cops,cop_deaths,mean_person_wealth,poor_count,active_poor_fraction\n";
    for (const TickRecord& r : result.records) {
        out << r.tick << ',' << r.quiet << ',' << r.active << ',' << r.jailed << ','
            << r.cops << ',' << fixed6(r.treasury) << ',' << fixed6(r.revenue) << ','
            << fixed6(r.assistance_paid) << ',' << r.new_cops << ',' << r.cop_deaths
            << ',' << fixed6(r.mean_person_wealth) << ',' << r.poor_count << ','
            << fixed6(r.active_poor_fraction) << '\n';
    }
}

std::string run_csv(const RunResult& result) {
    std::ostringstream ss;
    write_run_csv(result, ss);
    return ss.str();
}

void write_summary(const RunResult& result, std::ostream& out) {
    TickRecord last;
    if (!result.records.empty()) last = result.records.back();
    out << "ticks = " << result.records.size() << '\n'
        << "final_quiet = " << last.quiet << '\n'
        << "final_active = " << last.active << '\n'
        << "final_jailed = " << last.jailed << '\n'
        << "final_cops = " << last.cops << '\n'
        << "final_treasury = " << fixed6(last.treasury) << '\n'
        << "initial_patch_level = "
        << fixed6(result.mean_patch_level.empty() ? 0.0 : result.mean_patch_level.front()) << '\n'
        << "final_patch_level = "
        << fixed6(result.mean_patch_level.empty() ? 0.0 : result.mean_patch_level.back()) << '\n'
        << "outburst_count = " << result.outbursts.intervals.size() << '\n'
        << "outburst_mean_peak_gap = " << fixed6(result.outbursts.mean_peak_gap) << '\n'
        << "collapsed = " << (result.collapse.collapsed ? "true" : "false") << '\n'
        << "collapse_tick = " << result.collapse.first_tick << '\n';
}

std::string run_summary(const RunResult& result) {
    std::ostringstream ss;
    write_summary(result, ss);
    return ss.str();
}

} // namespace rebelscape
