#include "rebelscape/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rebelscape {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw std::runtime_error("config " + where + ": " + what);
}

long long parse_int(const std::string& v, const std::string& key,
                    const std::string& where) {
    std::size_t used = 0;
    long long out = 0;
    try {
        out = std::stoll(v, &used);
    } catch (const std::exception&) {
        fail(where, "key '" + key + "' needs an integer, got '" + v + "'");
    }
    if (used != v.size())
        fail(where, "key '" + key + "' needs an integer, got '" + v + "'");
    return out;
}

double parse_real(const std::string& v, const std::string& key,
                  const std::string& where) {
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(v, &used);
    } catch (const std::exception&) {
        fail(where, "key '" + key + "' needs a number, got '" + v + "'");
    }
    if (used != v.size())
        fail(where, "key '" + key + "' needs a number, got '" + v + "'");
    return out;
}

bool parse_bool(const std::string& v, const std::string& key,
                const std::string& where) {
    std::string low = v;
    std::transform(low.begin(), low.end(), low.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (low == "true" || low == "on" || low == "1" || low == "yes") return true;
    if (low == "false" || low == "off" || low == "0" || low == "no") return false;
    fail(where, "key '" + key + "' needs a boolean, got '" + v + "'");
}

std::vector<Position> parse_peaks(const std::string& v, const std::string& where) {
    std::vector<Position> peaks;
    std::stringstream ss(v);
    std::string pair;
    while (std::getline(ss, pair, ';')) {
        pair = trim(pair);
        if (pair.empty()) fail(where, "key 'map_peaks' has an empty entry");
        std::size_t comma = pair.find(',');
        if (comma == std::string::npos)
            fail(where, "key 'map_peaks' entries need the form x,y; got '" + pair + "'");
        Position p;
        p.x = static_cast<int>(parse_int(trim(pair.substr(0, comma)), "map_peaks", where));
        p.y = static_cast<int>(parse_int(trim(pair.substr(comma + 1)), "map_peaks", where));
        peaks.push_back(p);
    }
    if (peaks.empty()) fail(where, "key 'map_peaks' needs at least one x,y pair");
    return peaks;
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string render_peaks(const std::vector<Position>& peaks) {
    std::string out;
    for (std::size_t i = 0; i < peaks.size(); ++i) {
        if (i) out += ";";
        out += std::to_string(peaks[i].x) + "," + std::to_string(peaks[i].y);
    }
    return out;
}

} // namespace

namespace {

struct KeyEntry {
    const char* name;
    void (*apply)(ScenarioConfig&, const std::string& value, const std::string& where);
};

int to_int(const std::string& v, const char* key, const std::string& where) {
    return static_cast<int>(parse_int(v, key, where));
}

// Single source of truth for the accepted keys.
const KeyEntry kKeys[] = {
    {"width", [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         c.width = to_int(v, "width", w); }},
    {"height", [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         c.height = to_int(v, "height", w); }},
    {"map_kind", [](ScenarioConfig& c, const std::string& v, const std::string&) {
         c.map_kind = v; }},
    {"map_sigma", [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         c.map_sigma = parse_real(v, "map_sigma", w); }},
    {"map_peaks", [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         c.map_peaks = parse_peaks(v, w); }},
    {"map_file", [](ScenarioConfig& c, const std::string& v, const std::string&) {
         c.map_file = v; }},
    {"agents", [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         c.agents = to_int(v, "agents", w); }},
    {"cops", [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         c.cops = to_int(v, "cops", w); }},
    {"movement", [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         c.movement = parse_bool(v, "movement", w); }},
    {"cop_pursuit", [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         c.cop_pursuit = parse_bool(v, "cop_pursuit", w); }},
    {"tax_rate", [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         c.tax_rate = parse_real(v, "tax_rate", w); }},
    {"wealth_distribution",
     [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         c.wealth_distribution = parse_real(v, "wealth_distribution", w); }},
    {"wealth_to_create_cop",
     [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         c.wealth_to_create_cop = parse_real(v, "wealth_to_create_cop", w); }},
    {"cop_upkeep", [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         c.cop_upkeep = parse_real(v, "cop_upkeep", w); }},
    {"cop_cost", [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         c.cop_cost = parse_real(v, "cop_cost", w); }},
    {"poverty_line", [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         c.poverty_line = parse_real(v, "poverty_line", w); }},
    {"government_legitimacy",
     [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         c.government_legitimacy = parse_real(v, "government_legitimacy", w); }},
    {"threshold", [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         c.threshold = parse_real(v, "threshold", w); }},
    {"arrest_k", [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         c.arrest_k = parse_real(v, "arrest_k", w); }},
    {"max_jail_term", [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         c.max_jail_term = to_int(v, "max_jail_term", w); }},
    {"person_vision", [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         c.person_vision = to_int(v, "person_vision", w); }},
    {"cop_vision", [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         c.cop_vision = to_int(v, "cop_vision", w); }},
    {"metabolism", [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         c.metabolism = parse_real(v, "metabolism", w); }},
    {"ticks", [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         c.ticks = to_int(v, "ticks", w); }},
    {"seed", [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         long long s = parse_int(v, "seed", w);
         if (s < 0) fail(w, "key 'seed' must be non-negative");
         c.seed = static_cast<std::uint64_t>(s); }},
    {"outburst_high", [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         c.outburst_high = to_int(v, "outburst_high", w); }},
    {"outburst_low", [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         c.outburst_low = to_int(v, "outburst_low", w); }},
    {"outburst_gap", [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         c.outburst_gap = to_int(v, "outburst_gap", w); }},
    {"collapse_window",
     [](ScenarioConfig& c, const std::string& v, const std::string& w) {
         c.collapse_window = to_int(v, "collapse_window", w); }},
};

} // namespace

void apply_config_key(ScenarioConfig& c, const std::string& key,
                      const std::string& value, const std::string& where) {
    for (const KeyEntry& entry : kKeys) {
        if (key == entry.name) {
            entry.apply(c, value, where);
            return;
        }
    }
    fail(where, "unknown key '" + key + "'");
}

bool is_config_key(const std::string& key) {
    for (const KeyEntry& entry : kKeys)
        if (key == entry.name) return true;
    return false;
}

ScenarioConfig parse_config(const std::string& text) {
    ScenarioConfig config;
    std::set<std::string> seen;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string where = "line " + std::to_string(lineno);
        std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::string line = trim(raw);
        if (line.empty()) continue;

        std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail(where, "expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(where, "missing key before '='");

        if (!seen.insert(key).second) fail(where, "duplicate key '" + key + "'");
        apply_config_key(config, key, value, where);
    }

    validate_config(config);
    return config;
}

void validate_config(const ScenarioConfig& c) {
    auto fail_key = [](const std::string& msg) {
        throw std::runtime_error("config: " + msg);
    };

    if (c.map_kind != "two_hill") fail_key("map_kind must be 'two_hill'");
    if (c.map_file.empty()) {
        if (c.width < 8) fail_key("width must be at least 8");
        if (c.height < 8) fail_key("height must be at least 8");
        if (!(c.map_sigma > 0.0)) fail_key("map_sigma must be positive");
        if (c.map_peaks.empty() || c.map_peaks.size() > 4)
            fail_key("map_peaks needs 1 to 4 peaks");
        for (Position p : c.map_peaks)
            if (p.x < 0 || p.x >= c.width || p.y < 0 || p.y >= c.height)
                fail_key("map_peaks entry (" + std::to_string(p.x) + "," +
                         std::to_string(p.y) + ") is off the map");
        if (c.agents < 0) fail_key("agents must be non-negative");
        if (c.cops < 0) fail_key("cops must be non-negative");
        if (static_cast<long>(c.agents) + c.cops > GridDims{c.width, c.height}.cells())
            fail_key("agents + cops exceed the number of cells");
    } else {
        if (c.agents < 0) fail_key("agents must be non-negative");
        if (c.cops < 0) fail_key("cops must be non-negative");
        // Density against a loaded map is checked once the file is read.
    }

    if (c.tax_rate < 0.0 || c.tax_rate > 1.0) fail_key("tax_rate must lie in [0, 1]");
    if (c.wealth_distribution < 0.0 || c.wealth_distribution > 1.0)
        fail_key("wealth_distribution must lie in [0, 1]");
    if (c.wealth_to_create_cop < 0.0 || c.wealth_to_create_cop > 1.0)
        fail_key("wealth_to_create_cop must lie in [0, 1]");
    if (c.wealth_distribution + c.wealth_to_create_cop > 1.0 + 1e-12)
        fail_key("wealth_distribution + wealth_to_create_cop must not exceed 1");
    if (c.cop_upkeep < 0.0) fail_key("cop_upkeep must be non-negative");
    if (!(c.cop_cost > 0.0)) fail_key("cop_cost must be positive");
    if (c.poverty_line < 0.0) fail_key("poverty_line must be non-negative");
    if (c.government_legitimacy < 0.0 || c.government_legitimacy > 1.0)
        fail_key("government_legitimacy must lie in [0, 1]");
    if (c.threshold < 0.0) fail_key("threshold must be non-negative");
    if (c.arrest_k < 0.0) fail_key("arrest_k must be non-negative");
    if (c.max_jail_term < 0) fail_key("max_jail_term must be non-negative");
    if (c.person_vision < 0) fail_key("person_vision must be non-negative");
    if (c.cop_vision < 0) fail_key("cop_vision must be non-negative");
    if (c.metabolism < 0.0) fail_key("metabolism must be non-negative");
    if (c.ticks < 1) fail_key("ticks must be positive");
    if (c.outburst_low < 0) fail_key("outburst_low must be non-negative");
    if (c.outburst_high <= c.outburst_low)
        fail_key("outburst_high must exceed outburst_low");
    if (c.outburst_gap < 1) fail_key("outburst_gap must be positive");
    if (c.collapse_window < 1) fail_key("collapse_window must be positive");
}

std::string render_config(const ScenarioConfig& c) {
    std::ostringstream out;
    out << "width = " << c.width << '\n'
        << "height = " << c.height << '\n'
        << "map_kind = " << c.map_kind << '\n'
        << "map_sigma = " << fixed6(c.map_sigma) << '\n'
        << "map_peaks = " << render_peaks(c.map_peaks) << '\n';
    if (!c.map_file.empty()) out << "map_file = " << c.map_file << '\n';
    out << "agents = " << c.agents << '\n'
        << "cops = " << c.cops << '\n'
        << "movement = " << (c.movement ? "true" : "false") << '\n'
        << "cop_pursuit = " << (c.cop_pursuit ? "true" : "false") << '\n'
        << "tax_rate = " << fixed6(c.tax_rate) << '\n'
        << "wealth_distribution = " << fixed6(c.wealth_distribution) << '\n'
        << "wealth_to_create_cop = " << fixed6(c.wealth_to_create_cop) << '\n'
        << "cop_upkeep = " << fixed6(c.cop_upkeep) << '\n'
        << "cop_cost = " << fixed6(c.cop_cost) << '\n'
        << "poverty_line = " << fixed6(c.poverty_line) << '\n'
        << "government_legitimacy = " << fixed6(c.government_legitimacy) << '\n'
        << "threshold = " << fixed6(c.threshold) << '\n'
        << "arrest_k = " << fixed6(c.arrest_k) << '\n'
        << "max_jail_term = " << c.max_jail_term << '\n'
        << "person_vision = " << c.person_vision << '\n'
        << "cop_vision = " << c.cop_vision << '\n'
        << "metabolism = " << fixed6(c.metabolism) << '\n'
        << "ticks = " << c.ticks << '\n'
        << "seed = " << c.seed << '\n'
        << "outburst_high = " << c.outburst_high << '\n'
        << "outburst_low = " << c.outburst_low << '\n'
        << "outburst_gap = " << c.outburst_gap << '\n'
        << "collapse_window = " << c.collapse_window << '\n';
    return out.str();
}

namespace {

// The small-population family shares its own baseline.
ScenarioConfig small_world() {
    ScenarioConfig c;
    c.agents = 250;
    c.cops = 15;
    c.movement = true;
    c.outburst_high = 7;
    c.outburst_low = 2;
    return c;
}

} // namespace

ScenarioConfig preset(const std::string& name) {
    ScenarioConfig c;
    if (name == "c1") return c;
    if (name == "c2") {
        c.wealth_to_create_cop = 0.5;
        return c;
    }
    if (name == "c3") {
        c.wealth_to_create_cop = 1.0;
        return c;
    }
    if (name == "c4") {
        c.wealth_distribution = 0.5;
        return c;
    }
    if (name == "c5") {
        c.movement = true;
        return c;
    }
    if (name == "c6") {
        c.movement = true;
        c.wealth_distribution = 0.5;
        c.wealth_to_create_cop = 0.2;
        return c;
    }
    if (name == "c7a") return small_world();
    if (name == "c7b") {
        c = small_world();
        c.wealth_distribution = 0.5;
        return c;
    }
    if (name == "c7c") {
        c = small_world();
        c.wealth_to_create_cop = 0.5;
        return c;
    }
    if (name == "c8") {
        c.tax_rate = 0.5;
        return c;
    }
    if (name == "c9") {
        c.movement = true;
        c.person_vision = 3;
        c.cop_vision = 3;
        return c;
    }
    if (name == "c10") {
        c.government_legitimacy = 0.35;
        return c;
    }
    if (name == "c10b") {
        c.government_legitimacy = 0.75;
        return c;
    }
    throw std::runtime_error("unknown preset '" + name + "'");
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{
        "c1", "c2", "c3", "c4", "c5", "c6", "c7a", "c7b", "c7c",
        "c8", "c9", "c10", "c10b"};
    return names;
}

} // namespace rebelscape
