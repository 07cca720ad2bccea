#include "gedanken/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace gedanken::config {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(trim(cur));
    return parts;
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    throw ConfigError(origin + ":" + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& text, const std::string& origin, int line) {
    const char* begin = text.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        fail(origin, line, "cannot parse number '" + text + "'");
    return v;
}

long parse_long(const std::string& text, const std::string& origin, int line) {
    const char* begin = text.c_str();
    char* end = nullptr;
    long v = std::strtol(begin, &end, 10);
    if (end == begin || *end != '\0')
        fail(origin, line, "cannot parse integer '" + text + "'");
    return v;
}

bool parse_bool(const std::string& text, const std::string& origin, int line) {
    if (text == "true" || text == "yes" || text == "1") return true;
    if (text == "false" || text == "no" || text == "0") return false;
    fail(origin, line, "cannot parse boolean '" + text + "'");
}

Quantity parse_quantity(const std::string& text, Dimension expected,
                        const std::string& origin, int line) {
    try {
        return parse_planck_value(text, expected);
    } catch (const std::exception& e) {
        fail(origin, line, e.what());
    }
}

}  // namespace

sweep::GridSpec parse_config_text(const std::string& text, const std::string& origin) {
    sweep::GridSpec grid;
    Scenario& s = grid.base;
    std::set<std::string> seen;
    std::set<std::string> required_missing = {"field", "d", "D", "T_A", "T_B",
                                              "m_A", "m_B"};
    MirrorConfig mirror;
    bool has_mirror = false;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(origin, line_no, "expected 'key = value', got '" + raw + "'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(origin, line_no, "empty key");
        if (value.empty()) fail(origin, line_no, "empty value for '" + key + "'");

        if (key != "sweep") {
            if (!seen.insert(key).second)
                fail(origin, line_no, "duplicate key '" + key + "'");
            required_missing.erase(key);
        }

        if (key == "field") {
            if (value == "em" || value == "electromagnetic")
                s.field = FieldKind::Electromagnetic;
            else if (value == "gr" || value == "gravitational")
                s.field = FieldKind::Gravitational;
            else
                fail(origin, line_no, "field must be em or gr, got '" + value + "'");
        } else if (key == "q_A") {
            s.q_A = parse_quantity(value, dim::charge, origin, line_no);
        } else if (key == "q_B") {
            s.q_B = parse_quantity(value, dim::charge, origin, line_no);
        } else if (key == "m_A") {
            s.m_A = parse_quantity(value, dim::mass, origin, line_no);
        } else if (key == "m_B") {
            s.m_B = parse_quantity(value, dim::mass, origin, line_no);
        } else if (key == "d") {
            s.d = parse_quantity(value, dim::length, origin, line_no);
        } else if (key == "D") {
            s.D = parse_quantity(value, dim::length, origin, line_no);
        } else if (key == "T_A") {
            s.T_A = parse_quantity(value, dim::time_like, origin, line_no);
        } else if (key == "T_B") {
            s.T_B = parse_quantity(value, dim::time_like, origin, line_no);
        } else if (key == "bob_opens") {
            s.bob_opens = parse_bool(value, origin, line_no);
        } else if (key == "multipole_order") {
            s.multipole_order = static_cast<int>(parse_long(value, origin, line_no));
        } else if (key == "d_over_D_max") {
            s.d_over_D_max = parse_double(value, origin, line_no);
        } else if (key == "mirror_timing") {
            has_mirror = true;
            if (value == "always_present")
                mirror.timing = MirrorTiming::AlwaysPresent;
            else if (value == "erected_during")
                mirror.timing = MirrorTiming::ErectedDuring;
            else
                fail(origin, line_no,
                     "mirror_timing must be always_present or erected_during");
        } else if (key == "mirror_radius") {
            has_mirror = true;
            mirror.radius = parse_quantity(value, dim::length, origin, line_no);
        } else if (key == "mirror_erection_time") {
            has_mirror = true;
            mirror.erection_time =
                parse_quantity(value, dim::time_like, origin, line_no);
        } else if (key == "slack_min") {
            grid.slack.c_min = parse_double(value, origin, line_no);
        } else if (key == "slack_max") {
            grid.slack.c_max = parse_double(value, origin, line_no);
        } else if (key == "bob_sigma") {
            grid.bob_sigma = parse_quantity(value, dim::length, origin, line_no);
        } else if (key == "sweep") {
            auto parts = split(value, ',');
            if (parts.size() != 5)
                fail(origin, line_no,
                     "sweep needs 'name, lo, hi, points, log|lin', got '" +
                         value + "'");
            sweep::Axis axis;
            axis.name = parts[0];
            axis.lo = parse_double(parts[1], origin, line_no);
            axis.hi = parse_double(parts[2], origin, line_no);
            long points = parse_long(parts[3], origin, line_no);
            if (points < 2 || points > 100000)
                fail(origin, line_no, "sweep points must be in [2, 100000]");
            axis.points = static_cast<int>(points);
            if (parts[4] == "log") axis.log_spaced = true;
            else if (parts[4] == "lin") axis.log_spaced = false;
            else fail(origin, line_no, "sweep spacing must be log or lin");
            grid.axes.push_back(axis);
        } else {
            fail(origin, line_no, "unknown key '" + key + "'");
        }
    }

    if (!required_missing.empty()) {
        std::string missing;
        for (const auto& k : required_missing) {
            if (!missing.empty()) missing += ", ";
            missing += k;
        }
        throw ConfigError(origin + ": missing required keys: " + missing);
    }
    if (has_mirror) {
        if (!seen.count("mirror_radius"))
            throw ConfigError(origin + ": mirror settings need mirror_radius");
        if (!seen.count("mirror_timing"))
            throw ConfigError(origin + ": mirror settings need mirror_timing");
        s.mirror = mirror;
    }

    try {
        grid.check();
    } catch (const sweep::GridError& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    return grid;
}

sweep::GridSpec parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

}  // namespace gedanken::config
