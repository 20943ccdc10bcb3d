#include "wiperbench/harness/scenario.hpp"

#include <charconv>
#include <sstream>

#include "wiperbench/harness/trace_io.hpp"

namespace wiperbench::harness {

ScenarioError::ScenarioError(int line_, const std::string& msg)
    : std::runtime_error("scenario line " + std::to_string(line_) + ": " + msg),
      line(line_) {}

namespace {

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

double parse_num(const std::string& tok, int line) {
    double v = 0;
    const char* b = tok.data();
    const char* e = b + tok.size();
    const auto r = std::from_chars(b, e, v);
    if (r.ec != std::errc() || r.ptr != e)
        throw ScenarioError(line, "expected a number, got '" + tok + "'");
    return v;
}

std::int64_t parse_int(const std::string& tok, int line) {
    std::int64_t v = 0;
    const char* b = tok.data();
    const char* e = b + tok.size();
    const auto r = std::from_chars(b, e, v);
    if (r.ec != std::errc() || r.ptr != e)
        throw ScenarioError(line, "expected an integer, got '" + tok + "'");
    return v;
}

void want_args(const std::vector<std::string>& t, std::size_t n, int line) {
    if (t.size() != n)
        throw ScenarioError(line, "'" + t[0] + "' takes " +
                                      std::to_string(n - 1) + " arguments, got " +
                                      std::to_string(t.size() - 1));
}

Assertion parse_assert(const std::vector<std::string>& t, int line) {
    Assertion a;
    const std::string& kind = t[1];
    auto num = [&](std::size_t i) { return parse_num(t[i], line); };
    if (kind == "sweep_period") {
        // assert sweep_period <expected_s> <tol_pct>
        want_args(t, 4, line);
        a.kind = Assertion::Kind::SweepPeriod;
        a.expected = num(2);
        a.tolerance = num(3);
    } else if (kind == "pulse_count") {
        // assert pulse_count <t0_ms> <t1_ms> <expected> <tol_abs>
        want_args(t, 6, line);
        a.kind = Assertion::Kind::PulseCount;
        a.t0_ms = num(2);
        a.t1_ms = num(3);
        a.expected = num(4);
        a.tolerance = num(5);
    } else if (kind == "pulse_period") {
        // assert pulse_period <t0_ms> <t1_ms> <expected_ms> <tol_pct>
        want_args(t, 6, line);
        a.kind = Assertion::Kind::PulsePeriod;
        a.t0_ms = num(2);
        a.t1_ms = num(3);
        a.expected = num(4);
        a.tolerance = num(5);
    } else if (kind == "pulse_width_bounds") {
        // assert pulse_width_bounds <t0_ms> <t1_ms> <min_us> <max_us> <slack_us>
        want_args(t, 7, line);
        a.kind = Assertion::Kind::PulseWidthBounds;
        a.t0_ms = num(2);
        a.t1_ms = num(3);
        a.min_us = num(4);
        a.max_us = num(5);
        a.slack_us = num(6);
    } else if (kind == "park_angle") {
        // assert park_angle <at_ms> <expected_deg> <tol_deg>
        want_args(t, 5, line);
        a.kind = Assertion::Kind::ParkAngle;
        a.at_ms = num(2);
        a.expected = num(3);
        a.tolerance = num(4);
    } else if (kind == "net_level") {
        // assert net_level <net> <at_ms> low|high
        want_args(t, 5, line);
        a.kind = Assertion::Kind::NetLevel;
        a.net = t[2];
        a.at_ms = num(3);
        if (t[4] == "high")
            a.want_high = true;
        else if (t[4] == "low")
            a.want_high = false;
        else
            throw ScenarioError(line, "net_level wants 'low' or 'high', got '" +
                                          t[4] + "'");
    } else if (kind == "first_wide_pulse_by") {
        // assert first_wide_pulse_by <deadline_ms> <min_width_us>
        want_args(t, 4, line);
        a.kind = Assertion::Kind::FirstWidePulseBy;
        a.deadline_ms = num(2);
        a.min_width_us = num(3);
    } else {
        throw ScenarioError(line, "unknown assertion kind '" + kind + "'");
    }
    return a;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
    Scenario s;
    bool saw_name = false, saw_horizon = false, saw_crystal = false;
    bool saw_schedule = false, in_schedule = false;

    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (const auto hash = raw.find('#'); hash != std::string::npos)
            raw.resize(hash);
        const auto toks = split_ws(raw);
        if (toks.empty()) continue;

        if (in_schedule) {
            if (toks[0] == "end") {
                if (toks.size() != 1)
                    throw ScenarioError(line, "'end' takes no arguments");
                in_schedule = false;
                continue;
            }
            if (toks.size() != 2)
                throw ScenarioError(line, "schedule entry wants '<at_ms> <wetness>'");
            ScheduleEntry e;
            e.at_ms = parse_int(toks[0], line);
            e.wetness = parse_num(toks[1], line);
            if (e.wetness < 0.0 || e.wetness > 1.0)
                throw ScenarioError(line, "wetness outside [0, 1]");
            if (s.schedule.empty()) {
                if (e.at_ms != 0)
                    throw ScenarioError(line, "first schedule entry must be at 0 ms");
            } else if (e.at_ms <= s.schedule.back().at_ms) {
                throw ScenarioError(line, "schedule times must be strictly increasing");
            }
            s.schedule.push_back(e);
            continue;
        }

        const std::string& key = toks[0];
        if (key == "name") {
            if (saw_name) throw ScenarioError(line, "duplicate 'name'");
            want_args(toks, 2, line);
            s.name = toks[1];
            saw_name = true;
        } else if (key == "crystal_hz") {
            if (saw_crystal) throw ScenarioError(line, "duplicate 'crystal_hz'");
            want_args(toks, 2, line);
            const std::int64_t hz = parse_int(toks[1], line);
            if (hz <= 0) throw ScenarioError(line, "crystal_hz must be positive");
            s.crystal_hz = static_cast<std::uint64_t>(hz);
            saw_crystal = true;
        } else if (key == "horizon_ms") {
            if (saw_horizon) throw ScenarioError(line, "duplicate 'horizon_ms'");
            want_args(toks, 2, line);
            s.horizon_ms = parse_int(toks[1], line);
            if (s.horizon_ms <= 0)
                throw ScenarioError(line, "horizon_ms must be positive");
            saw_horizon = true;
        } else if (key == "sensor") {
            want_args(toks, 3, line);
            const double v = parse_num(toks[2], line);
            const std::string& p = toks[1];
            if (p == "vcc") s.sensor.vcc = v;
            else if (p == "r_dry") s.sensor.r_dry = v;
            else if (p == "r_wet") s.sensor.r_wet = v;
            else if (p == "r_fixed") s.sensor.r_fixed = v;
            else if (p == "pot_light") s.sensor.pot_light = v;
            else if (p == "pot_heavy") s.sensor.pot_heavy = v;
            else if (p == "hysteresis") s.sensor.hysteresis = v;
            else throw ScenarioError(line, "unknown sensor parameter '" + p + "'");
        } else if (key == "servo") {
            want_args(toks, 3, line);
            if (toks[1] != "slew_dps")
                throw ScenarioError(line, "unknown servo parameter '" + toks[1] + "'");
            s.servo.slew_dps = parse_num(toks[2], line);
            if (s.servo.slew_dps <= 0)
                throw ScenarioError(line, "slew_dps must be positive");
        } else if (key == "schedule") {
            if (saw_schedule) throw ScenarioError(line, "duplicate 'schedule' block");
            if (toks.size() != 1)
                throw ScenarioError(line, "'schedule' takes no arguments");
            saw_schedule = true;
            in_schedule = true;
        } else if (key == "assert") {
            if (toks.size() < 2)
                throw ScenarioError(line, "'assert' wants a kind");
            s.assertions.push_back(parse_assert(toks, line));
        } else {
            throw ScenarioError(line, "unknown key '" + key + "'");
        }
    }

    if (in_schedule) throw ScenarioError(line, "schedule block missing 'end'");
    if (!saw_name) throw ScenarioError(line, "missing 'name'");
    if (!saw_horizon) throw ScenarioError(line, "missing 'horizon_ms'");
    if (!saw_schedule || s.schedule.empty())
        throw ScenarioError(line, "missing or empty 'schedule' block");
    if (s.horizon_ms < s.schedule.back().at_ms)
        throw ScenarioError(line, "horizon_ms precedes the last schedule entry");
    try {
        s.sensor.validate();
    } catch (const std::invalid_argument& e) {
        throw ScenarioError(line, std::string("sensor parameters: ") + e.what());
    }
    return s;
}

std::string serialize_scenario(const Scenario& s) {
    std::string out;
    out += "name " + s.name + "\n";
    out += "crystal_hz " + std::to_string(s.crystal_hz) + "\n";
    out += "horizon_ms " + std::to_string(s.horizon_ms) + "\n";
    out += "sensor vcc " + format_double(s.sensor.vcc) + "\n";
    out += "sensor r_dry " + format_double(s.sensor.r_dry) + "\n";
    out += "sensor r_wet " + format_double(s.sensor.r_wet) + "\n";
    out += "sensor r_fixed " + format_double(s.sensor.r_fixed) + "\n";
    out += "sensor pot_light " + format_double(s.sensor.pot_light) + "\n";
    out += "sensor pot_heavy " + format_double(s.sensor.pot_heavy) + "\n";
    out += "sensor hysteresis " + format_double(s.sensor.hysteresis) + "\n";
    out += "servo slew_dps " + format_double(s.servo.slew_dps) + "\n";
    out += "schedule\n";
    for (const ScheduleEntry& e : s.schedule)
        out += "  " + std::to_string(e.at_ms) + " " + format_double(e.wetness) + "\n";
    out += "end\n";
    for (const Assertion& a : s.assertions) {
        out += "assert ";
        switch (a.kind) {
        case Assertion::Kind::SweepPeriod:
            out += "sweep_period " + format_double(a.expected) + " " +
                   format_double(a.tolerance);
            break;
        case Assertion::Kind::PulseCount:
            out += "pulse_count " + format_double(a.t0_ms) + " " +
                   format_double(a.t1_ms) + " " + format_double(a.expected) + " " +
                   format_double(a.tolerance);
            break;
        case Assertion::Kind::PulsePeriod:
            out += "pulse_period " + format_double(a.t0_ms) + " " +
                   format_double(a.t1_ms) + " " + format_double(a.expected) + " " +
                   format_double(a.tolerance);
            break;
        case Assertion::Kind::PulseWidthBounds:
            out += "pulse_width_bounds " + format_double(a.t0_ms) + " " +
                   format_double(a.t1_ms) + " " + format_double(a.min_us) + " " +
                   format_double(a.max_us) + " " + format_double(a.slack_us);
            break;
        case Assertion::Kind::ParkAngle:
            out += "park_angle " + format_double(a.at_ms) + " " +
                   format_double(a.expected) + " " + format_double(a.tolerance);
            break;
        case Assertion::Kind::NetLevel:
            out += "net_level " + a.net + " " + format_double(a.at_ms) + " " +
                   (a.want_high ? "high" : "low");
            break;
        case Assertion::Kind::FirstWidePulseBy:
            out += "first_wide_pulse_by " + format_double(a.deadline_ms) + " " +
                   format_double(a.min_width_us);
            break;
        }
        out += "\n";
    }
    return out;
}

Scenario load_scenario_file(const std::string& path) {
    return parse_scenario(read_text_file(path));
}

}  // namespace wiperbench::harness
