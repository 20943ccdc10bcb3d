#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wiperbench/periph/rain_sensor.hpp"
#include "wiperbench/periph/servo.hpp"

namespace wiperbench::harness {

struct ScheduleEntry {
    std::int64_t at_ms;
    double wetness;
};

// One pass/fail check evaluated against the run's traces. Pulse checks
// look at SERVO_PWM, angle checks at SERVO_ANGLE.
struct Assertion {
    enum class Kind {
        SweepPeriod,       // expected_s tol_pct
        PulseCount,        // t0_ms t1_ms expected tol_abs
        PulsePeriod,       // t0_ms t1_ms expected_ms tol_pct
        PulseWidthBounds,  // t0_ms t1_ms min_us max_us slack_us
        ParkAngle,         // at_ms expected_deg tol_deg
        NetLevel,          // net at_ms low|high
        FirstWidePulseBy,  // deadline_ms min_width_us
    };
    Kind kind;
    double t0_ms = 0, t1_ms = 0;
    double expected = 0;
    double tolerance = 0;
    double min_us = 0, max_us = 0, slack_us = 0;
    double at_ms = 0, deadline_ms = 0, min_width_us = 0;
    std::string net;
    bool want_high = false;
};

struct Scenario {
    std::string name;
    std::int64_t horizon_ms = 0;
    std::uint64_t crystal_hz = 12'000'000;
    periph::RainSensorParams sensor;
    periph::ServoParams servo;
    std::vector<ScheduleEntry> schedule;
    std::vector<Assertion> assertions;
};

struct ScenarioError : std::runtime_error {
    ScenarioError(int line_, const std::string& msg);
    int line;
};

// Line-oriented text format; see the README for the grammar. Unknown keys
// are errors. Throws ScenarioError with the offending line number.
Scenario parse_scenario(std::string_view text);

// Canonical form; parse(serialize(s)) == s.
std::string serialize_scenario(const Scenario& s);

Scenario load_scenario_file(const std::string& path);

}  // namespace wiperbench::harness
