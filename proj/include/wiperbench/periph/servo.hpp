#pragma once

#include <cstdint>

#include "wiperbench/sim/kernel.hpp"

namespace wiperbench::periph {

// Hobby-servo protocol constants: 1 ms pulse = 0 deg, 2 ms = 180 deg,
// refreshed roughly every 20 ms.
inline constexpr std::int64_t kServoMinPulseNs = 1'000'000;
inline constexpr std::int64_t kServoMaxPulseNs = 2'000'000;

struct ServoParams {
    double slew_dps = 600.0;  // max angular rate, degrees/second
};

// Pulse width to commanded angle. Widths are clamped into [1 ms, 2 ms];
// the map is 180 deg * (W - 1 ms) / 1 ms.
double decode_angle(std::int64_t width_ns);

// Angle after dt seconds of motion toward `commanded` at `slew_dps`.
double advance_angle(double current, double commanded, double dt_s,
                     double slew_dps);

// Servo bound to a PWM input net; publishes its sampled position on the
// analog net SERVO_ANGLE (degrees as a float value, one point per pulse).
//
// On each falling edge: the shaft first advances toward the previously
// commanded angle for the elapsed time, the new position is traced, and
// only then does the fresh pulse width take over as the new command. The
// traced angle therefore trails the command by one frame, as a real servo
// that acts on the preceding pulse would.
//
// Widths outside [0.5 ms, 2.5 ms] are electrical noise: ignored and
// counted. A falling edge with no preceding rise (e.g. the idle level at
// wiring time was already high) is not a pulse.
class Servo {
public:
    Servo(sim::Kernel& kernel, ServoParams params, sim::NetId pwm_net);

    sim::NetId angle_net() const { return angle_net_; }
    double current_angle() const { return current_; }
    double commanded_angle() const { return commanded_; }
    std::uint64_t rejected_pulses() const { return rejected_; }

private:
    void on_pwm(sim::SimTime at, sim::Logic level);

    sim::Kernel& kernel_;
    ServoParams params_;
    sim::NetId angle_net_;
    double current_ = 0.0;
    double commanded_ = 0.0;
    std::uint64_t rejected_ = 0;
    bool have_rise_ = false;
    sim::SimTime rise_at_{0};
    sim::SimTime last_motion_at_{0};
};

}  // namespace wiperbench::periph
