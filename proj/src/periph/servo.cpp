#include "wiperbench/periph/servo.hpp"

#include <algorithm>
#include <cmath>

namespace wiperbench::periph {

double decode_angle(std::int64_t width_ns) {
    const std::int64_t w =
        std::clamp(width_ns, kServoMinPulseNs, kServoMaxPulseNs);
    return 180.0 * double(w - kServoMinPulseNs) /
           double(kServoMaxPulseNs - kServoMinPulseNs);
}

double advance_angle(double current, double commanded, double dt_s,
                     double slew_dps) {
    const double step = slew_dps * dt_s;
    if (std::abs(commanded - current) <= step) return commanded;
    return current + (commanded > current ? step : -step);
}

Servo::Servo(sim::Kernel& kernel, ServoParams params, sim::NetId pwm_net)
    : kernel_(kernel), params_(params) {
    angle_net_ = kernel_.add_analog("SERVO_ANGLE", 0.0);
    kernel_.on_change(pwm_net, [this](sim::SimTime at, sim::Level level) {
        on_pwm(at, std::get<sim::Logic>(level));
    });
}

void Servo::on_pwm(sim::SimTime at, sim::Logic level) {
    if (level == sim::Logic::High) {
        have_rise_ = true;
        rise_at_ = at;
        return;
    }
    if (!have_rise_) return;
    have_rise_ = false;
    const std::int64_t width_ns = (at - rise_at_).ns;

    // move the shaft for the elapsed frame before adopting the new command
    const double dt_s = double((at - last_motion_at_).ns) * 1e-9;
    current_ = advance_angle(current_, commanded_, dt_s, params_.slew_dps);
    last_motion_at_ = at;
    kernel_.schedule({at, angle_net_, current_});

    if (width_ns < 500'000 || width_ns > 2'500'000) {
        ++rejected_;  // noise, not a servo pulse
        return;
    }
    commanded_ = decode_angle(width_ns);
}

}  // namespace wiperbench::periph
