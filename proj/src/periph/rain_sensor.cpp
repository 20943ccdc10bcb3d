#include "wiperbench/periph/rain_sensor.hpp"

#include <stdexcept>

namespace wiperbench::periph {

void RainSensorParams::validate() const {
    if (!(r_wet > 0) || !(r_dry > r_wet))
        throw std::invalid_argument("need 0 < R_wet < R_dry");
    if (!(r_fixed > 0)) throw std::invalid_argument("R_fixed must be positive");
    if (!(vcc > 0)) throw std::invalid_argument("Vcc must be positive");
    if (!(0 < pot_heavy && pot_heavy < pot_light && pot_light < vcc))
        throw std::invalid_argument("need 0 < pot_heavy < pot_light < Vcc");
    if (hysteresis < 0) throw std::invalid_argument("hysteresis must be >= 0");
}

double sensor_resistance(double w, const RainSensorParams& p) {
    if (!(w >= 0.0 && w <= 1.0))
        throw std::invalid_argument("wetness outside [0,1]");
    return p.r_dry * p.r_wet / (w * p.r_dry + (1.0 - w) * p.r_wet);
}

double analog_out(double w, const RainSensorParams& p) {
    const double r = sensor_resistance(w, p);
    return p.vcc * r / (r + p.r_fixed);
}

sim::Logic comparator(double ao, double threshold) {
    return ao < threshold ? sim::Logic::Low : sim::Logic::High;
}

RainSensorBoard::RainSensorBoard(sim::Kernel& kernel, RainSensorParams params,
                                 double initial_wetness)
    : kernel_(kernel), params_(params) {
    params_.validate();
    const double ao = analog_out(initial_wetness, params_);
    do_state_ = comparator(ao, params_.pot_light);
    heavy_state_ = comparator(ao, params_.pot_heavy);
    wetness_ = kernel_.add_analog("WETNESS", initial_wetness);
    ao_ = kernel_.add_analog("AO", ao);
    do_ = kernel_.add_digital("DO", do_state_);
    heavy_ = kernel_.add_digital("HEAVY", heavy_state_);
    kernel_.on_change(wetness_, [this](sim::SimTime at, sim::Level level) {
        on_wetness(at, std::get<double>(level));
    });
}

sim::Logic RainSensorBoard::channel(double ao, double threshold,
                                    sim::Logic current) const {
    if (current == sim::Logic::High)
        return comparator(ao, threshold);
    return ao >= threshold + params_.hysteresis ? sim::Logic::High
                                                : sim::Logic::Low;
}

void RainSensorBoard::on_wetness(sim::SimTime at, double w) {
    const double ao = analog_out(w, params_);
    kernel_.schedule({at, ao_, ao});
    do_state_ = channel(ao, params_.pot_light, do_state_);
    heavy_state_ = channel(ao, params_.pot_heavy, heavy_state_);
    kernel_.schedule({at, do_, do_state_});
    kernel_.schedule({at, heavy_, heavy_state_});
}

}  // namespace wiperbench::periph
