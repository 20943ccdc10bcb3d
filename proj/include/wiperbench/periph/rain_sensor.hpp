#pragma once

#include "wiperbench/sim/kernel.hpp"

namespace wiperbench::periph {

// The sensor grid plus divider plus LM393-style comparator pair.
// Electrical defaults are round values spanning the divider range.
struct RainSensorParams {
    double r_dry = 1e6;       // grid resistance when dry, ohms
    double r_wet = 1e3;       // fully wetted, ohms
    double r_fixed = 10e3;    // divider pull-down, ohms
    double vcc = 5.0;         // volts
    double pot_light = 2.5;   // detection threshold, volts (DO)
    double pot_heavy = 1.0;   // intensity threshold, volts (HEAVY)
    double hysteresis = 0.0;  // comparator hysteresis band, volts

    void validate() const;  // throws std::invalid_argument
};

// Wetting connects more grid lines in parallel, so resistance interpolates
// as a parallel combination: R(w) = R_dry*R_wet / (w*R_dry + (1-w)*R_wet).
// Strictly decreasing in w. Throws on w outside [0,1].
double sensor_resistance(double w, const RainSensorParams& p);

// Divider output: Vcc * R(w) / (R(w) + R_fixed). High when dry.
double analog_out(double w, const RainSensorParams& p);

// Active-low rain line: Low iff ao < threshold; the tie reads High (dry).
sim::Logic comparator(double ao, double threshold);

// Sensor board bound to kernel nets: listens on WETNESS, drives AO plus
// the two active-low comparator lines DO (pot_light) and HEAVY (pot_heavy).
class RainSensorBoard {
public:
    RainSensorBoard(sim::Kernel& kernel, RainSensorParams params,
                    double initial_wetness);

    sim::NetId wetness_net() const { return wetness_; }
    sim::NetId ao_net() const { return ao_; }
    sim::NetId do_net() const { return do_; }
    sim::NetId heavy_net() const { return heavy_; }

private:
    void on_wetness(sim::SimTime at, double w);
    // With hysteresis h, a High output flips Low when ao < threshold and
    // recovers High only once ao >= threshold + h. h = 0 degenerates to
    // the stateless comparator.
    sim::Logic channel(double ao, double threshold, sim::Logic current) const;

    sim::Kernel& kernel_;
    RainSensorParams params_;
    sim::NetId wetness_, ao_, do_, heavy_;
    sim::Logic do_state_, heavy_state_;
};

}  // namespace wiperbench::periph
