#include "wiperbench/harness/runner.hpp"

#include <cmath>
#include <variant>

#include "wiperbench/harness/measure.hpp"
#include "wiperbench/harness/trace_io.hpp"
#include "wiperbench/mcs51/device.hpp"
#include "wiperbench/periph/rain_sensor.hpp"
#include "wiperbench/periph/servo.hpp"

namespace wiperbench::harness {

namespace {

// Angle the sweep-period detector triggers on. Near the top of the 0..180
// swing so each full cycle crosses it rising exactly once, yet low enough
// that the sampled (one point per frame) angle trace cannot step over it.
constexpr double kSweepThreshold = 170.0;

std::string fmt_ms(double ms) { return format_double(ms) + " ms"; }

AssertionOutcome eval(const Assertion& a, const sim::Kernel& k,
                      sim::SimTime horizon) {
    AssertionOutcome out;
    const auto window_pulses = [&](double t0_ms, double t1_ms) {
        const sim::Trace& tr = k.trace(k.id("SERVO_PWM"));
        return sim::measure_pulses(tr, {static_cast<std::int64_t>(t0_ms * 1e6)},
                                   {static_cast<std::int64_t>(t1_ms * 1e6)});
    };
    switch (a.kind) {
    case Assertion::Kind::SweepPeriod: {
        const sim::Trace& angle = k.trace(k.id("SERVO_ANGLE"));
        const auto crossings =
            rising_crossings(angle, kSweepThreshold, {0}, horizon);
        const auto period = mean_period_s(crossings);
        if (!period) {
            out.text = "sweep_period: fewer than 4 sweep crossings, cannot measure";
            return out;
        }
        const double err = std::abs(*period - a.expected);
        out.passed = err <= a.expected * a.tolerance / 100.0;
        out.text = "sweep_period: measured " + format_double(*period) +
                   " s, want " + format_double(a.expected) + " s within " +
                   format_double(a.tolerance) + "%";
        return out;
    }
    case Assertion::Kind::PulseCount: {
        const auto pulses = window_pulses(a.t0_ms, a.t1_ms);
        const double n = static_cast<double>(pulses.size());
        out.passed = std::abs(n - a.expected) <= a.tolerance;
        out.text = "pulse_count in [" + fmt_ms(a.t0_ms) + ", " + fmt_ms(a.t1_ms) +
                   "]: measured " + format_double(n) + ", want " +
                   format_double(a.expected) + " +/- " + format_double(a.tolerance);
        return out;
    }
    case Assertion::Kind::PulsePeriod: {
        const auto pulses = window_pulses(a.t0_ms, a.t1_ms);
        if (pulses.size() < 2) {
            out.text = "pulse_period in [" + fmt_ms(a.t0_ms) + ", " +
                       fmt_ms(a.t1_ms) + "]: fewer than 2 pulses, cannot measure";
            return out;
        }
        const double span_ms = static_cast<double>(pulses.back().rise.ns -
                                                   pulses.front().rise.ns) /
                               1e6;
        const double period = span_ms / static_cast<double>(pulses.size() - 1);
        out.passed =
            std::abs(period - a.expected) <= a.expected * a.tolerance / 100.0;
        out.text = "pulse_period in [" + fmt_ms(a.t0_ms) + ", " + fmt_ms(a.t1_ms) +
                   "]: measured " + fmt_ms(period) + ", want " +
                   fmt_ms(a.expected) + " within " + format_double(a.tolerance) +
                   "%";
        return out;
    }
    case Assertion::Kind::PulseWidthBounds: {
        const auto pulses = window_pulses(a.t0_ms, a.t1_ms);
        if (pulses.empty()) {
            out.text = "pulse_width_bounds in [" + fmt_ms(a.t0_ms) + ", " +
                       fmt_ms(a.t1_ms) + "]: no pulses in window";
            return out;
        }
        const double lo = a.min_us - a.slack_us;
        const double hi = a.max_us + a.slack_us;
        double worst = 0.0;
        bool ok = true;
        for (const sim::Pulse& p : pulses) {
            const double w_us = static_cast<double>(p.width.ns) / 1e3;
            if (w_us < lo || w_us > hi) {
                ok = false;
                worst = w_us;
            }
        }
        out.passed = ok;
        out.text = "pulse_width_bounds in [" + fmt_ms(a.t0_ms) + ", " +
                   fmt_ms(a.t1_ms) + "]: " + std::to_string(pulses.size()) +
                   " pulses, want [" + format_double(lo) + " us, " +
                   format_double(hi) + " us]";
        if (!ok) out.text += ", offender " + format_double(worst) + " us";
        return out;
    }
    case Assertion::Kind::ParkAngle: {
        const sim::Trace& angle = k.trace(k.id("SERVO_ANGLE"));
        const double v = std::get<double>(
            angle.level_at({static_cast<std::int64_t>(a.at_ms * 1e6)}));
        out.passed = std::abs(v - a.expected) <= a.tolerance;
        out.text = "park_angle at " + fmt_ms(a.at_ms) + ": measured " +
                   format_double(v) + " deg, want " + format_double(a.expected) +
                   " +/- " + format_double(a.tolerance) + " deg";
        return out;
    }
    case Assertion::Kind::NetLevel: {
        const sim::Trace& tr = k.trace(k.id(a.net));
        const auto lv = std::get<sim::Logic>(
            tr.level_at({static_cast<std::int64_t>(a.at_ms * 1e6)}));
        const bool is_high = lv == sim::Logic::High;
        out.passed = is_high == a.want_high;
        out.text = "net_level " + a.net + " at " + fmt_ms(a.at_ms) +
                   ": measured " + (is_high ? "high" : "low") + ", want " +
                   (a.want_high ? "high" : "low");
        return out;
    }
    case Assertion::Kind::FirstWidePulseBy: {
        const sim::Trace& tr = k.trace(k.id("SERVO_PWM"));
        const auto pulses = sim::measure_pulses(tr, {0}, horizon);
        const std::int64_t min_ns =
            static_cast<std::int64_t>(a.min_width_us * 1e3);
        const std::int64_t deadline_ns =
            static_cast<std::int64_t>(a.deadline_ms * 1e6);
        for (const sim::Pulse& p : pulses) {
            if (p.width.ns >= min_ns) {
                out.passed = p.rise.ns <= deadline_ns;
                out.text = "first_wide_pulse_by: first pulse >= " +
                           format_double(a.min_width_us) + " us rises at " +
                           format_double(static_cast<double>(p.rise.ns) / 1e6) +
                           " ms, deadline " + fmt_ms(a.deadline_ms);
                return out;
            }
        }
        out.text = "first_wide_pulse_by: no pulse >= " +
                   format_double(a.min_width_us) + " us before the horizon";
        return out;
    }
    }
    out.text = "unknown assertion kind";
    return out;
}

}  // namespace

RunReport run_scenario(const Scenario& s, const asm51::ObjectImage& firmware,
                       sim::Kernel& kernel) {
    RunReport report;
    report.scenario_name = s.name;

    mcs51::Device device(kernel, mcs51::ClockConfig{s.crystal_hz});
    device.cpu().load_image(firmware);

    periph::RainSensorBoard board(kernel, s.sensor, s.schedule.front().wetness);

    const auto initial = [&](sim::NetId n) {
        return std::get<sim::Logic>(kernel.level(n));
    };
    const sim::NetId p10 = device.bind_input(1, 0, initial(board.do_net()));
    const sim::NetId p11 = device.bind_input(1, 1, initial(board.heavy_net()));
    kernel.alias(board.do_net(), p10);
    kernel.alias(board.heavy_net(), p11);

    const sim::NetId p20 = device.bind_output(2, 0);
    const sim::NetId pwm = kernel.add_digital(
        "SERVO_PWM", std::get<sim::Logic>(kernel.level(p20)));
    kernel.alias(p20, pwm);

    periph::Servo servo(kernel, s.servo, pwm);

    for (std::size_t i = 1; i < s.schedule.size(); ++i)
        kernel.schedule({sim::from_ms(s.schedule[i].at_ms), board.wetness_net(),
                         s.schedule[i].wetness});

    const sim::SimTime horizon = sim::from_ms(s.horizon_ms);
    try {
        device.run_until(horizon);
    } catch (const mcs51::CpuFault& e) {
        report.halted = true;
        report.halt_reason = e.what();
    }

    report.passed = !report.halted;
    for (const Assertion& a : s.assertions) {
        report.outcomes.push_back(eval(a, kernel, horizon));
        if (!report.outcomes.back().passed) report.passed = false;
    }
    return report;
}

std::string format_report(const RunReport& r) {
    std::string out = "scenario " + r.scenario_name + "\n";
    if (r.halted) out += "[FAIL] cpu halted: " + r.halt_reason + "\n";
    for (const AssertionOutcome& o : r.outcomes)
        out += (o.passed ? "[PASS] " : "[FAIL] ") + o.text + "\n";
    out += r.passed ? "result PASS\n" : "result FAIL\n";
    return out;
}

}  // namespace wiperbench::harness
