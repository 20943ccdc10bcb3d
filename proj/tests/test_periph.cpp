#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "wiperbench/periph/rain_sensor.hpp"
#include "wiperbench/periph/servo.hpp"
#include "wiperbench/sim/kernel.hpp"

using namespace wiperbench;
using periph::RainSensorParams;
using sim::Logic;

namespace {

double angle_at(const sim::Kernel& k, sim::NetId net, std::int64_t ms) {
    return std::get<double>(k.trace(net).level_at(sim::from_ms(ms)));
}

Logic logic_at(const sim::Kernel& k, sim::NetId net, std::int64_t ms) {
    return std::get<Logic>(k.trace(net).level_at(sim::from_ms(ms)));
}

}  // namespace

TEST_CASE("sensor resistance hits both endpoints exactly") {
    RainSensorParams p;
    CHECK(periph::sensor_resistance(0.0, p) == doctest::Approx(1e6).epsilon(1e-12));
    CHECK(periph::sensor_resistance(1.0, p) == doctest::Approx(1e3).epsilon(1e-12));
    CHECK_THROWS_AS(periph::sensor_resistance(-0.01, p), std::invalid_argument);
    CHECK_THROWS_AS(periph::sensor_resistance(1.01, p), std::invalid_argument);
}

TEST_CASE("resistance and divider voltage strictly decrease with wetness") {
    RainSensorParams p;
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        double a = uni(rng), b = uni(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(periph::sensor_resistance(a, p) > periph::sensor_resistance(b, p));
        CHECK(periph::analog_out(a, p) > periph::analog_out(b, p));
    }
}

TEST_CASE("divider voltage reference points") {
    RainSensorParams p;
    CHECK(periph::analog_out(0.0, p) == doctest::Approx(4.950495).epsilon(5e-4));
    CHECK(periph::analog_out(1.0, p) == doctest::Approx(0.454545).epsilon(5e-4));
    // The wetness where the divider crosses the 2.5 V detection threshold.
    const double w_mid = 0.099099099099;
    CHECK(periph::analog_out(w_mid, p) == doctest::Approx(2.5).epsilon(5e-4));
}

TEST_CASE("comparator is active low and ties read dry") {
    CHECK(periph::comparator(2.49, 2.5) == Logic::Low);
    CHECK(periph::comparator(2.5, 2.5) == Logic::High);
    CHECK(periph::comparator(2.51, 2.5) == Logic::High);
}

TEST_CASE("parameter validation") {
    RainSensorParams p;
    p.r_dry = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = RainSensorParams{};
    p.r_wet = 2e6;  // must be below r_dry
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = RainSensorParams{};
    p.vcc = -5.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = RainSensorParams{};
    p.pot_light = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = RainSensorParams{};
    p.hysteresis = -0.1;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    CHECK_NOTHROW(RainSensorParams{}.validate());
}

TEST_CASE("board drives DO and HEAVY from wetness events") {
    sim::Kernel k;
    periph::RainSensorBoard board(k, RainSensorParams{}, 0.0);
    // Dry: both comparator lines idle high.
    k.run_until(sim::from_ms(1));
    k.schedule({sim::from_ms(10), board.wetness_net(), 0.3});
    k.schedule({sim::from_ms(20), board.wetness_net(), 0.9});
    k.schedule({sim::from_ms(30), board.wetness_net(), 0.0});
    k.run_until(sim::from_ms(40));

    CHECK(logic_at(k, board.do_net(), 5) == Logic::High);
    CHECK(logic_at(k, board.heavy_net(), 5) == Logic::High);
    // Light rain: detection trips, intensity does not.
    CHECK(logic_at(k, board.do_net(), 15) == Logic::Low);
    CHECK(logic_at(k, board.heavy_net(), 15) == Logic::High);
    // Heavy rain: both low.
    CHECK(logic_at(k, board.do_net(), 25) == Logic::Low);
    CHECK(logic_at(k, board.heavy_net(), 25) == Logic::Low);
    // Dry again.
    CHECK(logic_at(k, board.do_net(), 35) == Logic::High);
    CHECK(logic_at(k, board.heavy_net(), 35) == Logic::High);

    // The analog line follows the divider.
    CHECK(std::get<double>(k.trace(board.ao_net()).level_at(sim::from_ms(5))) ==
          doctest::Approx(4.950495).epsilon(1e-4));
}

TEST_CASE("hysteresis holds a tripped channel until the band clears") {
    RainSensorParams p;
    p.hysteresis = 0.3;          // recover at >= 2.8 V
    const double w_mid = 0.099099099099;  // ao = 2.5 V, exactly at threshold
    sim::Kernel k;
    periph::RainSensorBoard board(k, p, w_mid);
    k.schedule({sim::from_ms(10), board.wetness_net(), 1.0});    // ao 0.45, trip
    k.schedule({sim::from_ms(20), board.wetness_net(), w_mid});  // ao 2.5 < 2.8
    k.schedule({sim::from_ms(30), board.wetness_net(), 0.0});    // ao 4.95 >= 2.8
    k.run_until(sim::from_ms(40));

    CHECK(logic_at(k, board.do_net(), 5) == Logic::High);   // tie reads dry
    CHECK(logic_at(k, board.do_net(), 15) == Logic::Low);
    CHECK(logic_at(k, board.do_net(), 25) == Logic::Low);   // held by the band
    CHECK(logic_at(k, board.do_net(), 35) == Logic::High);  // cleared
}

TEST_CASE("pulse width decodes to a clamped linear angle") {
    CHECK(periph::decode_angle(1'000'000) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(periph::decode_angle(1'500'000) == doctest::Approx(90.0).epsilon(1e-12));
    CHECK(periph::decode_angle(2'000'000) == doctest::Approx(180.0).epsilon(1e-12));
    CHECK(periph::decode_angle(800'000) == 0.0);    // clamps low
    CHECK(periph::decode_angle(2'300'000) == 180.0);  // clamps high

    for (int i = 0; i < 200; ++i) {
        const std::int64_t w = 1'000'000 + i * 5'000;
        const double want = 180.0 * double(i * 5'000) / 1e6;
        CHECK(std::abs(periph::decode_angle(w) - want) < 1e-9);
    }
}

TEST_CASE("slew limiting advances at the configured rate and snaps at the end") {
    CHECK(periph::advance_angle(0.0, 90.0, 0.05, 600.0) == doctest::Approx(30.0));
    CHECK(periph::advance_angle(90.0, 0.0, 0.05, 600.0) == doctest::Approx(60.0));
    CHECK(periph::advance_angle(89.0, 90.0, 0.1, 600.0) == doctest::Approx(90.0));
    CHECK(periph::advance_angle(42.0, 42.0, 1.0, 600.0) == doctest::Approx(42.0));
    CHECK(periph::advance_angle(0.0, 180.0, 10.0, 600.0) == doctest::Approx(180.0));
}

namespace {

// Schedules one high pulse on a digital net.
void pulse(sim::Kernel& k, sim::NetId net, std::int64_t at_ns, std::int64_t width_ns) {
    k.schedule({sim::SimTime{at_ns}, net, Logic::High});
    k.schedule({sim::SimTime{at_ns + width_ns}, net, Logic::Low});
}

}  // namespace

TEST_CASE("servo position trails the command by one frame") {
    sim::Kernel k;
    const sim::NetId pwm = k.add_digital("PWM", Logic::Low);
    periph::Servo servo(k, periph::ServoParams{}, pwm);

    // Three 1.5 ms pulses, 20 ms apart.
    for (int i = 0; i < 3; ++i)
        pulse(k, pwm, i * 20'000'000, 1'500'000);
    k.run_until(sim::from_ms(60));

    // First fall: no prior command, shaft still parked.
    CHECK(angle_at(k, servo.angle_net(), 2) == doctest::Approx(0.0));
    // Second fall at 21.5 ms: 20 ms of travel toward 90 at 600 deg/s.
    CHECK(angle_at(k, servo.angle_net(), 22) == doctest::Approx(12.0));
    // Third fall: another 12 degrees.
    CHECK(angle_at(k, servo.angle_net(), 42) == doctest::Approx(24.0));
    CHECK(servo.commanded_angle() == doctest::Approx(90.0));
    CHECK(servo.rejected_pulses() == 0);
}

TEST_CASE("out-of-band pulse widths are rejected and counted") {
    sim::Kernel k;
    const sim::NetId pwm = k.add_digital("PWM", Logic::Low);
    periph::Servo servo(k, periph::ServoParams{}, pwm);

    pulse(k, pwm, 1'000'000, 300'000);     // 0.3 ms: noise
    pulse(k, pwm, 21'000'000, 2'600'000);  // 2.6 ms: noise
    pulse(k, pwm, 41'000'000, 500'000);    // 0.5 ms: legal, clamps to 0 deg
    k.run_until(sim::from_ms(60));

    CHECK(servo.rejected_pulses() == 2);
    CHECK(servo.commanded_angle() == doctest::Approx(0.0));
    // Noise never traced a bogus angle.
    for (const auto& pt : k.trace(servo.angle_net()).points)
        CHECK(std::get<double>(pt.value) == doctest::Approx(0.0));
}

TEST_CASE("a fall with no preceding rise is not a pulse") {
    sim::Kernel k;
    const sim::NetId pwm = k.add_digital("PWM", Logic::High);
    periph::Servo servo(k, periph::ServoParams{}, pwm);
    k.schedule({sim::from_ms(5), pwm, Logic::Low});
    k.run_until(sim::from_ms(10));
    CHECK(servo.rejected_pulses() == 0);
    CHECK(servo.commanded_angle() == doctest::Approx(0.0));
    CHECK(k.trace(servo.angle_net()).points.size() == 1);  // just the reset point
}

TEST_CASE("servo holds position while pulses stop") {
    sim::Kernel k;
    const sim::NetId pwm = k.add_digital("PWM", Logic::Low);
    periph::Servo servo(k, periph::ServoParams{}, pwm);
    pulse(k, pwm, 0, 2'000'000);           // command 180
    pulse(k, pwm, 20'000'000, 2'000'000);  // travel starts showing
    k.run_until(sim::from_ms(500));        // then silence

    CHECK(angle_at(k, servo.angle_net(), 400) == doctest::Approx(12.0));
    CHECK(servo.commanded_angle() == doctest::Approx(180.0));
}
