#pragma once

#include <compare>
#include <cstdint>

namespace wiperbench::sim {

// Integer nanoseconds since simulation reset; tick 0 is the reset instant.
// All timing in the rig (machine cycles, pulse widths, sweep periods) is
// expressed in this unit so multi-second runs accumulate without drift.
struct SimTime {
    std::int64_t ns = 0;

    friend constexpr auto operator<=>(SimTime, SimTime) = default;

    constexpr SimTime operator+(SimTime o) const { return {ns + o.ns}; }
    constexpr SimTime operator-(SimTime o) const { return {ns - o.ns}; }
    constexpr SimTime& operator+=(SimTime o) { ns += o.ns; return *this; }

    constexpr double seconds() const { return static_cast<double>(ns) * 1e-9; }
};

constexpr SimTime from_ns(std::int64_t v) { return {v}; }
constexpr SimTime from_us(std::int64_t v) { return {v * 1'000}; }
constexpr SimTime from_ms(std::int64_t v) { return {v * 1'000'000}; }
constexpr SimTime from_sec(std::int64_t v) { return {v * 1'000'000'000}; }

}  // namespace wiperbench::sim
