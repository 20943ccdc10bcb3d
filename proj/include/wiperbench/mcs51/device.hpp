#pragma once

#include <cstdint>
#include <optional>

#include "wiperbench/mcs51/cpu.hpp"
#include "wiperbench/sim/kernel.hpp"

namespace wiperbench::mcs51 {

// One machine cycle is 12 crystal periods. The crystal must divide 12e9
// evenly so every cycle maps to a whole number of nanoseconds; anything
// else would accumulate rounding drift over a long run.
struct ClockConfig {
    std::uint64_t crystal_hz = 12'000'000;
    std::int64_t cycle_ns() const;
};

// Couples a Cpu to kernel nets. Output pins drive nets named "Pp.b";
// changes are stamped at the end of the instruction that caused them
// (cycle_count * cycle_ns). Input pins follow their net.
class Device {
public:
    Device(sim::Kernel& kernel, ClockConfig clock);

    Cpu& cpu() { return cpu_; }
    const Cpu& cpu() const { return cpu_; }
    std::int64_t cycle_ns() const { return cycle_ns_; }

    // Creates the net "Pp.b" (reset level = current latch bit) and drives
    // it from the CPU.
    sim::NetId bind_output(int port, int bit);

    // Creates the net "Pp.b" with the given reset level and feeds changes
    // on it into the CPU's pin input. Drive it via aliasing or schedule().
    sim::NetId bind_input(int port, int bit,
                          sim::Logic initial = sim::Logic::High);

    sim::SimTime time() const;

    // One instruction, then any port changes are published to the kernel.
    unsigned step();

    // Standard co-simulation loop: deliver kernel events up to the CPU's
    // current time, run one instruction, repeat until the horizon.
    void run_until(sim::SimTime horizon);

private:
    void flush_ports();

    sim::Kernel& kernel_;
    Cpu cpu_;
    std::int64_t cycle_ns_;
    std::array<std::uint8_t, 4> published_latch_{0xFF, 0xFF, 0xFF, 0xFF};
    std::array<std::array<std::optional<sim::NetId>, 8>, 4> out_nets_{};
};

}  // namespace wiperbench::mcs51
