#include "wiperbench/mcs51/device.hpp"

#include <cstdio>
#include <stdexcept>

namespace wiperbench::mcs51 {

std::int64_t ClockConfig::cycle_ns() const {
    constexpr std::uint64_t kPsPerCycleScale = 12'000'000'000ull;
    if (crystal_hz == 0 || kPsPerCycleScale % crystal_hz != 0)
        throw std::invalid_argument(
            "crystal_hz must divide 12e9 for whole-ns machine cycles");
    return static_cast<std::int64_t>(kPsPerCycleScale / crystal_hz);
}

namespace {
std::string pin_net_name(int port, int bit) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "P%d.%d", port, bit);
    return buf;
}
}  // namespace

Device::Device(sim::Kernel& kernel, ClockConfig clock)
    : kernel_(kernel), cycle_ns_(clock.cycle_ns()) {}

sim::NetId Device::bind_output(int port, int bit) {
    const bool high = cpu_.port_latch(port) & (1u << bit);
    const sim::NetId id = kernel_.add_digital(
        pin_net_name(port, bit), high ? sim::Logic::High : sim::Logic::Low);
    out_nets_[static_cast<std::size_t>(port)][static_cast<std::size_t>(bit)] = id;
    return id;
}

sim::NetId Device::bind_input(int port, int bit, sim::Logic initial) {
    const sim::NetId id = kernel_.add_digital(pin_net_name(port, bit), initial);
    cpu_.set_input_pin(port, bit, initial == sim::Logic::High);
    kernel_.on_change(id, [this, port, bit](sim::SimTime, sim::Level level) {
        cpu_.set_input_pin(port, bit, std::get<sim::Logic>(level) == sim::Logic::High);
    });
    return id;
}

sim::SimTime Device::time() const {
    return {static_cast<std::int64_t>(cpu_.cycle_count) * cycle_ns_};
}

unsigned Device::step() {
    const unsigned cycles = cpu_.step();
    flush_ports();
    return cycles;
}

void Device::flush_ports() {
    const sim::SimTime now = time();
    for (int port = 0; port < 4; ++port) {
        const std::uint8_t latch = cpu_.port_latch(port);
        const std::uint8_t diff =
            latch ^ published_latch_[static_cast<std::size_t>(port)];
        if (!diff) continue;
        published_latch_[static_cast<std::size_t>(port)] = latch;
        for (int bit = 0; bit < 8; ++bit) {
            if (!(diff & (1u << bit))) continue;
            const auto& net =
                out_nets_[static_cast<std::size_t>(port)][static_cast<std::size_t>(bit)];
            if (!net) continue;
            kernel_.schedule({now, *net,
                              (latch & (1u << bit)) ? sim::Logic::High
                                                    : sim::Logic::Low});
        }
    }
}

void Device::run_until(sim::SimTime horizon) {
    while (time() < horizon) {
        kernel_.run_until(time());  // deliver inputs before the instruction
        step();
    }
    kernel_.run_until(horizon);
}

}  // namespace wiperbench::mcs51
