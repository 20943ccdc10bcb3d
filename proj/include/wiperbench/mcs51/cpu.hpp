#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "wiperbench/asm51/image.hpp"

namespace wiperbench::mcs51 {

// Anything outside the supported envelope stops the machine with one of
// these instead of guessing: unassigned opcodes, MOVX, the serial port,
// undefined SFR addresses, indirect access past IRAM, stack overflow,
// execution past the 4 KB ROM, and timer features we do not model.
struct CpuFault : std::runtime_error {
    CpuFault(const std::string& msg, std::uint16_t pc, std::uint64_t cycle);
    std::uint16_t pc;
    std::uint64_t cycle;
};

struct LoadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Direct addresses of the SFRs this model implements.
namespace sfr {
inline constexpr std::uint8_t P0 = 0x80, SP = 0x81, DPL = 0x82, DPH = 0x83,
    PCON = 0x87, TCON = 0x88, TMOD = 0x89, TL0 = 0x8A, TL1 = 0x8B,
    TH0 = 0x8C, TH1 = 0x8D, P1 = 0x90, SCON = 0x98, SBUF = 0x99, P2 = 0xA0,
    IE = 0xA8, P3 = 0xB0, IP = 0xB8, PSW = 0xD0, ACC = 0xE0, B = 0xF0;
}

// Cycle-accurate AT89C51 core: 4 KB code ROM, 128 B IRAM, two timers in
// modes 0/1/2, the five-source single-priority interrupt scheme, and
// quasi-bidirectional ports P0..P3.
//
// Ordering inside step(): pending interrupts are taken first (3 cycles);
// otherwise the instruction is decoded, the timers advance by its cycle
// cost with the pre-execution TCON/TMOD, and then it executes. A timer
// therefore starts counting with the instruction after the one that sets
// TRx, as on silicon.
class Cpu {
public:
    static constexpr std::size_t kRomSize = 4096;

    Cpu();

    void load_image(const asm51::ObjectImage& image);
    void reset();

    // Runs one instruction or one interrupt dispatch; returns machine
    // cycles consumed. Throws CpuFault when the program leaves the
    // supported envelope.
    unsigned step();

    std::uint16_t pc = 0;
    std::uint64_t cycle_count = 0;
    std::array<std::uint8_t, 128> iram{};
    std::array<std::uint8_t, kRomSize> rom{};

    // External pin interface. A port pin reads low when either the latch
    // bit or the externally driven level is low.
    void set_input_pin(int port, int bit, bool high);
    bool read_pin(int port, int bit) const;
    std::uint8_t port_latch(int port) const;
    std::uint8_t port_pins(int port) const;

    // Raw SFR storage access for tests and the device binding; faults on
    // addresses no register occupies. Reads bypass the pin merge.
    std::uint8_t get_sfr(std::uint8_t addr) const;
    void set_sfr(std::uint8_t addr, std::uint8_t v);

    std::uint8_t acc() const { return sfr_[sfr::ACC - 0x80]; }
    std::uint8_t b_reg() const { return sfr_[sfr::B - 0x80]; }
    std::uint8_t psw() const { return sfr_[sfr::PSW - 0x80]; }
    std::uint8_t sp() const { return sfr_[sfr::SP - 0x80]; }
    std::uint16_t dptr() const {
        return static_cast<std::uint16_t>(sfr_[sfr::DPH - 0x80] << 8 |
                                          sfr_[sfr::DPL - 0x80]);
    }
    bool carry() const { return psw() & 0x80; }
    std::uint8_t reg(int n) const {
        return iram[static_cast<std::size_t>(((psw() >> 3) & 3) * 8 + n)];
    }

    // Advances both timers by `cycles` machine cycles using the current
    // TCON/TMOD. step() calls this itself; exposed for direct tests.
    void tick_timers(unsigned cycles);

private:
    [[noreturn]] void fault(const std::string& msg) const;

    std::uint8_t sfr_read(std::uint8_t addr, bool rmw);
    void sfr_write(std::uint8_t addr, std::uint8_t v);
    std::uint8_t rd_dir(std::uint8_t addr, bool rmw);
    void wr_dir(std::uint8_t addr, std::uint8_t v);
    std::uint8_t rd_ind(int ri);
    void wr_ind(int ri, std::uint8_t v);
    std::uint8_t rd_reg(int n) const;
    void wr_reg(int n, std::uint8_t v);

    struct BitLoc {
        std::uint8_t byte_addr;
        std::uint8_t mask;
        bool is_sfr;
    };
    BitLoc bit_loc(std::uint8_t bitaddr);
    bool rd_bit(std::uint8_t bitaddr, bool rmw = false);
    void wr_bit(std::uint8_t bitaddr, bool v);

    void push(std::uint8_t v);
    std::uint8_t pop();

    std::uint8_t add_with_flags(std::uint8_t a, std::uint8_t b, bool cin);
    std::uint8_t sub_with_flags(std::uint8_t a, std::uint8_t b, bool cin);
    void set_psw_bit(std::uint8_t mask, bool v);

    void tick_one_timer(int t, unsigned cycles);
    unsigned maybe_interrupt();
    void ext_int_pin_changed(int n, bool was_high, bool now_high);

    std::array<std::uint8_t, 128> sfr_{};
    std::array<bool, 128> sfr_defined_{};
    std::array<std::uint8_t, 4> input_pins_{0xFF, 0xFF, 0xFF, 0xFF};
    bool in_isr_ = false;
    std::uint16_t cur_pc_ = 0;  // address of the instruction being executed
};

}  // namespace wiperbench::mcs51
