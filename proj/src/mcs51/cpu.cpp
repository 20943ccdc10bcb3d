#include "wiperbench/mcs51/cpu.hpp"

#include <bit>
#include <cstdio>

#include "wiperbench/mcs51/opcodes.hpp"

namespace wiperbench::mcs51 {

namespace {

// PSW flag masks
constexpr std::uint8_t kCy = 0x80, kAc = 0x40, kOv = 0x04, kP = 0x01;

constexpr std::uint8_t kPortAddr[4] = {sfr::P0, sfr::P1, sfr::P2, sfr::P3};

int port_index(std::uint8_t addr) {
    switch (addr) {
        case sfr::P0: return 0;
        case sfr::P1: return 1;
        case sfr::P2: return 2;
        case sfr::P3: return 3;
        default: return -1;
    }
}

std::string hexfmt(const char* fmt, unsigned v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

}  // namespace

CpuFault::CpuFault(const std::string& msg, std::uint16_t pc_, std::uint64_t cyc)
    : std::runtime_error(msg + hexfmt(" at PC 0x%04X", pc_) + ", cycle " +
                         std::to_string(cyc)),
      pc(pc_),
      cycle(cyc) {}

Cpu::Cpu() {
    for (std::uint8_t a : {sfr::P0, sfr::SP, sfr::DPL, sfr::DPH, sfr::PCON,
                           sfr::TCON, sfr::TMOD, sfr::TL0, sfr::TL1, sfr::TH0,
                           sfr::TH1, sfr::P1, sfr::SCON, sfr::SBUF, sfr::P2,
                           sfr::IE, sfr::P3, sfr::IP, sfr::PSW, sfr::ACC,
                           sfr::B}) {
        sfr_defined_[a - 0x80u] = true;
    }
    reset();
}

void Cpu::reset() {
    // Real silicon leaves IRAM unspecified across reset; zeroing it keeps
    // every run reproducible.
    iram.fill(0);
    sfr_.fill(0);
    sfr_[sfr::SP - 0x80] = 0x07;
    for (std::uint8_t p : kPortAddr) sfr_[p - 0x80] = 0xFF;
    input_pins_ = {0xFF, 0xFF, 0xFF, 0xFF};
    pc = 0;
    cur_pc_ = 0;
    cycle_count = 0;
    in_isr_ = false;
}

void Cpu::load_image(const asm51::ObjectImage& image) {
    rom.fill(0);
    for (const auto& [addr, byte] : image.bytes) {
        if (addr >= kRomSize)
            throw LoadError(hexfmt("image byte at 0x%04X outside 4 KB ROM", addr));
        rom[addr] = byte;
    }
}

void Cpu::fault(const std::string& msg) const {
    throw CpuFault(msg, cur_pc_, cycle_count);
}

// ---- memory and register access -------------------------------------

std::uint8_t Cpu::sfr_read(std::uint8_t addr, bool rmw) {
    const std::uint8_t idx = addr - 0x80u;
    if (!sfr_defined_[idx]) fault(hexfmt("read of unimplemented SFR 0x%02X", addr));
    if (addr == sfr::SBUF) fault("serial port access (SBUF read)");
    const int p = port_index(addr);
    // Ports are quasi-bidirectional: plain reads see latch AND pins,
    // read-modify-write forms read the latch itself.
    if (p >= 0 && !rmw) return sfr_[idx] & input_pins_[p];
    return sfr_[idx];
}

void Cpu::sfr_write(std::uint8_t addr, std::uint8_t v) {
    const std::uint8_t idx = addr - 0x80u;
    if (!sfr_defined_[idx]) fault(hexfmt("write to unimplemented SFR 0x%02X", addr));
    if (addr == sfr::SBUF) fault("serial port access (SBUF write)");
    sfr_[idx] = v;
}

std::uint8_t Cpu::rd_dir(std::uint8_t addr, bool rmw) {
    return addr < 0x80 ? iram[addr] : sfr_read(addr, rmw);
}

void Cpu::wr_dir(std::uint8_t addr, std::uint8_t v) {
    if (addr < 0x80)
        iram[addr] = v;
    else
        sfr_write(addr, v);
}

std::uint8_t Cpu::rd_reg(int n) const {
    return iram[static_cast<std::size_t>(((psw() >> 3) & 3) * 8 + n)];
}

void Cpu::wr_reg(int n, std::uint8_t v) {
    iram[static_cast<std::size_t>(((psw() >> 3) & 3) * 8 + n)] = v;
}

std::uint8_t Cpu::rd_ind(int ri) {
    const std::uint8_t addr = rd_reg(ri);
    if (addr >= 0x80) fault(hexfmt("indirect read past IRAM (@Ri = 0x%02X)", addr));
    return iram[addr];
}

void Cpu::wr_ind(int ri, std::uint8_t v) {
    const std::uint8_t addr = rd_reg(ri);
    if (addr >= 0x80) fault(hexfmt("indirect write past IRAM (@Ri = 0x%02X)", addr));
    iram[addr] = v;
}

Cpu::BitLoc Cpu::bit_loc(std::uint8_t bitaddr) {
    const std::uint8_t mask = static_cast<std::uint8_t>(1u << (bitaddr & 7));
    if (bitaddr < 0x80)
        return {static_cast<std::uint8_t>(0x20 + (bitaddr >> 3)), mask, false};
    const std::uint8_t base = bitaddr & 0xF8u;
    if (!sfr_defined_[base - 0x80u])
        fault(hexfmt("bit address 0x%02X has no register behind it", bitaddr));
    return {base, mask, true};
}

bool Cpu::rd_bit(std::uint8_t bitaddr, bool rmw) {
    const BitLoc loc = bit_loc(bitaddr);
    const std::uint8_t byte =
        loc.is_sfr ? sfr_read(loc.byte_addr, rmw) : iram[loc.byte_addr];
    return byte & loc.mask;
}

void Cpu::wr_bit(std::uint8_t bitaddr, bool v) {
    const BitLoc loc = bit_loc(bitaddr);
    // Bit writes into a port always go through the latch.
    std::uint8_t byte =
        loc.is_sfr ? sfr_read(loc.byte_addr, true) : iram[loc.byte_addr];
    byte = v ? byte | loc.mask : byte & static_cast<std::uint8_t>(~loc.mask);
    if (loc.is_sfr)
        sfr_write(loc.byte_addr, byte);
    else
        iram[loc.byte_addr] = byte;
}

void Cpu::push(std::uint8_t v) {
    const std::uint8_t nsp = static_cast<std::uint8_t>(sfr_[sfr::SP - 0x80] + 1);
    if (nsp > 0x7F) fault(hexfmt("stack overflow past IRAM (SP -> 0x%02X)", nsp));
    sfr_[sfr::SP - 0x80] = nsp;
    iram[nsp] = v;
}

std::uint8_t Cpu::pop() {
    const std::uint8_t cur = sfr_[sfr::SP - 0x80];
    if (cur == 0) fault("stack underflow (SP = 0x00)");
    if (cur >= 0x80) fault(hexfmt("stack pointer past IRAM (SP = 0x%02X)", cur));
    sfr_[sfr::SP - 0x80] = static_cast<std::uint8_t>(cur - 1);
    return iram[cur];
}

// ---- pins -------------------------------------------------------------

void Cpu::set_input_pin(int port, int bit, bool high) {
    const std::uint8_t mask = static_cast<std::uint8_t>(1u << bit);
    const bool was = port_pins(port) & mask;
    if (high)
        input_pins_[static_cast<std::size_t>(port)] |= mask;
    else
        input_pins_[static_cast<std::size_t>(port)] &= static_cast<std::uint8_t>(~mask);
    const bool now = port_pins(port) & mask;
    if (port == 3 && (bit == 2 || bit == 3) && was != now)
        ext_int_pin_changed(bit - 2, was, now);
}

bool Cpu::read_pin(int port, int bit) const {
    return port_pins(port) & (1u << bit);
}

std::uint8_t Cpu::port_latch(int port) const {
    return sfr_[kPortAddr[port] - 0x80u];
}

std::uint8_t Cpu::port_pins(int port) const {
    return sfr_[kPortAddr[port] - 0x80u] & input_pins_[static_cast<std::size_t>(port)];
}

std::uint8_t Cpu::get_sfr(std::uint8_t addr) const {
    if (addr < 0x80 || !sfr_defined_[addr - 0x80u])
        throw std::out_of_range(hexfmt("no SFR at 0x%02X", addr));
    return sfr_[addr - 0x80u];
}

void Cpu::set_sfr(std::uint8_t addr, std::uint8_t v) {
    if (addr < 0x80 || !sfr_defined_[addr - 0x80u])
        throw std::out_of_range(hexfmt("no SFR at 0x%02X", addr));
    sfr_[addr - 0x80u] = v;
}

// ---- flags ------------------------------------------------------------

void Cpu::set_psw_bit(std::uint8_t mask, bool v) {
    std::uint8_t& psw = sfr_[sfr::PSW - 0x80];
    psw = v ? psw | mask : psw & static_cast<std::uint8_t>(~mask);
}

std::uint8_t Cpu::add_with_flags(std::uint8_t a, std::uint8_t b, bool cin) {
    const unsigned r = unsigned(a) + unsigned(b) + unsigned(cin);
    const int sr = int(std::int8_t(a)) + int(std::int8_t(b)) + int(cin);
    set_psw_bit(kCy, r > 0xFF);
    set_psw_bit(kAc, (a & 0x0F) + (b & 0x0F) + unsigned(cin) > 0x0F);
    set_psw_bit(kOv, sr < -128 || sr > 127);
    return static_cast<std::uint8_t>(r);
}

std::uint8_t Cpu::sub_with_flags(std::uint8_t a, std::uint8_t b, bool cin) {
    const int r = int(a) - int(b) - int(cin);
    const int sr = int(std::int8_t(a)) - int(std::int8_t(b)) - int(cin);
    set_psw_bit(kCy, r < 0);
    set_psw_bit(kAc, (a & 0x0F) - (b & 0x0F) - int(cin) < 0);
    set_psw_bit(kOv, sr < -128 || sr > 127);
    return static_cast<std::uint8_t>(r);
}

// ---- timers -----------------------------------------------------------

void Cpu::tick_timers(unsigned cycles) {
    tick_one_timer(0, cycles);
    tick_one_timer(1, cycles);
}

void Cpu::tick_one_timer(int t, unsigned cycles) {
    std::uint8_t& tcon = sfr_[sfr::TCON - 0x80];
    const std::uint8_t tr_mask = t == 0 ? 0x10 : 0x40;
    const std::uint8_t tf_mask = t == 0 ? 0x20 : 0x80;
    if (!(tcon & tr_mask) || cycles == 0) return;

    const std::uint8_t tmod = sfr_[sfr::TMOD - 0x80];
    const std::uint8_t mode_bits =
        t == 0 ? tmod & 0x0F : static_cast<std::uint8_t>(tmod >> 4);
    if (mode_bits & 0x08) fault("timer GATE control not modeled");
    if (mode_bits & 0x04) fault("timer counter mode (C/T = 1) not modeled");
    std::uint8_t& tl = sfr_[(t == 0 ? sfr::TL0 : sfr::TL1) - 0x80];
    std::uint8_t& th = sfr_[(t == 0 ? sfr::TH0 : sfr::TH1) - 0x80];

    switch (mode_bits & 3) {
        case 0: {  // 13-bit: TH holds the top 8 bits, TL the bottom 5
            unsigned cnt = (unsigned(th) << 5) | (tl & 0x1F);
            cnt += cycles;
            if (cnt >= 8192) tcon |= tf_mask;
            cnt &= 8191;
            th = static_cast<std::uint8_t>(cnt >> 5);
            tl = static_cast<std::uint8_t>((tl & 0xE0) | (cnt & 0x1F));
            break;
        }
        case 1: {  // 16-bit
            unsigned cnt = (unsigned(th) << 8) | tl;
            cnt += cycles;
            if (cnt >= 65536) tcon |= tf_mask;
            cnt &= 0xFFFF;
            th = static_cast<std::uint8_t>(cnt >> 8);
            tl = static_cast<std::uint8_t>(cnt);
            break;
        }
        case 2: {  // 8-bit, reloads from TH on overflow
            unsigned cnt = tl;
            cnt += cycles;
            while (cnt >= 256) {
                tcon |= tf_mask;
                cnt = th + (cnt - 256);
            }
            tl = static_cast<std::uint8_t>(cnt);
            break;
        }
        default:
            fault("timer mode 3 not modeled");
    }
}

// ---- interrupts --------------------------------------------------------

void Cpu::ext_int_pin_changed(int n, bool was_high, bool now_high) {
    std::uint8_t& tcon = sfr_[sfr::TCON - 0x80];
    const std::uint8_t it_mask = n == 0 ? 0x01 : 0x04;
    const std::uint8_t ie_mask = n == 0 ? 0x02 : 0x08;
    if (tcon & it_mask) {
        if (was_high && !now_high) tcon |= ie_mask;  // latch the falling edge
    } else {
        // Level-triggered: the request flag just mirrors the (inverted) pin.
        if (!now_high)
            tcon |= ie_mask;
        else
            tcon &= static_cast<std::uint8_t>(~ie_mask);
    }
}

unsigned Cpu::maybe_interrupt() {
    const std::uint8_t ie = sfr_[sfr::IE - 0x80];
    if (!(ie & 0x80) || in_isr_) return 0;
    std::uint8_t& tcon = sfr_[sfr::TCON - 0x80];

    struct Source {
        std::uint8_t enable, flag, it_mask;
        std::uint16_t vector;
        int ext_pin;  // P3 pin for external sources, -1 for timers
    };
    // Natural polling order INT0, T0, INT1, T1. IP is stored but a single
    // in-service level makes priorities moot.
    static constexpr Source kSources[] = {
        {0x01, 0x02, 0x01, 0x0003, 2},
        {0x02, 0x20, 0x00, 0x000B, -1},
        {0x04, 0x08, 0x04, 0x0013, 3},
        {0x08, 0x80, 0x00, 0x001B, -1},
    };
    for (const auto& s : kSources) {
        if (!(ie & s.enable)) continue;
        const bool level_mode = s.ext_pin >= 0 && !(tcon & s.it_mask);
        const bool pending =
            level_mode ? !read_pin(3, s.ext_pin) : (tcon & s.flag) != 0;
        if (!pending) continue;
        if (!level_mode) tcon &= static_cast<std::uint8_t>(~s.flag);
        push(static_cast<std::uint8_t>(pc));
        push(static_cast<std::uint8_t>(pc >> 8));
        pc = s.vector;
        in_isr_ = true;
        tick_timers(3);
        cycle_count += 3;
        return 3;
    }
    return 0;
}

// ---- execution ----------------------------------------------------------

unsigned Cpu::step() {
    if (unsigned c = maybe_interrupt()) return c;
    if (pc >= kRomSize) fault("execution past 4 KB ROM");
    cur_pc_ = pc;
    const std::uint8_t opc = rom[pc];
    const OpcodeInfo& info = opcode_info(opc);
    if (!info.valid()) fault(hexfmt("unimplemented opcode 0x%02X", opc));
    if (info.op == Op::MOVX) fault("MOVX needs external RAM, none fitted");
    if (pc + info.len > kRomSize) fault("instruction overruns 4 KB ROM");
    const std::uint8_t b1 = info.len > 1 ? rom[pc + 1] : 0;
    const std::uint8_t b2 = info.len > 2 ? rom[pc + 2] : 0;
    const std::uint16_t next = static_cast<std::uint16_t>(pc + info.len);

    // Timers see this instruction's cycles before its side effects land,
    // so TRx changes take hold from the following instruction onwards.
    tick_timers(info.cycles);
    pc = next;

    std::uint8_t& a = sfr_[sfr::ACC - 0x80];
    std::uint8_t& breg = sfr_[sfr::B - 0x80];
    const int reg = info.reg;

    auto rel_jump = [&](std::uint8_t rel) {
        pc = static_cast<std::uint16_t>(next + std::int8_t(rel));
    };
    auto src8 = [&](Arg kind) -> std::uint8_t {  // A,<src> operand fetch
        switch (kind) {
            case Arg::Imm: return b1;
            case Arg::Dir: return rd_dir(b1, false);
            case Arg::AtRi: return rd_ind(reg);
            default: return rd_reg(reg);
        }
    };

    switch (info.op) {
        case Op::NOP:
            break;
        case Op::AJMP:
        case Op::ACALL:
            if (info.op == Op::ACALL) {
                push(static_cast<std::uint8_t>(next));
                push(static_cast<std::uint8_t>(next >> 8));
            }
            pc = static_cast<std::uint16_t>((next & 0xF800) |
                                            (std::uint16_t(opc >> 5) << 8) | b1);
            break;
        case Op::LJMP:
        case Op::LCALL:
            if (info.op == Op::LCALL) {
                push(static_cast<std::uint8_t>(next));
                push(static_cast<std::uint8_t>(next >> 8));
            }
            pc = static_cast<std::uint16_t>(b1 << 8 | b2);
            break;
        case Op::RET:
        case Op::RETI: {
            const std::uint8_t hi = pop();
            const std::uint8_t lo = pop();
            pc = static_cast<std::uint16_t>(hi << 8 | lo);
            if (info.op == Op::RETI) in_isr_ = false;
            break;
        }
        case Op::RR:
            a = static_cast<std::uint8_t>(a >> 1 | a << 7);
            break;
        case Op::RL:
            a = static_cast<std::uint8_t>(a << 1 | a >> 7);
            break;
        case Op::RRC: {
            const bool c = carry();
            set_psw_bit(kCy, a & 1);
            a = static_cast<std::uint8_t>(a >> 1 | (c ? 0x80 : 0));
            break;
        }
        case Op::RLC: {
            const bool c = carry();
            set_psw_bit(kCy, a & 0x80);
            a = static_cast<std::uint8_t>(a << 1 | (c ? 1 : 0));
            break;
        }
        case Op::INC:
            switch (info.a1) {
                case Arg::A: ++a; break;
                case Arg::Dir: wr_dir(b1, static_cast<std::uint8_t>(rd_dir(b1, true) + 1)); break;
                case Arg::AtRi: wr_ind(reg, static_cast<std::uint8_t>(rd_ind(reg) + 1)); break;
                case Arg::Rn: wr_reg(reg, static_cast<std::uint8_t>(rd_reg(reg) + 1)); break;
                default: {  // DPTR
                    const std::uint16_t d = static_cast<std::uint16_t>(dptr() + 1);
                    sfr_[sfr::DPH - 0x80] = static_cast<std::uint8_t>(d >> 8);
                    sfr_[sfr::DPL - 0x80] = static_cast<std::uint8_t>(d);
                    break;
                }
            }
            break;
        case Op::DEC:
            switch (info.a1) {
                case Arg::A: --a; break;
                case Arg::Dir: wr_dir(b1, static_cast<std::uint8_t>(rd_dir(b1, true) - 1)); break;
                case Arg::AtRi: wr_ind(reg, static_cast<std::uint8_t>(rd_ind(reg) - 1)); break;
                default: wr_reg(reg, static_cast<std::uint8_t>(rd_reg(reg) - 1)); break;
            }
            break;
        case Op::ADD:
            a = add_with_flags(a, src8(info.a2), false);
            break;
        case Op::ADDC:
            a = add_with_flags(a, src8(info.a2), carry());
            break;
        case Op::SUBB:
            a = sub_with_flags(a, src8(info.a2), carry());
            break;
        case Op::MUL: {
            const unsigned r = unsigned(a) * breg;
            a = static_cast<std::uint8_t>(r);
            breg = static_cast<std::uint8_t>(r >> 8);
            set_psw_bit(kCy, false);
            set_psw_bit(kOv, r > 0xFF);
            break;
        }
        case Op::DIV:
            set_psw_bit(kCy, false);
            if (breg == 0) {
                set_psw_bit(kOv, true);  // quotient undefined, keep A and B
            } else {
                const std::uint8_t q = a / breg;
                const std::uint8_t rem = a % breg;
                a = q;
                breg = rem;
                set_psw_bit(kOv, false);
            }
            break;
        case Op::DA: {
            unsigned v = a;
            bool c = carry();
            if ((v & 0x0F) > 9 || (psw() & kAc)) {
                v += 0x06;
                if (v > 0xFF) c = true;
                v &= 0xFF;
            }
            if ((v >> 4) > 9 || c) {
                v += 0x60;
                if (v > 0xFF) c = true;
                v &= 0xFF;
            }
            a = static_cast<std::uint8_t>(v);
            set_psw_bit(kCy, c);  // DA never clears carry
            break;
        }
        case Op::ANL:
        case Op::ORL:
        case Op::XRL: {
            if (info.a1 == Arg::C) {
                bool bit = rd_bit(b1, false);
                if (info.a2 == Arg::NotBit) bit = !bit;
                const bool c = carry();
                set_psw_bit(kCy, info.op == Op::ANL ? (c && bit) : (c || bit));
                break;
            }
            auto combine = [&](std::uint8_t x, std::uint8_t y) -> std::uint8_t {
                return info.op == Op::ANL ? x & y
                     : info.op == Op::ORL ? x | y
                                          : x ^ y;
            };
            if (info.a1 == Arg::Dir) {
                const std::uint8_t cur = rd_dir(b1, true);  // read-modify-write
                const std::uint8_t src = info.a2 == Arg::A ? a : b2;
                wr_dir(b1, combine(cur, src));
            } else {
                a = combine(a, src8(info.a2));
            }
            break;
        }
        case Op::CLR:
            if (info.a1 == Arg::A)
                a = 0;
            else if (info.a1 == Arg::C)
                set_psw_bit(kCy, false);
            else
                wr_bit(b1, false);
            break;
        case Op::SETB:
            if (info.a1 == Arg::C)
                set_psw_bit(kCy, true);
            else
                wr_bit(b1, true);
            break;
        case Op::CPL:
            if (info.a1 == Arg::A)
                a = static_cast<std::uint8_t>(~a);
            else if (info.a1 == Arg::C)
                set_psw_bit(kCy, !carry());
            else
                wr_bit(b1, !rd_bit(b1, true));
            break;
        case Op::SWAP:
            a = static_cast<std::uint8_t>(a << 4 | a >> 4);
            break;
        case Op::MOV:
            switch (info.a1) {
                case Arg::A: a = src8(info.a2); break;
                case Arg::Rn:
                    wr_reg(reg, info.a2 == Arg::Imm ? b1
                                : info.a2 == Arg::Dir ? rd_dir(b1, false)
                                                      : a);
                    break;
                case Arg::AtRi:
                    wr_ind(reg, info.a2 == Arg::Imm ? b1
                                : info.a2 == Arg::Dir ? rd_dir(b1, false)
                                                      : a);
                    break;
                case Arg::Dir:
                    switch (info.a2) {
                        case Arg::Imm: wr_dir(b1, b2); break;
                        case Arg::Dir: wr_dir(b2, rd_dir(b1, false)); break;  // src first
                        case Arg::AtRi: wr_dir(b1, rd_ind(reg)); break;
                        case Arg::Rn: wr_dir(b1, rd_reg(reg)); break;
                        default: wr_dir(b1, a); break;
                    }
                    break;
                case Arg::Dptr:
                    sfr_[sfr::DPH - 0x80] = b1;
                    sfr_[sfr::DPL - 0x80] = b2;
                    break;
                case Arg::C: set_psw_bit(kCy, rd_bit(b1, false)); break;
                default: wr_bit(b1, carry()); break;  // MOV bit,C
            }
            break;
        case Op::MOVC: {
            const std::uint16_t base = info.a2 == Arg::AtAPc ? next : dptr();
            const std::uint32_t addr = std::uint32_t(base) + a;
            if (addr >= kRomSize) fault(hexfmt("MOVC read past ROM (0x%04X)", addr));
            a = rom[addr];
            break;
        }
        case Op::XCH: {
            std::uint8_t tmp;
            if (info.a2 == Arg::Dir) {
                tmp = rd_dir(b1, false);
                wr_dir(b1, a);
            } else if (info.a2 == Arg::AtRi) {
                tmp = rd_ind(reg);
                wr_ind(reg, a);
            } else {
                tmp = rd_reg(reg);
                wr_reg(reg, a);
            }
            a = tmp;
            break;
        }
        case Op::XCHD: {
            const std::uint8_t v = rd_ind(reg);
            wr_ind(reg, static_cast<std::uint8_t>((v & 0xF0) | (a & 0x0F)));
            a = static_cast<std::uint8_t>((a & 0xF0) | (v & 0x0F));
            break;
        }
        case Op::PUSH:
            push(rd_dir(b1, false));
            break;
        case Op::POP:
            wr_dir(b1, pop());
            break;
        case Op::JMP:
            pc = static_cast<std::uint16_t>(dptr() + a);
            break;
        case Op::SJMP:
            rel_jump(b1);
            break;
        case Op::JZ:
            if (a == 0) rel_jump(b1);
            break;
        case Op::JNZ:
            if (a != 0) rel_jump(b1);
            break;
        case Op::JC:
            if (carry()) rel_jump(b1);
            break;
        case Op::JNC:
            if (!carry()) rel_jump(b1);
            break;
        case Op::JB:
            if (rd_bit(b1, false)) rel_jump(b2);
            break;
        case Op::JNB:
            if (!rd_bit(b1, false)) rel_jump(b2);
            break;
        case Op::JBC:
            if (rd_bit(b1, true)) {  // reads the latch, like all RMW forms
                wr_bit(b1, false);
                rel_jump(b2);
            }
            break;
        case Op::CJNE: {
            std::uint8_t lhs, rhs;
            if (info.a1 == Arg::A) {
                lhs = a;
                rhs = info.a2 == Arg::Imm ? b1 : rd_dir(b1, false);
            } else {
                lhs = info.a1 == Arg::AtRi ? rd_ind(reg) : rd_reg(reg);
                rhs = b1;
            }
            set_psw_bit(kCy, lhs < rhs);
            if (lhs != rhs) rel_jump(b2);
            break;
        }
        case Op::DJNZ:
            if (info.a1 == Arg::Dir) {
                const std::uint8_t v = static_cast<std::uint8_t>(rd_dir(b1, true) - 1);
                wr_dir(b1, v);
                if (v) rel_jump(b2);
            } else {
                const std::uint8_t v = static_cast<std::uint8_t>(rd_reg(reg) - 1);
                wr_reg(reg, v);
                if (v) rel_jump(b1);
            }
            break;
        case Op::MOVX:
        case Op::Illegal:
            break;  // rejected before dispatch
    }

    // P always mirrors the accumulator's parity (set on an odd bit count).
    set_psw_bit(kP, std::popcount(a) & 1);
    cycle_count += info.cycles;
    return info.cycles;
}

}  // namespace wiperbench::mcs51
