#include "support/ref_interp.hpp"

namespace refsim {

namespace {

enum { PSW = 0x50, ACC = 0x60, B = 0x70, SP = 0x01, DPL = 0x02, DPH = 0x03 };
enum { F_CY = 0x80, F_AC = 0x40, F_OV = 0x04, F_P = 0x01 };

std::uint8_t rd(M51* m, std::uint8_t dir) {
    return dir < 0x80 ? m->ram[dir] : m->sfr[dir - 0x80];
}

void wr(M51* m, std::uint8_t dir, std::uint8_t v) {
    if (dir < 0x80)
        m->ram[dir] = v;
    else
        m->sfr[dir - 0x80] = v;
}

std::uint8_t* regbase(M51* m) { return m->ram + ((m->sfr[PSW] >> 3) & 3) * 8; }

// Bit address to (byte address, mask).
void bloc(std::uint8_t ba, std::uint8_t* byte, std::uint8_t* mask) {
    if (ba < 0x80)
        *byte = 0x20 + (ba >> 3);
    else
        *byte = ba & 0xF8;
    *mask = std::uint8_t(1u << (ba & 7));
}

int gbit(M51* m, std::uint8_t ba) {
    std::uint8_t by, mk;
    bloc(ba, &by, &mk);
    return (rd(m, by) & mk) != 0;
}

void sbit(M51* m, std::uint8_t ba, int v) {
    std::uint8_t by, mk;
    bloc(ba, &by, &mk);
    std::uint8_t cur = rd(m, by);
    wr(m, by, v ? std::uint8_t(cur | mk) : std::uint8_t(cur & ~mk));
}

void setflag(M51* m, std::uint8_t mask, int v) {
    if (v)
        m->sfr[PSW] |= mask;
    else
        m->sfr[PSW] &= std::uint8_t(~mask);
}

std::uint16_t getdptr(M51* m) {
    return std::uint16_t((m->sfr[DPH] << 8) | m->sfr[DPL]);
}

void push8(M51* m, std::uint8_t v) {
    m->sfr[SP]++;
    m->ram[m->sfr[SP] & 0x7F] = v;
}

std::uint8_t pop8(M51* m) {
    std::uint8_t v = m->ram[m->sfr[SP] & 0x7F];
    m->sfr[SP]--;
    return v;
}

// a + b + c with CY/AC/OV from the carry chain: OV is carry-into XOR
// carry-out-of bit 7.
std::uint8_t alu_add(M51* m, std::uint8_t a, std::uint8_t b, int c) {
    unsigned full = unsigned(a) + b + unsigned(c);
    unsigned low = (a & 0x0Fu) + (b & 0x0Fu) + unsigned(c);
    unsigned c6 = ((a & 0x7Fu) + (b & 0x7Fu) + unsigned(c)) >> 7;
    unsigned c7 = full >> 8;
    setflag(m, F_CY, int(c7));
    setflag(m, F_AC, low > 0x0F);
    setflag(m, F_OV, int(c6 ^ c7));
    return std::uint8_t(full);
}

std::uint8_t alu_sub(M51* m, std::uint8_t a, std::uint8_t b, int c) {
    unsigned full = unsigned(a) - b - unsigned(c);
    int borrow = int(a) < int(b) + c;
    int half = int(a & 0x0F) < int(b & 0x0F) + c;
    int b6 = int(a & 0x7F) < int(b & 0x7F) + c;
    setflag(m, F_CY, borrow);
    setflag(m, F_AC, half);
    setflag(m, F_OV, b6 ^ borrow);
    return std::uint8_t(full);
}

int parity8(std::uint8_t v) {
    v ^= std::uint8_t(v >> 4);
    v ^= std::uint8_t(v >> 2);
    v ^= std::uint8_t(v >> 1);
    return v & 1;
}

}  // namespace

void m51_reset(M51* m) {
    std::memset(m, 0, sizeof *m);
    m->sfr[SP] = 0x07;
    m->sfr[0x00] = 0xFF;  // P0
    m->sfr[0x10] = 0xFF;  // P1
    m->sfr[0x20] = 0xFF;  // P2
    m->sfr[0x30] = 0xFF;  // P3
}

OpShape m51_shape(std::uint8_t op) {
    // AJMP/ACALL occupy xxx00001 / xxx10001.
    if ((op & 0x1F) == 0x01 || (op & 0x1F) == 0x11) return {2, 2, true};
    switch (op) {
        case 0x00: return {1, 1, true};                      // NOP
        case 0x02: case 0x12: return {3, 2, true};           // LJMP LCALL
        case 0x22: case 0x32: return {1, 2, true};           // RET RETI
        case 0x03: case 0x13: case 0x23: case 0x33:          // RR RRC RL RLC
            return {1, 1, true};
        case 0x04: case 0x14: return {1, 1, true};           // INC A / DEC A
        case 0x05: case 0x15: return {2, 1, true};           // INC/DEC dir
        case 0x06: case 0x07: case 0x16: case 0x17:          // INC/DEC @Ri
            return {1, 1, true};
        case 0x10: case 0x20: case 0x30: return {3, 2, true};  // JBC JB JNB
        case 0x40: case 0x50: case 0x60: case 0x70:          // JC JNC JZ JNZ
            return {2, 2, true};
        case 0x24: case 0x34: case 0x94: return {2, 1, true};  // ADD/ADDC/SUBB #
        case 0x25: case 0x35: case 0x95: return {2, 1, true};  // ... dir
        case 0x26: case 0x27: case 0x36: case 0x37:
        case 0x96: case 0x97: return {1, 1, true};             // ... @Ri
        case 0x42: case 0x52: case 0x62: return {2, 1, true};  // ORL/ANL/XRL dir,A
        case 0x43: case 0x53: case 0x63: return {3, 2, true};  // ... dir,#
        case 0x44: case 0x54: case 0x64: return {2, 1, true};  // ... A,#
        case 0x45: case 0x55: case 0x65: return {2, 1, true};  // ... A,dir
        case 0x46: case 0x47: case 0x56: case 0x57:
        case 0x66: case 0x67: return {1, 1, true};             // ... A,@Ri
        case 0x72: case 0x82: case 0xA0: case 0xB0:            // ORL/ANL C,(/)bit
            return {2, 2, true};
        case 0x73: return {1, 2, true};                        // JMP @A+DPTR
        case 0x74: return {2, 1, true};                        // MOV A,#
        case 0x75: return {3, 2, true};                        // MOV dir,#
        case 0x76: case 0x77: return {2, 1, true};             // MOV @Ri,#
        case 0x80: return {2, 2, true};                        // SJMP
        case 0x83: case 0x93: return {1, 2, true};             // MOVC
        case 0x84: case 0xA4: return {1, 4, true};             // DIV MUL
        case 0x85: return {3, 2, true};                        // MOV dir,dir
        case 0x86: case 0x87: return {2, 2, true};             // MOV dir,@Ri
        case 0x90: return {3, 2, true};                        // MOV DPTR,#
        case 0x92: return {2, 2, true};                        // MOV bit,C
        case 0xA2: return {2, 1, true};                        // MOV C,bit
        case 0xA3: return {1, 2, true};                        // INC DPTR
        case 0xA5: return {0, 0, false};
        case 0xA6: case 0xA7: return {2, 2, true};             // MOV @Ri,dir
        case 0xB2: return {2, 1, true};                        // CPL bit
        case 0xB3: case 0xC3: case 0xD3: return {1, 1, true};  // CPL/CLR/SETB C
        case 0xB4: case 0xB5: return {3, 2, true};             // CJNE A,...
        case 0xB6: case 0xB7: return {3, 2, true};             // CJNE @Ri,#
        case 0xC0: case 0xD0: return {2, 2, true};             // PUSH POP
        case 0xC2: case 0xD2: return {2, 1, true};             // CLR/SETB bit
        case 0xC4: return {1, 1, true};                        // SWAP
        case 0xC5: return {2, 1, true};                        // XCH A,dir
        case 0xC6: case 0xC7: return {1, 1, true};             // XCH A,@Ri
        case 0xD4: return {1, 1, true};                        // DA
        case 0xD5: return {3, 2, true};                        // DJNZ dir
        case 0xD6: case 0xD7: return {1, 1, true};             // XCHD
        case 0xE0: case 0xF0: return {1, 2, true};             // MOVX @DPTR
        case 0xE2: case 0xE3: case 0xF2: case 0xF3:            // MOVX @Ri
            return {1, 2, true};
        case 0xE4: case 0xF4: return {1, 1, true};             // CLR/CPL A
        case 0xE5: return {2, 1, true};                        // MOV A,dir
        case 0xE6: case 0xE7: return {1, 1, true};             // MOV A,@Ri
        case 0xF5: return {2, 1, true};                        // MOV dir,A
        case 0xF6: case 0xF7: return {1, 1, true};             // MOV @Ri,A
        default: break;
    }
    // Register-bank column: one of the 8-wide rows.
    switch (op & 0xF8) {
        case 0x08: case 0x18: return {1, 1, true};             // INC/DEC Rn
        case 0x28: case 0x38: case 0x98: return {1, 1, true};  // ADD/ADDC/SUBB Rn
        case 0x48: case 0x58: case 0x68: return {1, 1, true};  // ORL/ANL/XRL Rn
        case 0x78: return {2, 1, true};                        // MOV Rn,#
        case 0x88: return {2, 2, true};                        // MOV dir,Rn
        case 0xA8: return {2, 2, true};                        // MOV Rn,dir
        case 0xB8: return {3, 2, true};                        // CJNE Rn,#
        case 0xC8: return {1, 1, true};                        // XCH A,Rn
        case 0xD8: return {2, 2, true};                        // DJNZ Rn
        case 0xE8: return {1, 1, true};                        // MOV A,Rn
        case 0xF8: return {1, 1, true};                        // MOV Rn,A
    }
    return {0, 0, false};
}

void m51_step(M51* m) {
    std::uint8_t op = m->rom[m->pc & 0x0FFF];
    OpShape sh = m51_shape(op);
    if (!sh.valid) {
        m->pc++;
        return;
    }
    std::uint8_t o1 = m->rom[(m->pc + 1) & 0x0FFF];
    std::uint8_t o2 = m->rom[(m->pc + 2) & 0x0FFF];
    std::uint16_t nx = std::uint16_t(m->pc + sh.len);
    m->pc = nx;
    m->cycles += unsigned(sh.cycles);

    std::uint8_t* R = regbase(m);
    int n = op & 7;
    std::uint8_t acc = m->sfr[ACC];

    auto jrel = [&](std::uint8_t off) {
        m->pc = std::uint16_t(nx + std::int8_t(off));
    };

    // AJMP / ACALL first, they cut across the low-nibble pattern.
    if ((op & 0x1F) == 0x01 || (op & 0x1F) == 0x11) {
        if (op & 0x10) {
            push8(m, std::uint8_t(nx));
            push8(m, std::uint8_t(nx >> 8));
        }
        m->pc = std::uint16_t((nx & 0xF800) | ((op >> 5) << 8) | o1);
        goto parity;
    }

    switch (op) {
        case 0x00: break;
        case 0x02: m->pc = std::uint16_t((o1 << 8) | o2); break;  // LJMP
        case 0x12:                                                // LCALL
            push8(m, std::uint8_t(nx));
            push8(m, std::uint8_t(nx >> 8));
            m->pc = std::uint16_t((o1 << 8) | o2);
            break;
        case 0x22: case 0x32: {  // RET RETI
            std::uint8_t hi = pop8(m);
            std::uint8_t lo = pop8(m);
            m->pc = std::uint16_t((hi << 8) | lo);
            break;
        }
        case 0x03: m->sfr[ACC] = std::uint8_t((acc >> 1) | (acc << 7)); break;
        case 0x23: m->sfr[ACC] = std::uint8_t((acc << 1) | (acc >> 7)); break;
        case 0x13: {  // RRC
            int c = (m->sfr[PSW] & F_CY) != 0;
            setflag(m, F_CY, acc & 1);
            m->sfr[ACC] = std::uint8_t((acc >> 1) | (c << 7));
            break;
        }
        case 0x33: {  // RLC
            int c = (m->sfr[PSW] & F_CY) != 0;
            setflag(m, F_CY, acc & 0x80);
            m->sfr[ACC] = std::uint8_t((acc << 1) | c);
            break;
        }
        case 0x04: m->sfr[ACC]++; break;
        case 0x14: m->sfr[ACC]--; break;
        case 0x05: wr(m, o1, std::uint8_t(rd(m, o1) + 1)); break;
        case 0x15: wr(m, o1, std::uint8_t(rd(m, o1) - 1)); break;
        case 0x06: case 0x07: m->ram[R[n & 1] & 0x7F]++; break;
        case 0x16: case 0x17: m->ram[R[n & 1] & 0x7F]--; break;
        case 0x08: case 0x09: case 0x0A: case 0x0B:
        case 0x0C: case 0x0D: case 0x0E: case 0x0F: R[n]++; break;
        case 0x18: case 0x19: case 0x1A: case 0x1B:
        case 0x1C: case 0x1D: case 0x1E: case 0x1F: R[n]--; break;

        case 0x10:  // JBC
            if (gbit(m, o1)) {
                sbit(m, o1, 0);
                jrel(o2);
            }
            break;
        case 0x20: if (gbit(m, o1)) jrel(o2); break;   // JB
        case 0x30: if (!gbit(m, o1)) jrel(o2); break;  // JNB
        case 0x40: if (m->sfr[PSW] & F_CY) jrel(o1); break;
        case 0x50: if (!(m->sfr[PSW] & F_CY)) jrel(o1); break;
        case 0x60: if (acc == 0) jrel(o1); break;
        case 0x70: if (acc != 0) jrel(o1); break;
        case 0x80: jrel(o1); break;  // SJMP
        case 0x73: m->pc = std::uint16_t(getdptr(m) + acc); break;

        case 0x24: m->sfr[ACC] = alu_add(m, acc, o1, 0); break;
        case 0x25: m->sfr[ACC] = alu_add(m, acc, rd(m, o1), 0); break;
        case 0x26: case 0x27:
            m->sfr[ACC] = alu_add(m, acc, m->ram[R[n & 1] & 0x7F], 0);
            break;
        case 0x28: case 0x29: case 0x2A: case 0x2B:
        case 0x2C: case 0x2D: case 0x2E: case 0x2F:
            m->sfr[ACC] = alu_add(m, acc, R[n], 0);
            break;
        case 0x34: case 0x35: case 0x36: case 0x37:
        case 0x38: case 0x39: case 0x3A: case 0x3B:
        case 0x3C: case 0x3D: case 0x3E: case 0x3F: {
            int c = (m->sfr[PSW] & F_CY) != 0;
            std::uint8_t src = op == 0x34   ? o1
                               : op == 0x35 ? rd(m, o1)
                               : op <= 0x37 ? m->ram[R[n & 1] & 0x7F]
                                            : R[n];
            m->sfr[ACC] = alu_add(m, acc, src, c);
            break;
        }
        case 0x94: case 0x95: case 0x96: case 0x97:
        case 0x98: case 0x99: case 0x9A: case 0x9B:
        case 0x9C: case 0x9D: case 0x9E: case 0x9F: {
            int c = (m->sfr[PSW] & F_CY) != 0;
            std::uint8_t src = op == 0x94   ? o1
                               : op == 0x95 ? rd(m, o1)
                               : op <= 0x97 ? m->ram[R[n & 1] & 0x7F]
                                            : R[n];
            m->sfr[ACC] = alu_sub(m, acc, src, c);
            break;
        }

        case 0x42: wr(m, o1, std::uint8_t(rd(m, o1) | acc)); break;
        case 0x43: wr(m, o1, std::uint8_t(rd(m, o1) | o2)); break;
        case 0x44: m->sfr[ACC] = std::uint8_t(acc | o1); break;
        case 0x45: m->sfr[ACC] = std::uint8_t(acc | rd(m, o1)); break;
        case 0x46: case 0x47: m->sfr[ACC] = std::uint8_t(acc | m->ram[R[n & 1] & 0x7F]); break;
        case 0x48: case 0x49: case 0x4A: case 0x4B:
        case 0x4C: case 0x4D: case 0x4E: case 0x4F:
            m->sfr[ACC] = std::uint8_t(acc | R[n]);
            break;
        case 0x52: wr(m, o1, std::uint8_t(rd(m, o1) & acc)); break;
        case 0x53: wr(m, o1, std::uint8_t(rd(m, o1) & o2)); break;
        case 0x54: m->sfr[ACC] = std::uint8_t(acc & o1); break;
        case 0x55: m->sfr[ACC] = std::uint8_t(acc & rd(m, o1)); break;
        case 0x56: case 0x57: m->sfr[ACC] = std::uint8_t(acc & m->ram[R[n & 1] & 0x7F]); break;
        case 0x58: case 0x59: case 0x5A: case 0x5B:
        case 0x5C: case 0x5D: case 0x5E: case 0x5F:
            m->sfr[ACC] = std::uint8_t(acc & R[n]);
            break;
        case 0x62: wr(m, o1, std::uint8_t(rd(m, o1) ^ acc)); break;
        case 0x63: wr(m, o1, std::uint8_t(rd(m, o1) ^ o2)); break;
        case 0x64: m->sfr[ACC] = std::uint8_t(acc ^ o1); break;
        case 0x65: m->sfr[ACC] = std::uint8_t(acc ^ rd(m, o1)); break;
        case 0x66: case 0x67: m->sfr[ACC] = std::uint8_t(acc ^ m->ram[R[n & 1] & 0x7F]); break;
        case 0x68: case 0x69: case 0x6A: case 0x6B:
        case 0x6C: case 0x6D: case 0x6E: case 0x6F:
            m->sfr[ACC] = std::uint8_t(acc ^ R[n]);
            break;

        case 0x72: setflag(m, F_CY, ((m->sfr[PSW] & F_CY) != 0) | gbit(m, o1)); break;
        case 0xA0: setflag(m, F_CY, ((m->sfr[PSW] & F_CY) != 0) | !gbit(m, o1)); break;
        case 0x82: setflag(m, F_CY, ((m->sfr[PSW] & F_CY) != 0) & gbit(m, o1)); break;
        case 0xB0: setflag(m, F_CY, ((m->sfr[PSW] & F_CY) != 0) & !gbit(m, o1)); break;

        case 0x74: m->sfr[ACC] = o1; break;
        case 0x75: wr(m, o1, o2); break;
        case 0x76: case 0x77: m->ram[R[n & 1] & 0x7F] = o1; break;
        case 0x78: case 0x79: case 0x7A: case 0x7B:
        case 0x7C: case 0x7D: case 0x7E: case 0x7F: R[n] = o1; break;

        case 0x83: m->sfr[ACC] = m->rom[(nx + acc) & 0x0FFF]; break;
        case 0x93: m->sfr[ACC] = m->rom[(getdptr(m) + acc) & 0x0FFF]; break;

        case 0x84: {  // DIV AB
            setflag(m, F_CY, 0);
            std::uint8_t d = m->sfr[B];
            if (d == 0) {
                setflag(m, F_OV, 1);
            } else {
                m->sfr[ACC] = std::uint8_t(acc / d);
                m->sfr[B] = std::uint8_t(acc % d);
                setflag(m, F_OV, 0);
            }
            break;
        }
        case 0xA4: {  // MUL AB
            unsigned p = unsigned(acc) * m->sfr[B];
            m->sfr[ACC] = std::uint8_t(p);
            m->sfr[B] = std::uint8_t(p >> 8);
            setflag(m, F_CY, 0);
            setflag(m, F_OV, p > 0xFF);
            break;
        }
        case 0xD4: {  // DA A
            unsigned v = acc;
            int c = (m->sfr[PSW] & F_CY) != 0;
            if ((v & 0x0F) > 9 || (m->sfr[PSW] & F_AC)) {
                v += 6;
                if (v > 0xFF) c = 1;
                v &= 0xFF;
            }
            if ((v >> 4) > 9 || c) {
                v += 0x60;
                if (v > 0xFF) c = 1;
                v &= 0xFF;
            }
            m->sfr[ACC] = std::uint8_t(v);
            setflag(m, F_CY, c);
            break;
        }

        case 0x85: wr(m, o2, rd(m, o1)); break;  // MOV dir,dir: src byte first
        case 0x86: case 0x87: wr(m, o1, m->ram[R[n & 1] & 0x7F]); break;
        case 0x88: case 0x89: case 0x8A: case 0x8B:
        case 0x8C: case 0x8D: case 0x8E: case 0x8F: wr(m, o1, R[n]); break;
        case 0x90: m->sfr[DPH] = o1; m->sfr[DPL] = o2; break;
        case 0x92: sbit(m, o1, (m->sfr[PSW] & F_CY) != 0); break;
        case 0xA2: setflag(m, F_CY, gbit(m, o1)); break;
        case 0xA3: {
            std::uint16_t d = std::uint16_t(getdptr(m) + 1);
            m->sfr[DPH] = std::uint8_t(d >> 8);
            m->sfr[DPL] = std::uint8_t(d);
            break;
        }
        case 0xA6: case 0xA7: m->ram[R[n & 1] & 0x7F] = rd(m, o1); break;
        case 0xA8: case 0xA9: case 0xAA: case 0xAB:
        case 0xAC: case 0xAD: case 0xAE: case 0xAF: R[n] = rd(m, o1); break;

        case 0xB2: sbit(m, o1, !gbit(m, o1)); break;
        case 0xB3: setflag(m, F_CY, !(m->sfr[PSW] & F_CY)); break;
        case 0xC2: sbit(m, o1, 0); break;
        case 0xC3: setflag(m, F_CY, 0); break;
        case 0xD2: sbit(m, o1, 1); break;
        case 0xD3: setflag(m, F_CY, 1); break;

        case 0xB4: case 0xB5: case 0xB6: case 0xB7:
        case 0xB8: case 0xB9: case 0xBA: case 0xBB:
        case 0xBC: case 0xBD: case 0xBE: case 0xBF: {
            std::uint8_t lhs, rhs;
            if (op == 0xB4) { lhs = acc; rhs = o1; }
            else if (op == 0xB5) { lhs = acc; rhs = rd(m, o1); }
            else if (op <= 0xB7) { lhs = m->ram[R[n & 1] & 0x7F]; rhs = o1; }
            else { lhs = R[n]; rhs = o1; }
            setflag(m, F_CY, lhs < rhs);
            if (lhs != rhs) jrel(o2);
            break;
        }

        case 0xC0: push8(m, rd(m, o1)); break;
        case 0xD0: wr(m, o1, pop8(m)); break;

        case 0xC4: m->sfr[ACC] = std::uint8_t((acc << 4) | (acc >> 4)); break;
        case 0xC5: {
            std::uint8_t t = rd(m, o1);
            wr(m, o1, acc);
            m->sfr[ACC] = t;
            break;
        }
        case 0xC6: case 0xC7: {
            std::uint8_t* p = &m->ram[R[n & 1] & 0x7F];
            std::uint8_t t = *p;
            *p = acc;
            m->sfr[ACC] = t;
            break;
        }
        case 0xC8: case 0xC9: case 0xCA: case 0xCB:
        case 0xCC: case 0xCD: case 0xCE: case 0xCF: {
            std::uint8_t t = R[n];
            R[n] = acc;
            m->sfr[ACC] = t;
            break;
        }
        case 0xD6: case 0xD7: {  // XCHD
            std::uint8_t* p = &m->ram[R[n & 1] & 0x7F];
            std::uint8_t t = *p;
            *p = std::uint8_t((t & 0xF0) | (acc & 0x0F));
            m->sfr[ACC] = std::uint8_t((acc & 0xF0) | (t & 0x0F));
            break;
        }

        case 0xD5: {  // DJNZ dir
            std::uint8_t v = std::uint8_t(rd(m, o1) - 1);
            wr(m, o1, v);
            if (v) jrel(o2);
            break;
        }
        case 0xD8: case 0xD9: case 0xDA: case 0xDB:
        case 0xDC: case 0xDD: case 0xDE: case 0xDF:
            if (--R[n]) jrel(o1);
            break;

        case 0xE4: m->sfr[ACC] = 0; break;
        case 0xF4: m->sfr[ACC] = std::uint8_t(~acc); break;
        case 0xE5: m->sfr[ACC] = rd(m, o1); break;
        case 0xE6: case 0xE7: m->sfr[ACC] = m->ram[R[n & 1] & 0x7F]; break;
        case 0xE8: case 0xE9: case 0xEA: case 0xEB:
        case 0xEC: case 0xED: case 0xEE: case 0xEF: m->sfr[ACC] = R[n]; break;
        case 0xF5: wr(m, o1, acc); break;
        case 0xF6: case 0xF7: m->ram[R[n & 1] & 0x7F] = acc; break;
        case 0xF8: case 0xF9: case 0xFA: case 0xFB:
        case 0xFC: case 0xFD: case 0xFE: case 0xFF: R[n] = acc; break;

        default: break;  // MOVX and 0xA5 never appear in oracle programs
    }

parity:
    setflag(m, F_P, parity8(m->sfr[ACC]));
}

}  // namespace refsim
