#include "wiperbench/mcs51/opcodes.hpp"

#include <array>

namespace wiperbench::mcs51 {

namespace {

using A = Arg;

std::array<OpcodeInfo, 256> build_table() {
    std::array<OpcodeInfo, 256> t{};

    auto set = [&](int code, Op op, A a1, A a2, A a3, int len, int cyc,
                   int reg = 0) {
        t[static_cast<std::size_t>(code)] = {
            op, a1, a2, a3,
            static_cast<std::uint8_t>(reg),
            static_cast<std::uint8_t>(len),
            static_cast<std::uint8_t>(cyc)};
    };
    // Register families: base+0/+1 are @R0/@R1, base+8..+15 are R0..R7.
    auto set_ri = [&](int base, Op op, A a1, A a2, A a3, int len, int cyc) {
        for (int i = 0; i < 2; ++i) set(base + i, op, a1, a2, a3, len, cyc, i);
    };
    auto set_rn = [&](int base, Op op, A a1, A a2, A a3, int len, int cyc) {
        for (int n = 0; n < 8; ++n) set(base + n, op, a1, a2, a3, len, cyc, n);
    };

    set(0x00, Op::NOP, A::None, A::None, A::None, 1, 1);
    for (int p = 0; p < 8; ++p) {
        set(0x01 + p * 0x20, Op::AJMP, A::Addr11, A::None, A::None, 2, 2);
        set(0x11 + p * 0x20, Op::ACALL, A::Addr11, A::None, A::None, 2, 2);
    }
    set(0x02, Op::LJMP, A::Addr16, A::None, A::None, 3, 2);
    set(0x03, Op::RR, A::A, A::None, A::None, 1, 1);
    set(0x04, Op::INC, A::A, A::None, A::None, 1, 1);
    set(0x05, Op::INC, A::Dir, A::None, A::None, 2, 1);
    set_ri(0x06, Op::INC, A::AtRi, A::None, A::None, 1, 1);
    set_rn(0x08, Op::INC, A::Rn, A::None, A::None, 1, 1);

    set(0x10, Op::JBC, A::Bit, A::Rel, A::None, 3, 2);
    set(0x12, Op::LCALL, A::Addr16, A::None, A::None, 3, 2);
    set(0x13, Op::RRC, A::A, A::None, A::None, 1, 1);
    set(0x14, Op::DEC, A::A, A::None, A::None, 1, 1);
    set(0x15, Op::DEC, A::Dir, A::None, A::None, 2, 1);
    set_ri(0x16, Op::DEC, A::AtRi, A::None, A::None, 1, 1);
    set_rn(0x18, Op::DEC, A::Rn, A::None, A::None, 1, 1);

    set(0x20, Op::JB, A::Bit, A::Rel, A::None, 3, 2);
    set(0x22, Op::RET, A::None, A::None, A::None, 1, 2);
    set(0x23, Op::RL, A::A, A::None, A::None, 1, 1);
    set(0x24, Op::ADD, A::A, A::Imm, A::None, 2, 1);
    set(0x25, Op::ADD, A::A, A::Dir, A::None, 2, 1);
    set_ri(0x26, Op::ADD, A::A, A::AtRi, A::None, 1, 1);
    set_rn(0x28, Op::ADD, A::A, A::Rn, A::None, 1, 1);

    set(0x30, Op::JNB, A::Bit, A::Rel, A::None, 3, 2);
    set(0x32, Op::RETI, A::None, A::None, A::None, 1, 2);
    set(0x33, Op::RLC, A::A, A::None, A::None, 1, 1);
    set(0x34, Op::ADDC, A::A, A::Imm, A::None, 2, 1);
    set(0x35, Op::ADDC, A::A, A::Dir, A::None, 2, 1);
    set_ri(0x36, Op::ADDC, A::A, A::AtRi, A::None, 1, 1);
    set_rn(0x38, Op::ADDC, A::A, A::Rn, A::None, 1, 1);

    set(0x40, Op::JC, A::Rel, A::None, A::None, 2, 2);
    set(0x42, Op::ORL, A::Dir, A::A, A::None, 2, 1);
    set(0x43, Op::ORL, A::Dir, A::Imm, A::None, 3, 2);
    set(0x44, Op::ORL, A::A, A::Imm, A::None, 2, 1);
    set(0x45, Op::ORL, A::A, A::Dir, A::None, 2, 1);
    set_ri(0x46, Op::ORL, A::A, A::AtRi, A::None, 1, 1);
    set_rn(0x48, Op::ORL, A::A, A::Rn, A::None, 1, 1);

    set(0x50, Op::JNC, A::Rel, A::None, A::None, 2, 2);
    set(0x52, Op::ANL, A::Dir, A::A, A::None, 2, 1);
    set(0x53, Op::ANL, A::Dir, A::Imm, A::None, 3, 2);
    set(0x54, Op::ANL, A::A, A::Imm, A::None, 2, 1);
    set(0x55, Op::ANL, A::A, A::Dir, A::None, 2, 1);
    set_ri(0x56, Op::ANL, A::A, A::AtRi, A::None, 1, 1);
    set_rn(0x58, Op::ANL, A::A, A::Rn, A::None, 1, 1);

    set(0x60, Op::JZ, A::Rel, A::None, A::None, 2, 2);
    set(0x62, Op::XRL, A::Dir, A::A, A::None, 2, 1);
    set(0x63, Op::XRL, A::Dir, A::Imm, A::None, 3, 2);
    set(0x64, Op::XRL, A::A, A::Imm, A::None, 2, 1);
    set(0x65, Op::XRL, A::A, A::Dir, A::None, 2, 1);
    set_ri(0x66, Op::XRL, A::A, A::AtRi, A::None, 1, 1);
    set_rn(0x68, Op::XRL, A::A, A::Rn, A::None, 1, 1);

    set(0x70, Op::JNZ, A::Rel, A::None, A::None, 2, 2);
    set(0x72, Op::ORL, A::C, A::Bit, A::None, 2, 2);
    set(0x73, Op::JMP, A::AtADptr, A::None, A::None, 1, 2);
    set(0x74, Op::MOV, A::A, A::Imm, A::None, 2, 1);
    set(0x75, Op::MOV, A::Dir, A::Imm, A::None, 3, 2);
    set_ri(0x76, Op::MOV, A::AtRi, A::Imm, A::None, 2, 1);
    set_rn(0x78, Op::MOV, A::Rn, A::Imm, A::None, 2, 1);

    set(0x80, Op::SJMP, A::Rel, A::None, A::None, 2, 2);
    set(0x82, Op::ANL, A::C, A::Bit, A::None, 2, 2);
    set(0x83, Op::MOVC, A::A, A::AtAPc, A::None, 1, 2);
    set(0x84, Op::DIV, A::AB, A::None, A::None, 1, 4);
    // MOV dir,dir encodes the source byte first.
    set(0x85, Op::MOV, A::Dir, A::Dir, A::None, 3, 2);
    set_ri(0x86, Op::MOV, A::Dir, A::AtRi, A::None, 2, 2);
    set_rn(0x88, Op::MOV, A::Dir, A::Rn, A::None, 2, 2);

    set(0x90, Op::MOV, A::Dptr, A::Imm16, A::None, 3, 2);
    set(0x92, Op::MOV, A::Bit, A::C, A::None, 2, 2);
    set(0x93, Op::MOVC, A::A, A::AtADptr, A::None, 1, 2);
    set(0x94, Op::SUBB, A::A, A::Imm, A::None, 2, 1);
    set(0x95, Op::SUBB, A::A, A::Dir, A::None, 2, 1);
    set_ri(0x96, Op::SUBB, A::A, A::AtRi, A::None, 1, 1);
    set_rn(0x98, Op::SUBB, A::A, A::Rn, A::None, 1, 1);

    set(0xA0, Op::ORL, A::C, A::NotBit, A::None, 2, 2);
    set(0xA2, Op::MOV, A::C, A::Bit, A::None, 2, 1);
    set(0xA3, Op::INC, A::Dptr, A::None, A::None, 1, 2);
    set(0xA4, Op::MUL, A::AB, A::None, A::None, 1, 4);
    // 0xA5 stays Illegal: the one encoding MCS-51 never assigned.
    set_ri(0xA6, Op::MOV, A::AtRi, A::Dir, A::None, 2, 2);
    set_rn(0xA8, Op::MOV, A::Rn, A::Dir, A::None, 2, 2);

    set(0xB0, Op::ANL, A::C, A::NotBit, A::None, 2, 2);
    set(0xB2, Op::CPL, A::Bit, A::None, A::None, 2, 1);
    set(0xB3, Op::CPL, A::C, A::None, A::None, 1, 1);
    set(0xB4, Op::CJNE, A::A, A::Imm, A::Rel, 3, 2);
    set(0xB5, Op::CJNE, A::A, A::Dir, A::Rel, 3, 2);
    set_ri(0xB6, Op::CJNE, A::AtRi, A::Imm, A::Rel, 3, 2);
    set_rn(0xB8, Op::CJNE, A::Rn, A::Imm, A::Rel, 3, 2);

    set(0xC0, Op::PUSH, A::Dir, A::None, A::None, 2, 2);
    set(0xC2, Op::CLR, A::Bit, A::None, A::None, 2, 1);
    set(0xC3, Op::CLR, A::C, A::None, A::None, 1, 1);
    set(0xC4, Op::SWAP, A::A, A::None, A::None, 1, 1);
    set(0xC5, Op::XCH, A::A, A::Dir, A::None, 2, 1);
    set_ri(0xC6, Op::XCH, A::A, A::AtRi, A::None, 1, 1);
    set_rn(0xC8, Op::XCH, A::A, A::Rn, A::None, 1, 1);

    set(0xD0, Op::POP, A::Dir, A::None, A::None, 2, 2);
    set(0xD2, Op::SETB, A::Bit, A::None, A::None, 2, 1);
    set(0xD3, Op::SETB, A::C, A::None, A::None, 1, 1);
    set(0xD4, Op::DA, A::A, A::None, A::None, 1, 1);
    set(0xD5, Op::DJNZ, A::Dir, A::Rel, A::None, 3, 2);
    set_ri(0xD6, Op::XCHD, A::A, A::AtRi, A::None, 1, 1);
    set_rn(0xD8, Op::DJNZ, A::Rn, A::Rel, A::None, 2, 2);

    set(0xE0, Op::MOVX, A::A, A::AtDptr, A::None, 1, 2);
    set_ri(0xE2, Op::MOVX, A::A, A::AtRi, A::None, 1, 2);
    set(0xE4, Op::CLR, A::A, A::None, A::None, 1, 1);
    set(0xE5, Op::MOV, A::A, A::Dir, A::None, 2, 1);
    set_ri(0xE6, Op::MOV, A::A, A::AtRi, A::None, 1, 1);
    set_rn(0xE8, Op::MOV, A::A, A::Rn, A::None, 1, 1);

    set(0xF0, Op::MOVX, A::AtDptr, A::A, A::None, 1, 2);
    set_ri(0xF2, Op::MOVX, A::AtRi, A::A, A::None, 1, 2);
    set(0xF4, Op::CPL, A::A, A::None, A::None, 1, 1);
    set(0xF5, Op::MOV, A::Dir, A::A, A::None, 2, 1);
    set_ri(0xF6, Op::MOV, A::AtRi, A::A, A::None, 1, 1);
    set_rn(0xF8, Op::MOV, A::Rn, A::A, A::None, 1, 1);

    return t;
}

const std::array<OpcodeInfo, 256> g_table = build_table();

}  // namespace

const OpcodeInfo& opcode_info(std::uint8_t opcode) { return g_table[opcode]; }

std::string_view op_name(Op op) {
    switch (op) {
        case Op::Illegal: return "?";
        case Op::ACALL: return "ACALL";
        case Op::ADD: return "ADD";
        case Op::ADDC: return "ADDC";
        case Op::AJMP: return "AJMP";
        case Op::ANL: return "ANL";
        case Op::CJNE: return "CJNE";
        case Op::CLR: return "CLR";
        case Op::CPL: return "CPL";
        case Op::DA: return "DA";
        case Op::DEC: return "DEC";
        case Op::DIV: return "DIV";
        case Op::DJNZ: return "DJNZ";
        case Op::INC: return "INC";
        case Op::JB: return "JB";
        case Op::JBC: return "JBC";
        case Op::JC: return "JC";
        case Op::JMP: return "JMP";
        case Op::JNB: return "JNB";
        case Op::JNC: return "JNC";
        case Op::JNZ: return "JNZ";
        case Op::JZ: return "JZ";
        case Op::LCALL: return "LCALL";
        case Op::LJMP: return "LJMP";
        case Op::MOV: return "MOV";
        case Op::MOVC: return "MOVC";
        case Op::MOVX: return "MOVX";
        case Op::MUL: return "MUL";
        case Op::NOP: return "NOP";
        case Op::ORL: return "ORL";
        case Op::POP: return "POP";
        case Op::PUSH: return "PUSH";
        case Op::RET: return "RET";
        case Op::RETI: return "RETI";
        case Op::RL: return "RL";
        case Op::RLC: return "RLC";
        case Op::RR: return "RR";
        case Op::RRC: return "RRC";
        case Op::SETB: return "SETB";
        case Op::SJMP: return "SJMP";
        case Op::SUBB: return "SUBB";
        case Op::SWAP: return "SWAP";
        case Op::XCH: return "XCH";
        case Op::XCHD: return "XCHD";
        case Op::XRL: return "XRL";
    }
    return "?";
}

}  // namespace wiperbench::mcs51
