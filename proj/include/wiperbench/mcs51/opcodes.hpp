#pragma once

#include <cstdint>
#include <string_view>

namespace wiperbench::mcs51 {

enum class Op : std::uint8_t {
    Illegal,
    ACALL, ADD, ADDC, AJMP, ANL, CJNE, CLR, CPL, DA, DEC, DIV, DJNZ,
    INC, JB, JBC, JC, JMP, JNB, JNC, JNZ, JZ, LCALL, LJMP, MOV, MOVC,
    MOVX, MUL, NOP, ORL, POP, PUSH, RET, RETI, RL, RLC, RR, RRC, SETB,
    SJMP, SUBB, SWAP, XCH, XCHD, XRL,
};

// Operand shapes as written in assembly source. For Rn and AtRi the
// register index is carried in OpcodeInfo::reg.
enum class Arg : std::uint8_t {
    None,
    A,        // accumulator
    AB,       // register pair of MUL/DIV
    C,        // carry flag
    Rn,       // R0..R7 of the active bank
    AtRi,     // @R0 / @R1
    Dir,      // direct byte address
    Imm,      // #immediate byte
    Imm16,    // #immediate word (MOV DPTR only)
    Bit,      // bit address
    NotBit,   // /bit, complemented source of ANL/ORL C,/bit
    Rel,      // signed 8-bit displacement from the next instruction
    Addr11,   // in-page target of AJMP/ACALL
    Addr16,   // absolute target of LJMP/LCALL
    Dptr,     // the DPTR register
    AtDptr,   // @DPTR
    AtADptr,  // @A+DPTR
    AtAPc,    // @A+PC
};

struct OpcodeInfo {
    Op op = Op::Illegal;
    Arg a1 = Arg::None;
    Arg a2 = Arg::None;
    Arg a3 = Arg::None;
    std::uint8_t reg = 0;     // Rn / AtRi index when applicable
    std::uint8_t len = 1;     // encoded bytes
    std::uint8_t cycles = 1;  // machine cycles (12 crystal periods each)

    bool valid() const { return op != Op::Illegal; }
    int arg_count() const {
        return a1 == Arg::None ? 0 : a2 == Arg::None ? 1 : a3 == Arg::None ? 2 : 3;
    }
};

// Decode table entry for one of the 256 opcode bytes. 0xA5 is the single
// unassigned encoding.
const OpcodeInfo& opcode_info(std::uint8_t opcode);

std::string_view op_name(Op op);

}  // namespace wiperbench::mcs51
