#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wiperbench/asm51/image.hpp"

namespace wiperbench::asm51 {

struct AsmError {
    int line;  // 1-based source line
    std::string message;
};

struct AsmResult {
    ObjectImage image;
    std::map<std::string, std::uint16_t> symbols;  // labels and EQUs
    std::vector<AsmError> errors;
    bool ok() const { return errors.empty(); }
};

// Two-pass assembler for the full MCS-51 instruction set.
//
// Pass one sizes every statement from operand shapes alone and collects
// labels; pass two evaluates expressions and encodes. ORG and EQU are
// evaluated eagerly during pass one, so they may not forward-reference.
//
// Directives: ORG expr, NAME EQU expr, DB expr[,expr...], END.
// Numbers: 0x2A, 2Ah, 42, 00101010b. '$' is the current statement's
// address. Expressions allow + and - and unary minus. SFR names (P1,
// TCON, ...) and their bit names (TR0, EA, CY, ...) are pre-seeded, and
// any bit-addressable byte can be addressed as BASE.n.
AsmResult assemble(std::string_view source);

// Pre-seeded symbol tables, shared with the disassembler.
const std::map<std::string, int>& sfr_byte_symbols();
const std::map<std::string, int>& sfr_bit_symbols();

}  // namespace wiperbench::asm51
