#pragma once

#include <cstdint>
#include <vector>

// Random-program generators for the oracle and round-trip suites.

namespace testgen {

// A linear, fault-free 8051 program: every branch has displacement zero and
// every jump or call targets the following instruction, so execution visits
// each emitted instruction exactly once, in order. R0/R1 are pinned inside
// IRAM before any indirect access, SP stays in [0x08, 0x70], PSW bank-select
// bits are never touched, and only modeled SFRs are addressed.
struct CpuProgram {
    std::vector<std::uint8_t> bytes;  // loaded at address 0
    std::size_t instr_count = 0;      // number of instructions to step
};

CpuProgram random_cpu_program(std::uint32_t seed);

// A stream of syntactically valid instruction encodings with unconstrained
// operand bytes (plus the occasional reserved byte or truncated tail), for
// disassemble-reassemble fixpoint checks. Not meant to be executed.
std::vector<std::uint8_t> random_code_image(std::uint32_t seed);

}  // namespace testgen
