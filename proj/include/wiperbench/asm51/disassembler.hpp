#pragma once

#include <string>

#include "wiperbench/asm51/image.hpp"

namespace wiperbench::asm51 {

// Linear disassembly of every contiguous run in the image, each headed by
// an ORG line. Output is canonical assembler input: re-assembling it
// reproduces the image byte for byte. Bytes that do not decode (or an
// instruction truncated by the end of a run) come out as DB lines.
std::string disassemble(const ObjectImage& image);

}  // namespace wiperbench::asm51
