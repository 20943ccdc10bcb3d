#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "wiperbench/asm51/image.hpp"

namespace wiperbench::asm51 {

struct HexError : std::runtime_error {
    HexError(int record_, const std::string& msg);
    int record;  // 1-based index of the offending record
};

// Intel HEX, the I8HEX subset: data records of at most 16 bytes in
// ascending address order, then one end-of-file record. Uppercase hex,
// LF line endings.
std::string emit_hex(const ObjectImage& image);

// Strict parser for the same subset; anything malformed throws HexError
// naming the record. Blank lines are tolerated, junk is not.
ObjectImage parse_hex(std::string_view text);

}  // namespace wiperbench::asm51
