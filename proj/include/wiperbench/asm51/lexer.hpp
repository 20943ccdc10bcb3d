#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wiperbench::asm51 {

enum class Tok : std::uint8_t {
    End, Ident, Number, Comma, Hash, At, Slash, Plus, Minus, Colon, Dot, Dollar,
};

struct Token {
    Tok kind;
    std::string text;  // identifiers uppercased
    long value = 0;    // numbers
    std::size_t col = 0;
};

// Splits one source line into tokens. Comments (';' to end of line) are
// dropped. Numbers: 0x2A, 2Ah, 42, 00101010b. Returns false and fills
// *error on a malformed token.
bool lex_line(std::string_view line, std::vector<Token>& out, std::string* error);

}  // namespace wiperbench::asm51
