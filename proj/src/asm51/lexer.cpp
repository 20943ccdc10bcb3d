#include "wiperbench/asm51/lexer.hpp"

#include <cctype>

namespace wiperbench::asm51 {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
}

// A token that starts with a digit: 0x2A, 2Ah, 00101010b, or decimal.
bool parse_number(std::string_view text, long* out, std::string* error) {
    if (text.size() > 2 && (text[1] == 'x' || text[1] == 'X') && text[0] == '0') {
        long v = 0;
        for (std::size_t i = 2; i < text.size(); ++i) {
            const int d = hex_digit(text[i]);
            if (d < 0) {
                *error = "bad hex literal '" + std::string(text) + "'";
                return false;
            }
            v = v * 16 + d;
            if (v > 0xFFFFFF) break;  // clamp runaway literals, range-checked later
        }
        *out = v;
        return true;
    }
    const char suffix = text.back();
    if (suffix == 'h' || suffix == 'H') {
        long v = 0;
        for (std::size_t i = 0; i + 1 < text.size(); ++i) {
            const int d = hex_digit(text[i]);
            if (d < 0) {
                *error = "bad hex literal '" + std::string(text) + "'";
                return false;
            }
            v = v * 16 + d;
        }
        *out = v;
        return true;
    }
    if ((suffix == 'b' || suffix == 'B') && text.size() > 1) {
        bool binary = true;
        long v = 0;
        for (std::size_t i = 0; i + 1 < text.size(); ++i) {
            if (text[i] != '0' && text[i] != '1') {
                binary = false;
                break;
            }
            v = v * 2 + (text[i] - '0');
        }
        if (binary) {
            *out = v;
            return true;
        }
        *error = "bad binary literal '" + std::string(text) + "'";
        return false;
    }
    long v = 0;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            *error = "bad number '" + std::string(text) + "'";
            return false;
        }
        v = v * 10 + (c - '0');
        if (v > 0xFFFFFF) break;
    }
    *out = v;
    return true;
}

}  // namespace

bool lex_line(std::string_view line, std::vector<Token>& out, std::string* error) {
    out.clear();
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == ';') break;
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        const std::size_t col = i + 1;
        auto push = [&](Tok k) {
            out.push_back({k, std::string(1, c), 0, col});
            ++i;
        };
        switch (c) {
            case ',': push(Tok::Comma); continue;
            case '#': push(Tok::Hash); continue;
            case '@': push(Tok::At); continue;
            case '/': push(Tok::Slash); continue;
            case '+': push(Tok::Plus); continue;
            case '-': push(Tok::Minus); continue;
            case ':': push(Tok::Colon); continue;
            case '.': push(Tok::Dot); continue;
            case '$': push(Tok::Dollar); continue;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < line.size() &&
                   (is_ident_char(line[j]) || ((line[j] == 'x' || line[j] == 'X') && j == i + 1)))
                ++j;
            long value = 0;
            if (!parse_number(line.substr(i, j - i), &value, error)) return false;
            out.push_back({Tok::Number, std::string(line.substr(i, j - i)), value, col});
            i = j;
            continue;
        }
        if (is_ident_start(c)) {
            std::size_t j = i;
            while (j < line.size() && is_ident_char(line[j])) ++j;
            std::string text(line.substr(i, j - i));
            for (char& ch : text) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
            out.push_back({Tok::Ident, std::move(text), 0, col});
            i = j;
            continue;
        }
        *error = std::string("unexpected character '") + c + "'";
        return false;
    }
    out.push_back({Tok::End, "", 0, line.size() + 1});
    return true;
}

}  // namespace wiperbench::asm51
