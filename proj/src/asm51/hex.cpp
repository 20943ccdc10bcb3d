#include "wiperbench/asm51/hex.hpp"

#include <algorithm>
#include <cstdio>

namespace wiperbench::asm51 {

HexError::HexError(int record_, const std::string& msg)
    : std::runtime_error("record " + std::to_string(record_) + ": " + msg),
      record(record_) {}

std::string emit_hex(const ObjectImage& image) {
    std::string out;
    char buf[16];
    for (const auto& [start, data] : image.runs()) {
        for (std::size_t off = 0; off < data.size(); off += 16) {
            const std::size_t n = std::min<std::size_t>(16, data.size() - off);
            const unsigned addr = start + static_cast<unsigned>(off);
            unsigned sum = static_cast<unsigned>(n) + (addr >> 8) + (addr & 0xFF);
            std::snprintf(buf, sizeof buf, ":%02X%04X00",
                          static_cast<unsigned>(n), addr);
            out += buf;
            for (std::size_t k = 0; k < n; ++k) {
                const std::uint8_t b = data[off + k];
                sum += b;
                std::snprintf(buf, sizeof buf, "%02X", b);
                out += buf;
            }
            std::snprintf(buf, sizeof buf, "%02X\n", (0x100 - (sum & 0xFF)) & 0xFF);
            out += buf;
        }
    }
    out += ":00000001FF\n";
    return out;
}

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
}

}  // namespace

ObjectImage parse_hex(std::string_view text) {
    ObjectImage image;
    int record = 0;
    bool saw_eof = false;
    long prev_end = -1;

    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;

        ++record;
        if (saw_eof) throw HexError(record, "data after the end-of-file record");
        if (line[0] != ':') throw HexError(record, "missing ':' start code");
        if (line.size() < 11 || (line.size() - 1) % 2 != 0)
            throw HexError(record, "record length is not a whole number of bytes");

        std::vector<std::uint8_t> bytes;
        bytes.reserve((line.size() - 1) / 2);
        for (std::size_t i = 1; i < line.size(); i += 2) {
            const int hi = hex_digit(line[i]);
            const int lo = hex_digit(line[i + 1]);
            if (hi < 0 || lo < 0) throw HexError(record, "non-hex character");
            bytes.push_back(static_cast<std::uint8_t>(hi * 16 + lo));
        }

        const unsigned count = bytes[0];
        if (bytes.size() != count + 5u)
            throw HexError(record, "byte count does not match record length");
        unsigned sum = 0;
        for (std::uint8_t b : bytes) sum += b;
        if (sum & 0xFF) throw HexError(record, "checksum mismatch");

        const unsigned addr = static_cast<unsigned>(bytes[1]) << 8 | bytes[2];
        const unsigned type = bytes[3];
        if (type == 1) {
            if (count != 0) throw HexError(record, "end-of-file record carries data");
            saw_eof = true;
            continue;
        }
        if (type != 0) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "unsupported record type %02X", type);
            throw HexError(record, buf);
        }
        if (count == 0) throw HexError(record, "empty data record");
        if (count > 16) throw HexError(record, "data record longer than 16 bytes");
        if (static_cast<long>(addr) < prev_end)
            throw HexError(record, "addresses not in ascending order");
        prev_end = static_cast<long>(addr) + count;
        if (prev_end > 0x10000) throw HexError(record, "record runs past 0xFFFF");
        for (unsigned k = 0; k < count; ++k)
            image.bytes[static_cast<std::uint16_t>(addr + k)] = bytes[4 + k];
    }
    if (!saw_eof) throw HexError(record + 1, "missing end-of-file record");
    return image;
}

}  // namespace wiperbench::asm51
