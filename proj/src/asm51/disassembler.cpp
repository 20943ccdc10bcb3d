#include "wiperbench/asm51/disassembler.hpp"

#include <cstdio>
#include <map>

#include "wiperbench/asm51/assembler.hpp"
#include "wiperbench/mcs51/opcodes.hpp"

namespace wiperbench::asm51 {

using mcs51::Arg;
using mcs51::OpcodeInfo;
using mcs51::op_name;
using mcs51::opcode_info;

namespace {

std::string fmt(const char* f, unsigned v) {
    char buf[16];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

const std::map<int, std::string>& byte_names() {
    static const std::map<int, std::string> table = [] {
        std::map<int, std::string> t;
        for (const auto& [name, addr] : sfr_byte_symbols()) t[addr] = name;
        return t;
    }();
    return table;
}

const std::map<int, std::string>& bit_names() {
    static const std::map<int, std::string> table = [] {
        std::map<int, std::string> t;
        for (const auto& [name, addr] : sfr_bit_symbols()) t[addr] = name;
        return t;
    }();
    return table;
}

std::string dir_text(std::uint8_t addr) {
    auto it = byte_names().find(addr);
    return it != byte_names().end() ? it->second : fmt("0x%02X", addr);
}

std::string bit_text(std::uint8_t bit) {
    auto named = bit_names().find(bit);
    if (named != bit_names().end()) return named->second;
    if (bit >= 0x80) {
        auto base = byte_names().find(bit & 0xF8);
        if (base != byte_names().end())
            return base->second + "." + std::to_string(bit & 7);
    }
    return fmt("0x%02X", bit);
}

// One instruction starting at data[i]; emits into out and returns its
// length, or 0 when the bytes do not decode cleanly.
std::size_t render_instr(const std::vector<std::uint8_t>& data, std::size_t i,
                         std::uint16_t addr, std::string& out) {
    const std::uint8_t opc = data[i];
    const OpcodeInfo& info = opcode_info(opc);
    if (!info.valid() || i + info.len > data.size()) return 0;
    const std::uint8_t b1 = info.len > 1 ? data[i + 1] : 0;
    const std::uint8_t b2 = info.len > 2 ? data[i + 2] : 0;
    const std::uint16_t after = static_cast<std::uint16_t>(addr + info.len);

    // MOV dir,dir encodes source first; operand bytes otherwise follow
    // written order.
    std::uint8_t ob[2] = {b1, b2};
    if (opc == 0x85) std::swap(ob[0], ob[1]);
    int next_byte = 0;

    out += op_name(info.op);
    const Arg args[3] = {info.a1, info.a2, info.a3};
    for (int k = 0; k < info.arg_count(); ++k) {
        out += k == 0 ? " " : ",";
        switch (args[k]) {
            case Arg::None: break;
            case Arg::A: out += "A"; break;
            case Arg::AB: out += "AB"; break;
            case Arg::C: out += "C"; break;
            case Arg::Rn: out += fmt("R%u", info.reg); break;
            case Arg::AtRi: out += fmt("@R%u", info.reg); break;
            case Arg::Dptr: out += "DPTR"; break;
            case Arg::AtDptr: out += "@DPTR"; break;
            case Arg::AtADptr: out += "@A+DPTR"; break;
            case Arg::AtAPc: out += "@A+PC"; break;
            case Arg::Dir: out += dir_text(ob[next_byte++]); break;
            case Arg::Imm: out += "#" + fmt("0x%02X", ob[next_byte++]); break;
            case Arg::Imm16:
                out += "#" + fmt("0x%04X", unsigned(b1) << 8 | b2);
                next_byte += 2;
                break;
            case Arg::Bit: out += bit_text(ob[next_byte++]); break;
            case Arg::NotBit: out += "/" + bit_text(ob[next_byte++]); break;
            case Arg::Rel:
                out += fmt("0x%04X",
                           static_cast<std::uint16_t>(
                               after + std::int8_t(ob[next_byte++])));
                break;
            case Arg::Addr11:
                out += fmt("0x%04X", (after & 0xF800) |
                                         (std::uint16_t(opc >> 5) << 8) |
                                         ob[next_byte++]);
                break;
            case Arg::Addr16:
                out += fmt("0x%04X", unsigned(b1) << 8 | b2);
                next_byte += 2;
                break;
        }
    }
    return info.len;
}

}  // namespace

std::string disassemble(const ObjectImage& image) {
    std::string out;
    for (const auto& [start, data] : image.runs()) {
        out += "ORG " + fmt("0x%04X", start) + "\n";
        std::size_t i = 0;
        while (i < data.size()) {
            const std::uint16_t addr = static_cast<std::uint16_t>(start + i);
            std::string line;
            const std::size_t len = render_instr(data, i, addr, line);
            if (len == 0) {
                out += "    DB " + fmt("0x%02X", data[i]) + "\n";
                i += 1;
                continue;
            }
            out += "    " + line + "\n";
            i += len;
        }
    }
    return out;
}

}  // namespace wiperbench::asm51
