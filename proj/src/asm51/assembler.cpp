#include "wiperbench/asm51/assembler.hpp"

#include <cstdio>
#include <optional>

#include "wiperbench/asm51/lexer.hpp"
#include "wiperbench/mcs51/opcodes.hpp"

namespace wiperbench::asm51 {

using mcs51::Arg;
using mcs51::Op;
using mcs51::OpcodeInfo;
using mcs51::op_name;
using mcs51::opcode_info;

const std::map<std::string, int>& sfr_byte_symbols() {
    static const std::map<std::string, int> table = {
        {"P0", 0x80},  {"SP", 0x81},   {"DPL", 0x82},  {"DPH", 0x83},
        {"PCON", 0x87}, {"TCON", 0x88}, {"TMOD", 0x89}, {"TL0", 0x8A},
        {"TL1", 0x8B}, {"TH0", 0x8C},  {"TH1", 0x8D},  {"P1", 0x90},
        {"SCON", 0x98}, {"SBUF", 0x99}, {"P2", 0xA0},   {"IE", 0xA8},
        {"P3", 0xB0},  {"IP", 0xB8},   {"PSW", 0xD0},  {"ACC", 0xE0},
        {"B", 0xF0},
    };
    return table;
}

const std::map<std::string, int>& sfr_bit_symbols() {
    static const std::map<std::string, int> table = {
        // TCON
        {"IT0", 0x88}, {"IE0", 0x89}, {"IT1", 0x8A}, {"IE1", 0x8B},
        {"TR0", 0x8C}, {"TF0", 0x8D}, {"TR1", 0x8E}, {"TF1", 0x8F},
        // SCON
        {"RI", 0x98}, {"TI", 0x99},
        // IE
        {"EX0", 0xA8}, {"ET0", 0xA9}, {"EX1", 0xAA}, {"ET1", 0xAB},
        {"ES", 0xAC}, {"EA", 0xAF},
        // P3 alternate functions
        {"RXD", 0xB0}, {"TXD", 0xB1}, {"INT0", 0xB2}, {"INT1", 0xB3},
        {"T0", 0xB4}, {"T1", 0xB5},
        // PSW
        {"P", 0xD0}, {"OV", 0xD2}, {"RS0", 0xD3}, {"RS1", 0xD4},
        {"F0", 0xD5}, {"AC", 0xD6}, {"CY", 0xD7},
    };
    return table;
}

namespace {

struct WrittenOperand {
    enum class Kind {
        A, AB, C, Rn, AtRi, AtDptr, AtADptr, AtAPc, Dptr, Imm, Expr,
    };
    Kind kind = Kind::Expr;
    bool negated = false;  // written as /bit
    bool dotted = false;   // written as base.index
    int reg = 0;
    std::vector<Token> expr;  // expression tokens (the base when dotted)
    long dot_index = 0;
};

struct Stmt {
    enum class Kind { Empty, Instr, Org, Equ, Db, End };
    Kind kind = Kind::Empty;
    int line = 0;
    std::string label;
    std::string mnemonic;
    std::string equ_name;
    std::vector<WrittenOperand> ops;
    std::vector<std::vector<Token>> exprs;  // ORG/EQU: one, DB: many
    std::uint16_t addr = 0;
    std::uint8_t opcode = 0;  // resolved instruction row
};

bool is_reg_name(const std::string& t, int* n) {
    if (t.size() == 2 && t[0] == 'R' && t[1] >= '0' && t[1] <= '7') {
        *n = t[1] - '0';
        return true;
    }
    return false;
}

class Assembler {
public:
    AsmResult run(std::string_view source) {
        for (const auto& [name, value] : sfr_byte_symbols()) symbols_[name] = value;
        parse_and_size(source);
        encode();
        AsmResult out;
        out.image = std::move(image_);
        out.errors = std::move(errors_);
        for (const auto& [name, value] : user_symbols_)
            out.symbols[name] = static_cast<std::uint16_t>(value);
        return out;
    }

private:
    void error(int line, std::string msg) { errors_.push_back({line, std::move(msg)}); }

    // ---- expression evaluation ----------------------------------------

    std::optional<long> eval(const std::vector<Token>& toks, std::uint16_t stmt_addr,
                             int line, bool bit_context) {
        std::size_t i = 0;
        auto primary = [&]() -> std::optional<long> {
            long sign = 1;
            while (i < toks.size() &&
                   (toks[i].kind == Tok::Minus || toks[i].kind == Tok::Plus)) {
                if (toks[i].kind == Tok::Minus) sign = -sign;
                ++i;
            }
            if (i >= toks.size()) {
                error(line, "expression ends unexpectedly");
                return std::nullopt;
            }
            const Token& t = toks[i];
            if (t.kind == Tok::Number) {
                ++i;
                return sign * t.value;
            }
            if (t.kind == Tok::Dollar) {
                ++i;
                return sign * long(stmt_addr);
            }
            if (t.kind == Tok::Ident) {
                ++i;
                if (bit_context) {
                    auto bit = sfr_bit_symbols().find(t.text);
                    if (bit != sfr_bit_symbols().end()) return sign * long(bit->second);
                }
                auto it = symbols_.find(t.text);
                if (it == symbols_.end()) {
                    error(line, "undefined symbol '" + t.text + "'");
                    return std::nullopt;
                }
                return sign * long(it->second);
            }
            error(line, "expected a number or symbol in expression");
            return std::nullopt;
        };

        auto value = primary();
        if (!value) return std::nullopt;
        while (i < toks.size()) {
            const Tok op = toks[i].kind;
            if (op != Tok::Plus && op != Tok::Minus) {
                error(line, "unexpected token in expression");
                return std::nullopt;
            }
            ++i;
            auto rhs = primary();
            if (!rhs) return std::nullopt;
            value = op == Tok::Plus ? *value + *rhs : *value - *rhs;
        }
        return value;
    }

    std::optional<long> eval_bit(const WrittenOperand& w, std::uint16_t stmt_addr, int line) {
        if (!w.dotted) return eval(w.expr, stmt_addr, line, /*bit_context=*/true);
        auto base = eval(w.expr, stmt_addr, line, /*bit_context=*/false);
        if (!base) return std::nullopt;
        if (*base >= 0x20 && *base <= 0x2F) return (*base - 0x20) * 8 + w.dot_index;
        if (*base >= 0x80 && *base <= 0xF8 && *base % 8 == 0)
            return *base + w.dot_index;
        char buf[64];
        std::snprintf(buf, sizeof buf, "0x%02lX is not a bit-addressable byte", *base);
        error(line, buf);
        return std::nullopt;
    }

    // ---- statement parsing ---------------------------------------------

    // Collects expression tokens up to the next top-level comma.
    std::vector<Token> take_expr(const std::vector<Token>& toks, std::size_t& i) {
        std::vector<Token> out;
        while (i < toks.size() && toks[i].kind != Tok::Comma && toks[i].kind != Tok::End)
            out.push_back(toks[i++]);
        return out;
    }

    bool parse_operand(const std::vector<Token>& toks, std::size_t& i, int line,
                       WrittenOperand& out) {
        using K = WrittenOperand::Kind;
        if (i >= toks.size() || toks[i].kind == Tok::End) {
            error(line, "missing operand");
            return false;
        }
        if (toks[i].kind == Tok::At) {
            ++i;
            if (i >= toks.size() || toks[i].kind != Tok::Ident) {
                error(line, "expected register after '@'");
                return false;
            }
            const std::string name = toks[i].text;
            ++i;
            int n = 0;
            if (is_reg_name(name, &n)) {
                if (n > 1) {
                    error(line, "only @R0 and @R1 can address indirectly");
                    return false;
                }
                out.kind = K::AtRi;
                out.reg = n;
                return true;
            }
            if (name == "DPTR") {
                out.kind = K::AtDptr;
                return true;
            }
            if (name == "A") {
                if (i + 1 < toks.size() && toks[i].kind == Tok::Plus &&
                    toks[i + 1].kind == Tok::Ident) {
                    const std::string& reg = toks[i + 1].text;
                    if (reg == "DPTR" || reg == "PC") {
                        out.kind = reg == "PC" ? K::AtAPc : K::AtADptr;
                        i += 2;
                        return true;
                    }
                }
                error(line, "expected @A+DPTR or @A+PC");
                return false;
            }
            error(line, "cannot address indirectly through '" + name + "'");
            return false;
        }
        if (toks[i].kind == Tok::Hash) {
            ++i;
            out.kind = K::Imm;
            out.expr = take_expr(toks, i);
            if (out.expr.empty()) {
                error(line, "missing immediate value after '#'");
                return false;
            }
            return true;
        }
        if (toks[i].kind == Tok::Slash) {
            ++i;
            out.negated = true;
            // falls through to the expression path below
        }
        // Bare register / keyword operands.
        if (!out.negated && toks[i].kind == Tok::Ident) {
            const std::string& name = toks[i].text;
            const bool alone = i + 1 >= toks.size() || toks[i + 1].kind == Tok::Comma ||
                               toks[i + 1].kind == Tok::End;
            int n = 0;
            if (alone) {
                if (name == "A") { out.kind = K::A; ++i; return true; }
                if (name == "AB") { out.kind = K::AB; ++i; return true; }
                if (name == "C") { out.kind = K::C; ++i; return true; }
                if (name == "DPTR") { out.kind = K::Dptr; ++i; return true; }
                if (is_reg_name(name, &n)) {
                    out.kind = K::Rn;
                    out.reg = n;
                    ++i;
                    return true;
                }
            }
        }
        out.kind = K::Expr;
        out.expr = take_expr(toks, i);
        if (out.expr.empty()) {
            error(line, "missing operand");
            return false;
        }
        // base.index bit syntax: a single dot splits base and bit index
        for (std::size_t d = 0; d < out.expr.size(); ++d) {
            if (out.expr[d].kind != Tok::Dot) continue;
            if (d == 0 || d + 2 != out.expr.size() ||
                out.expr[d + 1].kind != Tok::Number ||
                out.expr[d + 1].value < 0 || out.expr[d + 1].value > 7) {
                error(line, "bit syntax is BASE.n with n in 0..7");
                return false;
            }
            out.dotted = true;
            out.dot_index = out.expr[d + 1].value;
            out.expr.resize(d);
            break;
        }
        return true;
    }

    // ---- shape matching -------------------------------------------------

    static bool shape_matches(const WrittenOperand& w, Arg a, int row_reg) {
        using K = WrittenOperand::Kind;
        switch (a) {
            case Arg::None: return false;
            case Arg::A: return w.kind == K::A;
            case Arg::AB: return w.kind == K::AB;
            case Arg::C: return w.kind == K::C;
            case Arg::Rn: return w.kind == K::Rn && w.reg == row_reg;
            case Arg::AtRi: return w.kind == K::AtRi && w.reg == row_reg;
            case Arg::Dptr: return w.kind == K::Dptr;
            case Arg::AtDptr: return w.kind == K::AtDptr;
            case Arg::AtADptr: return w.kind == K::AtADptr;
            case Arg::AtAPc: return w.kind == K::AtAPc;
            case Arg::Imm:
            case Arg::Imm16: return w.kind == K::Imm;
            case Arg::Bit: return w.kind == K::Expr && !w.negated;
            case Arg::NotBit: return w.kind == K::Expr && w.negated;
            case Arg::Dir:
            case Arg::Rel:
            case Arg::Addr11:
            case Arg::Addr16:
                return w.kind == K::Expr && !w.negated && !w.dotted;
        }
        return false;
    }

    int find_row(const std::string& mnemonic, const std::vector<WrittenOperand>& ops) {
        for (int code = 0; code < 256; ++code) {
            const OpcodeInfo& info = opcode_info(static_cast<std::uint8_t>(code));
            if (!info.valid() || op_name(info.op) != mnemonic) continue;
            if (static_cast<std::size_t>(info.arg_count()) != ops.size()) continue;
            const Arg args[3] = {info.a1, info.a2, info.a3};
            bool ok = true;
            for (std::size_t k = 0; k < ops.size(); ++k)
                if (!shape_matches(ops[k], args[k], info.reg)) {
                    ok = false;
                    break;
                }
            if (ok) return code;
        }
        return -1;
    }

    // ---- pass one: parse, size, collect labels --------------------------

    void define_symbol(const std::string& name, long value, int line) {
        if (symbols_.count(name)) {
            error(line, "symbol '" + name + "' is already defined");
            return;
        }
        symbols_[name] = value;
        user_symbols_[name] = value;
    }

    void parse_and_size(std::string_view source) {
        std::size_t pos = 0;
        int line_no = 0;
        long pc = 0;
        bool ended = false;
        while (pos <= source.size() && !ended) {
            const std::size_t nl = source.find('\n', pos);
            const std::string_view line = source.substr(
                pos, nl == std::string_view::npos ? source.size() - pos : nl - pos);
            pos = nl == std::string_view::npos ? source.size() + 1 : nl + 1;
            ++line_no;

            std::vector<Token> toks;
            std::string lex_err;
            if (!lex_line(line, toks, &lex_err)) {
                error(line_no, lex_err);
                continue;
            }
            const std::size_t errors_before = errors_.size();

            Stmt st;
            st.line = line_no;
            std::size_t i = 0;

            if (toks[i].kind == Tok::Ident && toks[i + 1].kind == Tok::Colon) {
                st.label = toks[i].text;
                i += 2;
            }
            if (toks[i].kind == Tok::Ident && toks[i + 1].kind == Tok::Ident &&
                toks[i + 1].text == "EQU") {
                st.kind = Stmt::Kind::Equ;
                st.equ_name = toks[i].text;
                i += 2;
                st.exprs.push_back(take_expr(toks, i));
            } else if (toks[i].kind == Tok::Ident && toks[i].text == "ORG") {
                st.kind = Stmt::Kind::Org;
                ++i;
                st.exprs.push_back(take_expr(toks, i));
            } else if (toks[i].kind == Tok::Ident && toks[i].text == "DB") {
                st.kind = Stmt::Kind::Db;
                ++i;
                while (true) {
                    st.exprs.push_back(take_expr(toks, i));
                    if (st.exprs.back().empty()) {
                        error(line_no, "DB needs at least one value");
                        break;
                    }
                    if (toks[i].kind != Tok::Comma) break;
                    ++i;
                }
            } else if (toks[i].kind == Tok::Ident && toks[i].text == "END") {
                st.kind = Stmt::Kind::End;
                ++i;
            } else if (toks[i].kind == Tok::Ident) {
                st.kind = Stmt::Kind::Instr;
                st.mnemonic = toks[i].text;
                ++i;
                if (toks[i].kind != Tok::End) {
                    while (true) {
                        WrittenOperand w;
                        if (!parse_operand(toks, i, line_no, w)) break;
                        st.ops.push_back(std::move(w));
                        if (toks[i].kind != Tok::Comma) break;
                        ++i;
                    }
                }
            }
            if (st.kind != Stmt::Kind::Db && toks[i].kind != Tok::End &&
                errors_.size() == errors_before) {
                error(line_no, "trailing tokens after statement");
            }

            // pass-one actions
            if (!st.label.empty()) define_symbol(st.label, pc, line_no);
            switch (st.kind) {
                case Stmt::Kind::Equ: {
                    auto v = eval(st.exprs[0], static_cast<std::uint16_t>(pc), line_no, false);
                    if (v) define_symbol(st.equ_name, *v, line_no);
                    break;
                }
                case Stmt::Kind::Org: {
                    auto v = eval(st.exprs[0], static_cast<std::uint16_t>(pc), line_no, false);
                    if (v) {
                        if (*v < 0 || *v > 0xFFFF)
                            error(line_no, "ORG target out of range");
                        else
                            pc = *v;
                    }
                    break;
                }
                case Stmt::Kind::Db:
                    st.addr = static_cast<std::uint16_t>(pc);
                    pc += long(st.exprs.size());
                    break;
                case Stmt::Kind::Instr: {
                    st.addr = static_cast<std::uint16_t>(pc);
                    const int row = find_row(st.mnemonic, st.ops);
                    if (row < 0) {
                        error(line_no, "no " + st.mnemonic + " form takes these operands");
                    } else {
                        st.opcode = static_cast<std::uint8_t>(row);
                        pc += opcode_info(st.opcode).len;
                    }
                    break;
                }
                case Stmt::Kind::End:
                    ended = true;
                    break;
                case Stmt::Kind::Empty:
                    break;
            }
            if (pc > 0x10000) {
                error(line_no, "location counter ran past 0xFFFF");
                return;
            }
            stmts_.push_back(std::move(st));
        }
    }

    // ---- pass two: encode ------------------------------------------------

    void emit(std::uint16_t addr, std::uint8_t byte, int line) {
        if (!image_.bytes.emplace(addr, byte).second) {
            char buf[48];
            std::snprintf(buf, sizeof buf, "overlapping output at 0x%04X", addr);
            error(line, buf);
        }
    }

    void encode() {
        if (!errors_.empty()) return;  // sizes may be wrong, do not guess
        for (const Stmt& st : stmts_) {
            if (st.kind == Stmt::Kind::Db) {
                std::uint16_t a = st.addr;
                for (const auto& ex : st.exprs) {
                    auto v = eval(ex, st.addr, st.line, false);
                    if (v && (*v < -128 || *v > 255))
                        error(st.line, "DB value does not fit in a byte");
                    else if (v)
                        emit(a, static_cast<std::uint8_t>(*v & 0xFF), st.line);
                    ++a;
                }
                continue;
            }
            if (st.kind != Stmt::Kind::Instr) continue;
            encode_instr(st);
        }
    }

    void encode_instr(const Stmt& st) {
        const OpcodeInfo& info = opcode_info(st.opcode);
        const std::uint16_t after = static_cast<std::uint16_t>(st.addr + info.len);
        std::vector<std::uint8_t> bytes{st.opcode};
        const Arg args[3] = {info.a1, info.a2, info.a3};

        for (int k = 0; k < info.arg_count(); ++k) {
            const WrittenOperand& w = st.ops[static_cast<std::size_t>(k)];
            switch (args[k]) {
                case Arg::Dir: {
                    auto v = eval(w.expr, st.addr, st.line, false);
                    if (!v) return;
                    if (*v < 0 || *v > 0xFF) {
                        error(st.line, "direct address out of range");
                        return;
                    }
                    bytes.push_back(static_cast<std::uint8_t>(*v));
                    break;
                }
                case Arg::Imm: {
                    auto v = eval(w.expr, st.addr, st.line, false);
                    if (!v) return;
                    if (*v < -128 || *v > 255) {
                        error(st.line, "immediate does not fit in a byte");
                        return;
                    }
                    bytes.push_back(static_cast<std::uint8_t>(*v & 0xFF));
                    break;
                }
                case Arg::Imm16: {
                    auto v = eval(w.expr, st.addr, st.line, false);
                    if (!v) return;
                    if (*v < -32768 || *v > 0xFFFF) {
                        error(st.line, "immediate does not fit in 16 bits");
                        return;
                    }
                    bytes.push_back(static_cast<std::uint8_t>((*v >> 8) & 0xFF));
                    bytes.push_back(static_cast<std::uint8_t>(*v & 0xFF));
                    break;
                }
                case Arg::Bit:
                case Arg::NotBit: {
                    auto v = eval_bit(w, st.addr, st.line);
                    if (!v) return;
                    if (*v < 0 || *v > 0xFF) {
                        error(st.line, "bit address out of range");
                        return;
                    }
                    bytes.push_back(static_cast<std::uint8_t>(*v));
                    break;
                }
                case Arg::Rel: {
                    auto v = eval(w.expr, st.addr, st.line, false);
                    if (!v) return;
                    // distance wraps mod 64 KiB so a target printed as an
                    // absolute address always round-trips
                    const std::uint16_t delta =
                        static_cast<std::uint16_t>(*v - after);
                    if (delta > 0x007F && delta < 0xFF80) {
                        error(st.line, "branch target out of range");
                        return;
                    }
                    bytes.push_back(static_cast<std::uint8_t>(delta & 0xFF));
                    break;
                }
                case Arg::Addr11: {
                    auto v = eval(w.expr, st.addr, st.line, false);
                    if (!v) return;
                    if (*v < 0 || *v > 0xFFFF) {
                        error(st.line, "target out of range");
                        return;
                    }
                    if ((static_cast<std::uint16_t>(*v) ^ after) & 0xF800) {
                        error(st.line, "target outside the current 2 KiB page");
                        return;
                    }
                    bytes[0] = static_cast<std::uint8_t>(
                        (bytes[0] & 0x1F) | (((*v >> 8) & 7) << 5));
                    bytes.push_back(static_cast<std::uint8_t>(*v & 0xFF));
                    break;
                }
                case Arg::Addr16: {
                    auto v = eval(w.expr, st.addr, st.line, false);
                    if (!v) return;
                    if (*v < 0 || *v > 0xFFFF) {
                        error(st.line, "target out of range");
                        return;
                    }
                    bytes.push_back(static_cast<std::uint8_t>((*v >> 8) & 0xFF));
                    bytes.push_back(static_cast<std::uint8_t>(*v & 0xFF));
                    break;
                }
                default:
                    break;  // register operands add no bytes
            }
        }

        // MOV dir,dir stores the source byte first
        if (st.opcode == 0x85) std::swap(bytes[1], bytes[2]);

        std::uint16_t a = st.addr;
        for (std::uint8_t b : bytes) emit(a++, b, st.line);
    }

    std::map<std::string, long> symbols_;       // includes pre-seeded SFRs
    std::map<std::string, long> user_symbols_;  // labels and EQUs only
    std::vector<Stmt> stmts_;
    std::vector<AsmError> errors_;
    ObjectImage image_;
};

}  // namespace

AsmResult assemble(std::string_view source) { return Assembler{}.run(source); }

}  // namespace wiperbench::asm51
