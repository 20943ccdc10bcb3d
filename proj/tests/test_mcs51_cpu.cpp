#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wiperbench/asm51/assembler.hpp"
#include "wiperbench/mcs51/cpu.hpp"

using namespace wiperbench;
using mcs51::Cpu;
using mcs51::CpuFault;

namespace {

Cpu make(const char* src) {
    auto r = asm51::assemble(src);
    for (const auto& e : r.errors) {
        CAPTURE(e.line);
        CAPTURE(e.message);
    }
    REQUIRE(r.ok());
    Cpu c;
    c.load_image(r.image);
    return c;
}

void run(Cpu& c, int steps) {
    for (int i = 0; i < steps; ++i) c.step();
}

constexpr std::uint8_t CY = 0x80, AC = 0x40, OV = 0x04, P = 0x01;

}  // namespace

TEST_CASE("reset state matches the data sheet") {
    Cpu c;
    CHECK(c.pc == 0);
    CHECK(c.sp() == 0x07);
    CHECK(c.acc() == 0);
    CHECK(c.psw() == 0);
    CHECK(c.port_latch(0) == 0xFF);
    CHECK(c.port_latch(3) == 0xFF);
    CHECK(c.dptr() == 0);
    for (auto b : c.iram) CHECK(b == 0);
}

TEST_CASE("ADD sets carry, aux carry, overflow and parity") {
    Cpu c = make("MOV A,#0x0F\nADD A,#0x01\n");
    run(c, 2);
    CHECK(c.acc() == 0x10);
    CHECK((c.psw() & AC) != 0);
    CHECK((c.psw() & CY) == 0);
    CHECK((c.psw() & OV) == 0);
    CHECK((c.psw() & P) == 1);  // 0x10 has one set bit

    c = make("MOV A,#0x7F\nADD A,#0x01\n");
    run(c, 2);
    CHECK(c.acc() == 0x80);
    CHECK((c.psw() & OV) != 0);  // positive + positive gave negative
    CHECK((c.psw() & CY) == 0);

    c = make("MOV A,#0xFF\nADD A,#0x01\n");
    run(c, 2);
    CHECK(c.acc() == 0x00);
    CHECK((c.psw() & CY) != 0);
    CHECK((c.psw() & AC) != 0);
    CHECK((c.psw() & OV) == 0);
}

TEST_CASE("ADDC folds the carry in") {
    Cpu c = make("SETB C\nMOV A,#0x10\nADDC A,#0x0F\n");
    run(c, 3);
    CHECK(c.acc() == 0x20);
}

TEST_CASE("SUBB subtracts with borrow semantics") {
    Cpu c = make("CLR C\nMOV A,#0x00\nSUBB A,#0x01\n");
    run(c, 3);
    CHECK(c.acc() == 0xFF);
    CHECK((c.psw() & CY) != 0);
    CHECK((c.psw() & AC) != 0);

    c = make("CLR C\nMOV A,#0x80\nSUBB A,#0x01\n");
    run(c, 3);
    CHECK(c.acc() == 0x7F);
    CHECK((c.psw() & OV) != 0);  // negative - positive gave positive
}

TEST_CASE("DA adjusts packed BCD sums") {
    // 49 + 38 = 87 in BCD
    Cpu c = make("MOV A,#0x49\nADD A,#0x38\nDA A\n");
    run(c, 3);
    CHECK(c.acc() == 0x87);
    CHECK((c.psw() & CY) == 0);

    // 90 + 20 = 110: carry out, A holds 0x10
    c = make("MOV A,#0x90\nADD A,#0x20\nDA A\n");
    run(c, 3);
    CHECK(c.acc() == 0x10);
    CHECK((c.psw() & CY) != 0);
}

TEST_CASE("MUL splits the product across A and B") {
    Cpu c = make("MOV A,#200\nMOV B,#5\nMUL AB\n");
    run(c, 3);
    CHECK(c.acc() == 0xE8);
    CHECK(c.b_reg() == 0x03);
    CHECK((c.psw() & OV) != 0);  // product over 255
    CHECK((c.psw() & CY) == 0);
}

TEST_CASE("DIV yields quotient and remainder, divide by zero only flags") {
    Cpu c = make("MOV A,#251\nMOV B,#18\nDIV AB\n");
    run(c, 3);
    CHECK(c.acc() == 13);
    CHECK(c.b_reg() == 17);
    CHECK((c.psw() & OV) == 0);

    c = make("MOV A,#77\nMOV B,#0\nDIV AB\n");
    run(c, 3);
    CHECK(c.acc() == 77);  // untouched
    CHECK(c.b_reg() == 0);
    CHECK((c.psw() & OV) != 0);
    CHECK((c.psw() & CY) == 0);
}

TEST_CASE("register banks follow the PSW RS bits") {
    Cpu c = make("MOV R0,#0x11\nMOV PSW,#0x08\nMOV R0,#0x22\n");
    run(c, 3);
    CHECK(c.iram[0x00] == 0x11);  // bank 0 R0
    CHECK(c.iram[0x08] == 0x22);  // bank 1 R0
    CHECK(c.reg(0) == 0x22);      // reg() honours the selected bank
}

TEST_CASE("bit space splits between IRAM 0x20 area and SFRs") {
    Cpu c = make("SETB 0x08\nSETB 0x0F\nSETB F0\n");
    run(c, 3);
    CHECK(c.iram[0x21] == 0x81);      // bits 8 and 15 live in byte 0x21
    CHECK((c.psw() & 0x20) != 0);     // F0 is PSW.5
}

TEST_CASE("JBC branches only on a set bit and clears it") {
    Cpu c = make(
        "SETB 0x10\n"
        "JBC 0x10,TAKEN\n"
        "MOV A,#1\n"
        "TAKEN: JBC 0x10,NOPE\n"
        "MOV A,#2\n"
        "NOPE: NOP\n");
    run(c, 4);
    CHECK(c.iram[0x22] == 0x00);  // bit 0x10 cleared by the first JBC
    CHECK(c.acc() == 2);          // second JBC fell through
}

TEST_CASE("stack pushes low byte then high and RET undoes it") {
    Cpu c = make("LCALL SUB\nNOP\nSUB: RET\n");
    c.step();  // LCALL
    CHECK(c.pc == 4);
    CHECK(c.sp() == 0x09);
    CHECK(c.iram[0x08] == 0x03);  // return address low
    CHECK(c.iram[0x09] == 0x00);  // return address high
    c.step();  // RET
    CHECK(c.pc == 3);
    CHECK(c.sp() == 0x07);
}

TEST_CASE("CJNE compares unsigned and writes carry") {
    Cpu c = make("MOV A,#5\nCJNE A,#9,DIFF\nDIFF: NOP\n");
    run(c, 2);
    CHECK((c.psw() & CY) != 0);  // 5 < 9

    c = make("MOV A,#9\nCJNE A,#5,DIFF\nDIFF: NOP\n");
    run(c, 2);
    CHECK((c.psw() & CY) == 0);
}

TEST_CASE("DJNZ loops the expected number of times") {
    Cpu c = make("MOV R2,#3\nLOOP: INC A\nDJNZ R2,LOOP\n");
    c.step();
    run(c, 6);  // three INC + three DJNZ
    CHECK(c.acc() == 3);
    CHECK(c.reg(2) == 0);
    CHECK(c.pc == 5);  // fell out of the loop
}

TEST_CASE("port reads see external pins, read-modify-write sees the latch") {
    Cpu c = make("MOV A,P1\nINC P1\n");
    c.set_input_pin(1, 0, false);
    c.step();
    CHECK(c.acc() == 0xFE);  // pin 0 pulled low externally
    c.step();
    // INC must have used the latch (0xFF), not the pin view (0xFE).
    CHECK(c.port_latch(1) == 0x00);
}

TEST_CASE("XCH, XCHD and SWAP shuffle the right nibbles") {
    Cpu c = make("MOV A,#0x12\nMOV 0x30,#0xAB\nXCH A,0x30\n");
    run(c, 3);
    CHECK(c.acc() == 0xAB);
    CHECK(c.iram[0x30] == 0x12);

    c = make("MOV R0,#0x30\nMOV 0x30,#0xAB\nMOV A,#0x12\nXCHD A,@R0\n");
    run(c, 4);
    CHECK(c.acc() == 0x1B);
    CHECK(c.iram[0x30] == 0xA2);

    c = make("MOV A,#0x5C\nSWAP A\n");
    run(c, 2);
    CHECK(c.acc() == 0xC5);
}

TEST_CASE("MOVC reads program memory") {
    Cpu c = make("ORG 0\nMOV DPTR,#TAB\nMOV A,#1\nMOVC A,@A+DPTR\nSJMP $\n"
                 "ORG 0x40\nTAB: DB 0x10,0x20,0x30\n");
    run(c, 3);
    CHECK(c.acc() == 0x20);
}

TEST_CASE("parity tracks the accumulator after every instruction") {
    Cpu c = make("MOV A,#0x01\nMOV A,#0x03\nMOV A,#0x07\n");
    c.step();
    CHECK((c.psw() & P) == 1);
    c.step();
    CHECK((c.psw() & P) == 0);
    c.step();
    CHECK((c.psw() & P) == 1);
}

TEST_CASE("cycle counts accumulate per instruction") {
    Cpu c = make("NOP\nMUL AB\nLJMP 6\nNOP\n");
    CHECK(c.step() == 1);
    CHECK(c.step() == 4);
    CHECK(c.step() == 2);
    CHECK(c.cycle_count == 7);
}

TEST_CASE("unsupported territory faults instead of guessing") {
    SUBCASE("reserved opcode") {
        Cpu c;
        c.rom[0] = 0xA5;
        CHECK_THROWS_AS(c.step(), CpuFault);
    }
    SUBCASE("MOVX") {
        Cpu c = make("MOVX A,@DPTR\n");
        CHECK_THROWS_AS(c.step(), CpuFault);
    }
    SUBCASE("serial buffer") {
        Cpu c = make("MOV A,SBUF\n");
        CHECK_THROWS_AS(c.step(), CpuFault);
    }
    SUBCASE("undefined SFR") {
        Cpu c = make("MOV A,0xC8\n");
        CHECK_THROWS_AS(c.step(), CpuFault);
    }
    SUBCASE("indirect access past IRAM") {
        Cpu c = make("MOV R0,#0x80\nMOV A,@R0\n");
        c.step();
        CHECK_THROWS_AS(c.step(), CpuFault);
    }
    SUBCASE("stack overflow") {
        Cpu c = make("MOV SP,#0x7F\nPUSH ACC\n");
        c.step();
        CHECK_THROWS_AS(c.step(), CpuFault);
    }
    SUBCASE("stack underflow") {
        Cpu c = make("MOV SP,#0x00\nPOP ACC\n");
        c.step();
        CHECK_THROWS_AS(c.step(), CpuFault);
    }
    SUBCASE("execution past ROM") {
        Cpu c;
        c.pc = 0x1000;
        CHECK_THROWS_AS(c.step(), CpuFault);
    }
    SUBCASE("instruction overruns ROM") {
        Cpu c;
        c.rom[0x0FFF] = 0x02;  // LJMP needs two more bytes
        c.pc = 0x0FFF;
        CHECK_THROWS_AS(c.step(), CpuFault);
    }
    SUBCASE("fault reports the faulting PC") {
        Cpu c = make("NOP\nMOVX A,@DPTR\n");
        c.step();
        try {
            c.step();
            FAIL("expected a fault");
        } catch (const CpuFault& e) {
            CHECK(e.pc == 1);
            CHECK(std::string(e.what()).find("0x0001") != std::string::npos);
        }
    }
}
