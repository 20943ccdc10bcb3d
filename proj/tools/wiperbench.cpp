// Command-line front end: assemble, disassemble, run one rain scenario, or
// check a whole scenario directory against the wiper firmware.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wiperbench/asm51/assembler.hpp"
#include "wiperbench/asm51/disassembler.hpp"
#include "wiperbench/asm51/hex.hpp"
#include "wiperbench/harness/runner.hpp"
#include "wiperbench/harness/trace_io.hpp"
#include "wiperbench/sim/kernel.hpp"

namespace fs = std::filesystem;
using namespace wiperbench;

namespace {

bool ends_with_icase(const std::string& s, const std::string& suffix) {
    if (s.size() < suffix.size()) return false;
    for (std::size_t i = 0; i < suffix.size(); ++i) {
        const char a = s[s.size() - suffix.size() + i];
        const char b = suffix[i];
        if (std::tolower(static_cast<unsigned char>(a)) !=
            std::tolower(static_cast<unsigned char>(b)))
            return false;
    }
    return true;
}

// Firmware can be given as Intel HEX or as assembly source, which is
// assembled on the fly.
asm51::ObjectImage load_firmware(const std::string& path) {
    const std::string text = harness::read_text_file(path);
    if (ends_with_icase(path, ".a51") || ends_with_icase(path, ".asm")) {
        asm51::AsmResult r = asm51::assemble(text);
        if (!r.ok()) {
            for (const asm51::AsmError& e : r.errors)
                std::cerr << path << ":" << e.line << ": " << e.message << "\n";
            throw std::runtime_error("assembly of " + path + " failed");
        }
        return r.image;
    }
    return asm51::parse_hex(text);
}

void export_traces(const sim::Kernel& kernel, const std::string& dir,
                   const std::string& scenario_name, const std::string& format) {
    fs::create_directories(dir);
    const bool vcd = format == "vcd";
    const std::string body = vcd ? harness::to_vcd(kernel) : harness::to_csv(kernel);
    harness::write_text_file(dir + "/" + scenario_name + (vcd ? ".vcd" : ".csv"),
                             body);
}

int run_one(const std::string& scenario_path, const asm51::ObjectImage& firmware,
            const std::string& trace_dir, const std::string& format) {
    const harness::Scenario scn = harness::load_scenario_file(scenario_path);
    sim::Kernel kernel;
    const harness::RunReport report = harness::run_scenario(scn, firmware, kernel);
    std::cout << harness::format_report(report);
    if (!trace_dir.empty()) export_traces(kernel, trace_dir, scn.name, format);
    return report.passed ? 0 : 1;
}

int do_check(const std::string& dir, const std::string& firmware_path,
             const std::string& trace_dir, const std::string& format) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".scn")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw std::runtime_error("no .scn scenario files in " + dir);

    const asm51::ObjectImage firmware = load_firmware(firmware_path);
    int failures = 0;
    for (const fs::path& f : files) {
        const harness::Scenario scn = harness::load_scenario_file(f.string());
        sim::Kernel kernel;
        const harness::RunReport report =
            harness::run_scenario(scn, firmware, kernel);
        std::cout << harness::format_report(report) << "\n";
        if (!report.passed) ++failures;
        if (!trace_dir.empty()) export_traces(kernel, trace_dir, scn.name, format);
    }
    std::cout << files.size() << " scenarios, " << failures << " failed\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"8051 rain-wiper workbench: assembler, disassembler and "
                 "scenario co-simulation"};
    app.require_subcommand(1);

    const char* env_dir = std::getenv("WIPERBENCH_TRACE_DIR");
    const std::string default_trace_dir = env_dir ? env_dir : "";

    std::string asm_src, asm_out;
    CLI::App* cmd_asm = app.add_subcommand("asm", "Assemble 8051 source to Intel HEX");
    cmd_asm->add_option("src", asm_src, "assembly source file")->required();
    cmd_asm->add_option("-o,--output", asm_out, "output HEX file")->required();

    std::string dis_hex;
    CLI::App* cmd_dis = app.add_subcommand("disasm", "Disassemble an Intel HEX image");
    cmd_dis->add_option("hex", dis_hex, "HEX file")->required();

    std::string run_scn, run_fw;
    std::string run_dir = default_trace_dir, run_fmt = "csv";
    CLI::App* cmd_run = app.add_subcommand("run", "Run one scenario");
    cmd_run->add_option("scenario", run_scn, "scenario file")->required();
    cmd_run->add_option("--firmware", run_fw, "firmware HEX or .a51 source")
        ->required();
    cmd_run->add_option("--trace-dir", run_dir,
                        "write traces here (default $WIPERBENCH_TRACE_DIR)");
    cmd_run->add_option("--format", run_fmt, "trace format")
        ->check(CLI::IsMember({"csv", "vcd"}));

    std::string chk_dir, chk_fw = "firmware/wiper.a51";
    std::string chk_tdir = default_trace_dir, chk_fmt = "csv";
    CLI::App* cmd_chk =
        app.add_subcommand("check", "Run every .scn scenario in a directory");
    cmd_chk->add_option("scenario-dir", chk_dir, "directory of .scn files")
        ->required();
    cmd_chk->add_option("--firmware", chk_fw, "firmware HEX or .a51 source");
    cmd_chk->add_option("--trace-dir", chk_tdir,
                        "write traces here (default $WIPERBENCH_TRACE_DIR)");
    cmd_chk->add_option("--format", chk_fmt, "trace format")
        ->check(CLI::IsMember({"csv", "vcd"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*cmd_asm) {
            const std::string src = harness::read_text_file(asm_src);
            asm51::AsmResult r = asm51::assemble(src);
            if (!r.ok()) {
                for (const asm51::AsmError& e : r.errors)
                    std::cerr << asm_src << ":" << e.line << ": " << e.message
                              << "\n";
                return 1;
            }
            harness::write_text_file(asm_out, asm51::emit_hex(r.image));
            return 0;
        }
        if (*cmd_dis) {
            const asm51::ObjectImage img =
                asm51::parse_hex(harness::read_text_file(dis_hex));
            std::cout << asm51::disassemble(img);
            return 0;
        }
        if (*cmd_run) return run_one(run_scn, load_firmware(run_fw), run_dir, run_fmt);
        if (*cmd_chk) return do_check(chk_dir, chk_fw, chk_tdir, chk_fmt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
