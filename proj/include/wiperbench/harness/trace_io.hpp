#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wiperbench/sim/kernel.hpp"

namespace wiperbench::harness {

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

// Every net in one file: header "time_ns,net,value", one row per trace
// point, sorted by (time, net name). Digital levels print as 0/1.
std::string to_csv(const sim::Kernel& k);

// Deterministic VCD: 1 ns timescale, wire vars for digital nets, real
// vars for analog ones, no date or version headers, so two identical runs
// serialize byte-identically.
std::string to_vcd(const sim::Kernel& k);

// Reads back VCD produced by to_vcd; traces come out in declaration order
// with the same point lists the kernel held.
std::vector<sim::Trace> parse_vcd(std::string_view text);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace wiperbench::harness
