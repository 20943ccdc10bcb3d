#pragma once

#include <string>
#include <vector>

#include "wiperbench/asm51/image.hpp"
#include "wiperbench/harness/scenario.hpp"
#include "wiperbench/sim/kernel.hpp"

namespace wiperbench::harness {

struct AssertionOutcome {
    bool passed = false;
    std::string text;  // human-readable measured/expected line
};

// No timestamps or wall-clock figures in here: the report for a given
// scenario and firmware image is byte-stable across runs and machines.
struct RunReport {
    std::string scenario_name;
    bool passed = false;
    bool halted = false;        // CPU fault before the horizon
    std::string halt_reason;
    std::vector<AssertionOutcome> outcomes;
};

// Wires firmware, sensor board and servo onto `kernel`, applies the wetness
// schedule, runs to the horizon and evaluates the scenario's assertions.
// The caller keeps the kernel for trace export afterwards.
RunReport run_scenario(const Scenario& s, const asm51::ObjectImage& firmware,
                       sim::Kernel& kernel);

// One "[PASS] ..." or "[FAIL] ..." line per assertion plus a summary line.
std::string format_report(const RunReport& r);

}  // namespace wiperbench::harness
