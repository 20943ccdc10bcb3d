#pragma once

#include <optional>
#include <vector>

#include "wiperbench/sim/kernel.hpp"

namespace wiperbench::harness {

// Times at which an analog trace goes from below `threshold` to at or
// above it, restricted to crossings inside [begin, end]. One crossing per
// sweep cycle if the threshold sits near the top of the swing.
std::vector<sim::SimTime> rising_crossings(const sim::Trace& trace,
                                           double threshold, sim::SimTime begin,
                                           sim::SimTime end);

// Mean spacing of consecutive crossings in seconds. Needs at least
// `min_intervals` intervals (so min_intervals + 1 crossings), otherwise
// empty. The default of 3 rejects measurements taken before the motion
// has settled into a steady rhythm.
std::optional<double> mean_period_s(const std::vector<sim::SimTime>& crossings,
                                    std::size_t min_intervals = 3);

}  // namespace wiperbench::harness
