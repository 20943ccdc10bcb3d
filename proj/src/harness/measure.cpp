#include "wiperbench/harness/measure.hpp"

#include <variant>

namespace wiperbench::harness {

std::vector<sim::SimTime> rising_crossings(const sim::Trace& trace,
                                           double threshold, sim::SimTime begin,
                                           sim::SimTime end) {
    std::vector<sim::SimTime> out;
    bool have_prev = false;
    double prev = 0.0;
    for (const sim::TracePoint& p : trace.points) {
        const double v = std::get<double>(p.value);
        if (have_prev && prev < threshold && v >= threshold && p.at.ns >= begin.ns &&
            p.at.ns <= end.ns)
            out.push_back(p.at);
        prev = v;
        have_prev = true;
    }
    return out;
}

std::optional<double> mean_period_s(const std::vector<sim::SimTime>& crossings,
                                    std::size_t min_intervals) {
    if (crossings.size() < min_intervals + 1) return std::nullopt;
    const double span_ns =
        static_cast<double>(crossings.back().ns - crossings.front().ns);
    return span_ns / static_cast<double>(crossings.size() - 1) / 1e9;
}

}  // namespace wiperbench::harness
