#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "wiperbench/sim/time.hpp"

namespace wiperbench::sim {

enum class Logic : std::uint8_t { Low = 0, High = 1 };

// A net carries either a logic state (digital) or a voltage-like float
// (analog). Analog nets are piecewise constant between change events.
using Level = std::variant<Logic, double>;

using NetId = std::uint32_t;

struct Event {
    SimTime at;
    NetId net = 0;
    Level new_level;
};

struct TracePoint {
    SimTime at;
    Level value;
};

// Append-only change log of one net. The first point is the level at tick 0;
// timestamps are strictly increasing. Same-tick glitches collapse to the
// final value, so consecutive points always differ.
struct Trace {
    std::string net;
    bool digital = true;
    std::vector<TracePoint> points;

    // Value of the last point with at <= t; the tick-0 point if t precedes
    // everything. Throws on an empty trace.
    const Level& level_at(SimTime t) const;
};

struct SimError : std::logic_error {
    using std::logic_error::logic_error;
};

struct Pulse {
    SimTime rise;
    SimTime width;
};

// Every complete high pulse (rise followed by fall) of a digital trace whose
// rise and fall both lie inside [begin, end], in time order. A trailing pulse
// whose fall is past the window is omitted, as is a high segment already in
// progress at the window start.
std::vector<Pulse> measure_pulses(const Trace& trace, SimTime begin, SimTime end);

// Deterministic single-threaded discrete-event scheduler. Events at equal
// timestamps are delivered in insertion order. One kernel instance owns all
// of its nets, traces and queue; independent instances share nothing.
class Kernel {
public:
    using Listener = std::function<void(SimTime, const Level&)>;

    NetId add_digital(std::string name, Logic reset_level);
    NetId add_analog(std::string name, double reset_level);

    NetId id(std::string_view name) const;
    const std::string& net_name(NetId n) const { return net(n).name; }
    std::size_t net_count() const { return nets_.size(); }

    // Called after each actual level change of the net, inside run_until.
    // Listeners may schedule further events at or after the current time.
    void on_change(NetId n, Listener fn);

    // dst repeats every change of src at the same timestamp. Used to expose
    // one signal under a second name (e.g. the CPU pin net feeding a
    // peripheral input); the forwarder counts as dst's single driver.
    void alias(NetId src, NetId dst);

    // Queue a level change. Scheduling before the current clock is a
    // simulation bug and throws SimError.
    void schedule(const Event& e);

    // Deliver every queued event with at <= horizon in (timestamp, insertion)
    // order, then advance the clock to horizon.
    void run_until(SimTime horizon);

    SimTime now() const { return now_; }

    const Level& level(NetId n) const { return net(n).level; }
    const Trace& trace(NetId n) const { return net(n).trace; }
    std::vector<const Trace*> all_traces() const;

private:
    struct Net {
        std::string name;
        bool digital = true;
        Level level;
        Trace trace;
        std::vector<Listener> listeners;
    };
    struct Queued {
        SimTime at;
        std::uint64_t seq = 0;
        NetId net = 0;
        Level level;
    };
    struct QueuedAfter {
        bool operator()(const Queued& a, const Queued& b) const {
            if (a.at != b.at) return b.at < a.at;
            return b.seq < a.seq;
        }
    };

    NetId add_net(std::string name, bool digital, Level reset);
    const Net& net(NetId n) const;
    Net& net(NetId n);
    void apply(const Queued& q);

    std::vector<Net> nets_;
    std::unordered_map<std::string, NetId> by_name_;
    std::priority_queue<Queued, std::vector<Queued>, QueuedAfter> queue_;
    std::uint64_t next_seq_ = 0;
    SimTime now_{};
};

}  // namespace wiperbench::sim
