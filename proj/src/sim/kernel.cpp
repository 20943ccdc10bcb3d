#include "wiperbench/sim/kernel.hpp"

#include <algorithm>

namespace wiperbench::sim {

const Level& Trace::level_at(SimTime t) const {
    if (points.empty())
        throw SimError("level_at on empty trace for net " + net);
    // last point with at <= t
    auto it = std::upper_bound(points.begin(), points.end(), t,
                               [](SimTime v, const TracePoint& p) { return v < p.at; });
    if (it == points.begin())
        return points.front().value;
    return std::prev(it)->value;
}

std::vector<Pulse> measure_pulses(const Trace& trace, SimTime begin, SimTime end) {
    if (!trace.digital)
        throw SimError("measure_pulses on analog net " + trace.net);
    std::vector<Pulse> out;
    const auto& pts = trace.points;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (std::get<Logic>(pts[i].value) != Logic::High)
            continue;
        SimTime rise = pts[i].at;
        if (rise < begin)
            continue;
        if (rise > end)
            break;
        // change points alternate, so the next point (if any) is the fall
        if (i + 1 >= pts.size() || pts[i + 1].at > end)
            break;  // truncated trailing pulse
        out.push_back({rise, pts[i + 1].at - rise});
    }
    return out;
}

NetId Kernel::add_net(std::string name, bool digital, Level reset) {
    if (by_name_.count(name))
        throw SimError("duplicate net name " + name);
    NetId id = static_cast<NetId>(nets_.size());
    Net n;
    n.name = name;
    n.digital = digital;
    n.level = reset;
    n.trace.net = name;
    n.trace.digital = digital;
    n.trace.points.push_back({SimTime{0}, reset});
    by_name_.emplace(std::move(name), id);
    nets_.push_back(std::move(n));
    return id;
}

NetId Kernel::add_digital(std::string name, Logic reset_level) {
    return add_net(std::move(name), true, Level(reset_level));
}

NetId Kernel::add_analog(std::string name, double reset_level) {
    return add_net(std::move(name), false, Level(reset_level));
}

NetId Kernel::id(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end())
        throw SimError("unknown net " + std::string(name));
    return it->second;
}

const Kernel::Net& Kernel::net(NetId n) const {
    if (n >= nets_.size())
        throw SimError("net id out of range");
    return nets_[n];
}

Kernel::Net& Kernel::net(NetId n) {
    if (n >= nets_.size())
        throw SimError("net id out of range");
    return nets_[n];
}

void Kernel::on_change(NetId n, Listener fn) {
    net(n).listeners.push_back(std::move(fn));
}

void Kernel::alias(NetId src, NetId dst) {
    if (net(src).digital != net(dst).digital)
        throw SimError("alias between digital and analog nets");
    on_change(src, [this, dst](SimTime t, const Level& v) {
        schedule({t, dst, v});
    });
}

void Kernel::schedule(const Event& e) {
    const Net& n = net(e.net);
    if (n.digital != std::holds_alternative<Logic>(e.new_level))
        throw SimError("level kind mismatch on net " + n.name);
    if (e.at < now_)
        throw SimError("event scheduled in the past on net " + n.name);
    queue_.push({e.at, next_seq_++, e.net, e.new_level});
}

void Kernel::apply(const Queued& q) {
    Net& n = net(q.net);
    if (n.level == q.level)
        return;
    n.level = q.level;
    auto& pts = n.trace.points;
    if (!pts.empty() && pts.back().at == q.at) {
        // same-tick glitch: the trace keeps only the final value per tick
        pts.back().value = q.level;
        if (pts.size() >= 2 && pts[pts.size() - 2].value == q.level)
            pts.pop_back();
    } else {
        pts.push_back({q.at, q.level});
    }
    for (auto& fn : n.listeners)
        fn(q.at, n.level);
}

void Kernel::run_until(SimTime horizon) {
    if (horizon < now_)
        throw SimError("run_until horizon precedes current clock");
    while (!queue_.empty() && queue_.top().at <= horizon) {
        Queued q = queue_.top();
        queue_.pop();
        now_ = q.at;
        apply(q);
    }
    now_ = horizon;
}

std::vector<const Trace*> Kernel::all_traces() const {
    std::vector<const Trace*> out;
    out.reserve(nets_.size());
    for (const auto& n : nets_)
        out.push_back(&n.trace);
    return out;
}

}  // namespace wiperbench::sim
