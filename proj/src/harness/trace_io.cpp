#include "wiperbench/harness/trace_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace wiperbench::harness {

std::string format_double(double v) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

namespace {

std::string level_text(const sim::Level& level) {
    if (const auto* d = std::get_if<sim::Logic>(&level))
        return *d == sim::Logic::High ? "1" : "0";
    return format_double(std::get<double>(level));
}

// Traces sorted by net name: the stable export order for both formats.
std::vector<const sim::Trace*> sorted_traces(const sim::Kernel& k) {
    auto traces = k.all_traces();
    std::sort(traces.begin(), traces.end(),
              [](const sim::Trace* a, const sim::Trace* b) { return a->net < b->net; });
    return traces;
}

}  // namespace

std::string to_csv(const sim::Kernel& k) {
    struct Row {
        std::int64_t t;
        const std::string* net;
        std::string value;
    };
    std::vector<Row> rows;
    for (const sim::Trace* tr : sorted_traces(k))
        for (const sim::TracePoint& p : tr->points)
            rows.push_back({p.at.ns, &tr->net, level_text(p.value)});
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.t != b.t) return a.t < b.t;
        return *a.net < *b.net;
    });

    std::string out = "time_ns,net,value\n";
    for (const Row& r : rows) {
        out += std::to_string(r.t);
        out += ',';
        out += *r.net;
        out += ',';
        out += r.value;
        out += '\n';
    }
    return out;
}

std::string to_vcd(const sim::Kernel& k) {
    const auto traces = sorted_traces(k);
    auto id_of = [](std::size_t idx) {
        return std::string(1, static_cast<char>('!' + idx));
    };

    std::string out = "$timescale 1ns $end\n$scope module wiperbench $end\n";
    for (std::size_t i = 0; i < traces.size(); ++i) {
        out += traces[i]->digital ? "$var wire 1 " : "$var real 64 ";
        out += id_of(i) + " " + traces[i]->net + " $end\n";
    }
    out += "$upscope $end\n$enddefinitions $end\n";

    // merge all points into one (time, declaration index) ordered stream
    struct Change {
        std::int64_t t;
        std::size_t var;
        const sim::Level* level;
    };
    std::vector<Change> changes;
    for (std::size_t i = 0; i < traces.size(); ++i)
        for (const sim::TracePoint& p : traces[i]->points)
            changes.push_back({p.at.ns, i, &p.value});
    std::stable_sort(changes.begin(), changes.end(),
                     [](const Change& a, const Change& b) {
                         if (a.t != b.t) return a.t < b.t;
                         return a.var < b.var;
                     });

    std::int64_t cur_t = -1;
    for (const Change& c : changes) {
        if (c.t != cur_t) {
            out += "#" + std::to_string(c.t) + "\n";
            cur_t = c.t;
        }
        if (const auto* d = std::get_if<sim::Logic>(c.level)) {
            out += (*d == sim::Logic::High ? "1" : "0") + id_of(c.var) + "\n";
        } else {
            out += "r" + format_double(std::get<double>(*c.level)) + " " +
                   id_of(c.var) + "\n";
        }
    }
    return out;
}

std::vector<sim::Trace> parse_vcd(std::string_view text) {
    std::vector<sim::Trace> traces;
    std::unordered_map<std::string, std::size_t> by_id;
    std::int64_t cur_t = 0;
    bool in_defs = true;

    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (in_defs) {
            if (line.rfind("$var", 0) == 0) {
                std::istringstream ls(line);
                std::string var, kind, width, id, name, end;
                ls >> var >> kind >> width >> id >> name >> end;
                if (ls.fail() || end != "$end")
                    throw std::runtime_error("malformed $var line: " + line);
                by_id[id] = traces.size();
                sim::Trace t;
                t.net = name;
                t.digital = kind == "wire";
                traces.push_back(std::move(t));
            } else if (line.rfind("$enddefinitions", 0) == 0) {
                in_defs = false;
            }
            continue;
        }
        if (line[0] == '#') {
            cur_t = std::stoll(line.substr(1));
            continue;
        }
        if (line[0] == '0' || line[0] == '1') {
            auto it = by_id.find(line.substr(1));
            if (it == by_id.end())
                throw std::runtime_error("unknown VCD id in: " + line);
            traces[it->second].points.push_back(
                {{cur_t}, line[0] == '1' ? sim::Logic::High : sim::Logic::Low});
            continue;
        }
        if (line[0] == 'r') {
            const std::size_t sp = line.find(' ');
            if (sp == std::string::npos)
                throw std::runtime_error("malformed real change: " + line);
            double v = 0;
            const char* b = line.data() + 1;
            const char* e = line.data() + sp;
            const auto r = std::from_chars(b, e, v);
            if (r.ec != std::errc() || r.ptr != e)
                throw std::runtime_error("malformed real value: " + line);
            auto it = by_id.find(line.substr(sp + 1));
            if (it == by_id.end())
                throw std::runtime_error("unknown VCD id in: " + line);
            traces[it->second].points.push_back({{cur_t}, v});
            continue;
        }
        throw std::runtime_error("unparseable VCD line: " + line);
    }
    return traces;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("short write to " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace wiperbench::harness
