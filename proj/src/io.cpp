#include "cubefire/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace cubefire::io {

namespace {

int read_dimension(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
        throw FormatError("document needs an integer field \"n\"");
    }
    const auto n = j["n"].get<std::int64_t>();
    if (n < 0 || n > kMaxDimension) {
        throw FormatError("\"n\" must be in [0, " + std::to_string(kMaxDimension) + "]");
    }
    return static_cast<int>(n);
}

std::vector<std::vector<Vertex>> read_sets(const Json& j, int n, bool unique_across) {
    if (!j.contains("sets") || !j["sets"].is_array()) throw FormatError("document needs an array \"sets\"");
    std::unordered_set<Vertex> seen;
    std::vector<std::vector<Vertex>> out;
    for (const auto& cls : j["sets"]) {
        if (!cls.is_array()) throw FormatError("every entry of \"sets\" must be an array");
        std::vector<Vertex> vs;
        std::unordered_set<Vertex> local;
        for (const auto& x : cls) {
            if (!x.is_number_integer()) throw FormatError("vertices must be integers");
            const auto v = x.get<std::int64_t>();
            if (v < 0 || static_cast<std::uint64_t>(v) >= vertex_count(n)) {
                throw FormatError("vertex " + std::to_string(v) + " out of range for H_" + std::to_string(n));
            }
            const auto vv = static_cast<Vertex>(v);
            auto& pool = unique_across ? seen : local;
            if (!pool.insert(vv).second) throw FormatError("vertex " + std::to_string(v) + " listed twice");
            vs.push_back(vv);
        }
        std::sort(vs.begin(), vs.end());
        out.push_back(std::move(vs));
    }
    return out;
}

std::string quoted(Vertex v, int n) { return "\"" + binary_label(v, n) + "\""; }

Json vertex_lists(const std::vector<std::vector<Vertex>>& sets) {
    Json arr = Json::array();
    for (const auto& s : sets) arr.push_back(s);
    return arr;
}

}  // namespace

Json to_json(const LeftCyclicPartition& p) {
    auto sorted = p;
    sorted.canonicalize();
    Json j;
    j["n"] = p.n;
    j["k"] = p.order();
    j["sets"] = vertex_lists(sorted.sets);
    return j;
}

LeftCyclicPartition partition_from_json(const Json& j) {
    const int n = read_dimension(j);
    if (!j.contains("k") || !j["k"].is_number_integer()) throw FormatError("document needs an integer field \"k\"");
    LeftCyclicPartition p{n, read_sets(j, n, true)};
    if (j["k"].get<std::int64_t>() != static_cast<std::int64_t>(p.order())) {
        throw FormatError("\"k\" does not match the number of sets");
    }
    return p;
}

Json to_json(const Orientation& o) {
    Json j;
    j["n"] = o.dimension();
    j["edges"] = o.edge_bits();
    return j;
}

Orientation orientation_from_json(const Json& j) {
    const int n = read_dimension(j);
    if (!j.contains("edges") || !j["edges"].is_array()) throw FormatError("document needs an array \"edges\"");
    std::vector<std::uint8_t> bits;
    for (const auto& b : j["edges"]) {
        if (!b.is_number_integer() || (b.get<std::int64_t>() != 0 && b.get<std::int64_t>() != 1)) {
            throw FormatError("edge entries must be 0 or 1");
        }
        bits.push_back(static_cast<std::uint8_t>(b.get<int>()));
    }
    try {
        return Orientation::from_edge_bits(n, bits);
    } catch (const DomainError& e) {
        throw FormatError(e.what());
    }
}

BlockSchedule schedule_from_json(const Json& j, int n) {
    if (!j.is_object()) throw FormatError("schedule must be an object");
    if (j.contains("n") && read_dimension(j) != n) throw FormatError("schedule dimension mismatch");
    BlockSchedule s{read_sets(j, n, false)};
    if (s.sets.empty()) throw FormatError("schedule needs at least one set");
    for (const auto& w : s.sets) {
        if (w.empty()) throw FormatError("schedule sets must be non-empty");
    }
    return s;
}

Json to_json(const PeriodCensus& c) {
    Json j;
    j["n"] = c.n;
    j["total"] = c.total;
    Json entries = Json::array();
    for (const auto& [key, count] : c.entries) {
        Json e;
        e["period"] = key.period;
        e["transient"] = key.transient;
        e["count"] = count;
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

Json to_json(const ValidationReport& r, int n) {
    Json j;
    j["valid"] = r.valid;
    Json vs = Json::array();
    for (const auto& v : r.violations) {
        Json e;
        e["kind"] = to_string(v.kind);
        e["class"] = v.class_index ? Json(*v.class_index) : Json(nullptr);
        e["vertex"] = v.vertex;
        if (v.other) e["other"] = *v.other;
        e["message"] = v.describe(n);
        vs.push_back(std::move(e));
    }
    j["violations"] = std::move(vs);
    return j;
}

Json to_json(const EvolutionResult& r) {
    Json j;
    j["status"] = r.determined() ? "determined" : "undetermined";
    j["n"] = r.final_state.dimension();
    j["steps_executed"] = r.steps_executed;
    j["total_chips"] = r.total_chips;
    if (r.determined()) {
        j["transient"] = r.transient;
        j["period"] = r.period;
        j["orientation_transient"] = r.orientation_transient ? Json(*r.orientation_transient) : Json(nullptr);
        j["orientation_period"] = r.orientation_period ? Json(*r.orientation_period) : Json(nullptr);
        j["firing_sets"] = vertex_lists(r.firing_sets);
    } else {
        j["trajectory"] = vertex_lists(r.trajectory);
    }
    return j;
}

Json to_json(const SearchOutcome& s, int n, std::size_t k) {
    Json j;
    j["n"] = n;
    j["k"] = k;
    j["found"] = s.found;
    j["nodes_explored"] = s.nodes_explored;
    j["witness"] = s.witness ? to_json(*s.witness) : Json(nullptr);
    return j;
}

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
}

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::string to_dot(const LeftCyclicPartition& p) {
    auto sorted = p;
    sorted.canonicalize();
    std::ostringstream out;
    out << "graph H" << p.n << " {\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < sorted.order(); ++i) {
        out << "  subgraph cluster_" << i << " {\n";
        out << "    label=\"S_" << i << "\";\n";
        for (Vertex v : sorted.sets[i]) out << "    " << quoted(v, p.n) << ";\n";
        out << "  }\n";
    }
    for (int d = 0; d < p.n; ++d) {
        for (Vertex u = 0; u < vertex_count(p.n); ++u) {
            if ((u >> d) & 1U) continue;
            out << "  " << quoted(u, p.n) << " -- " << quoted(u ^ (Vertex{1} << d), p.n) << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const Orientation& o) {
    const int n = o.dimension();
    std::ostringstream out;
    out << "digraph H" << n << " {\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    for (Vertex v = 0; v < o.vertex_count(); ++v) out << "  " << quoted(v, n) << ";\n";
    for (int d = 0; d < n; ++d) {
        for (Vertex u = 0; u < o.vertex_count(); ++u) {
            if ((u >> d) & 1U) continue;
            const Vertex w = u ^ (Vertex{1} << d);
            const bool up = o.points_up(d, u);
            out << "  " << quoted(up ? u : w, n) << " -> " << quoted(up ? w : u, n) << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace cubefire::io
