#include "qwalk/io.hpp"

#include <cstdio>
#include <fstream>

#include "qwalk/errors.hpp"

namespace qwalk {

std::string format_float(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

nlohmann::json graph_to_json(const Graph& g, const std::optional<std::string>& kind,
                             const std::optional<std::uint64_t>& seed) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (auto [x, y] : g.edges()) {
        edges.push_back({x, y});
    }
    j["edges"] = std::move(edges);
    if (kind) {
        j["kind"] = *kind;
    }
    if (seed) {
        j["seed"] = *seed;
    }
    return j;
}

void write_json(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw GraphError("cannot open for writing: " + path);
    }
    out << j.dump(2) << "\n";
}

nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw GraphError("cannot open: " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw GraphError("bad JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_graph_json(const Graph& g, const std::string& path,
                      const std::optional<std::string>& kind,
                      const std::optional<std::uint64_t>& seed) {
    write_json(path, graph_to_json(g, kind, seed));
}

Graph read_graph_json(const std::string& path) {
    const nlohmann::json j = read_json(path);
    if (!j.contains("n") || !j.contains("edges")) {
        throw GraphError("graph file " + path + " must contain \"n\" and \"edges\"");
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) {
            throw GraphError("graph file " + path + ": each edge must be a pair");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    // from_edges re-runs the full invariant scan
    return Graph::from_edges(j["n"].get<int>(), edges);
}

void write_distribution_csv(const std::string& path, const std::vector<double>& times,
                            const std::vector<ProbDist>& dists) {
    if (times.size() != dists.size() || dists.empty()) {
        throw GraphError("distribution csv: times and rows must match");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw GraphError("cannot open for writing: " + path);
    }
    out << "t";
    for (int x = 0; x < dists.front().size(); ++x) {
        out << ",P" << x;
    }
    out << "\n";
    for (std::size_t row = 0; row < times.size(); ++row) {
        out << format_float(times[row]);
        for (int x = 0; x < dists[row].size(); ++x) {
            out << "," << format_float(dists[row].p[x]);
        }
        out << "\n";
    }
}

void write_trajectory_csv(const std::string& path, const std::vector<int>& vertices) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw GraphError("cannot open for writing: " + path);
    }
    out << "t,vertex\n";
    for (std::size_t t = 0; t < vertices.size(); ++t) {
        out << t << "," << vertices[t] << "\n";
    }
}

nlohmann::json report_to_json(const RunReport& report) {
    nlohmann::json j;
    j["walk_kind"] = report.walk_kind;
    j["graph"]["n"] = report.n;
    j["graph"]["edges"] = report.edge_count;
    auto hist = nlohmann::json::object();
    for (auto [degree, count] : report.degree_histogram) {
        hist[std::to_string(degree)] = count;
    }
    j["graph"]["degree_histogram"] = std::move(hist);
    if (report.steps) {
        j["steps"] = *report.steps;
    }
    if (report.time) {
        j["t"] = *report.time;
    }
    if (report.slices) {
        j["j"] = *report.slices;
    }
    j["oracle"]["classical_queries"] = report.classical_queries;
    j["oracle"]["quantum_calls"] = report.quantum_calls;
    j["oracle"]["oso_calls"] = report.oso_calls;
    if (report.expected_classical_queries) {
        j["oracle"]["expected_classical_queries"] = *report.expected_classical_queries;
    }
    if (report.expected_quantum_calls) {
        j["oracle"]["expected_quantum_calls"] = *report.expected_quantum_calls;
    }
    if (report.calls_per_unit) {
        j["oracle"]["calls_per_unit"] = *report.calls_per_unit;
    }
    if (report.expected_move_rate) {
        j["expected_move_rate"] = *report.expected_move_rate;
    }
    return j;
}

nlohmann::json phase_report_to_json(const PhaseEquivalenceReport& report) {
    nlohmann::json j;
    j["is_regular"] = report.is_regular;
    if (report.is_regular) {
        j["degree"] = report.degree;
    }
    j["fidelity_after_phase_removal"] = report.fidelity_after_phase_removal;
    j["max_dist_diff"] = report.max_dist_diff;
    return j;
}

} // namespace qwalk
