#ifndef QWALK_IO_HPP
#define QWALK_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qwalk/continuous_walk.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/observables.hpp"
#include "qwalk/prob_dist.hpp"

namespace qwalk {

// 17 significant digits, enough to round-trip a double exactly
std::string format_float(double v);

// Graph file format: {"n": int, "edges": [[x,y],...]} with optional "kind"
// and "seed". Edges are written x<y in lexicographic order, so a generator
// with a fixed seed always produces byte-identical files.
nlohmann::json graph_to_json(const Graph& g, const std::optional<std::string>& kind,
                             const std::optional<std::uint64_t>& seed);
void write_graph_json(const Graph& g, const std::string& path,
                      const std::optional<std::string>& kind = std::nullopt,
                      const std::optional<std::uint64_t>& seed = std::nullopt);

// Re-runs full construction validation on load.
Graph read_graph_json(const std::string& path);

// Header row then one row per recorded time: t first, then P(0..N-1).
void write_distribution_csv(const std::string& path, const std::vector<double>& times,
                            const std::vector<ProbDist>& dists);

// Sampled trajectory: header t,vertex.
void write_trajectory_csv(const std::string& path, const std::vector<int>& vertices);

nlohmann::json report_to_json(const RunReport& report);
nlohmann::json phase_report_to_json(const PhaseEquivalenceReport& report);

void write_json(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json(const std::string& path);

} // namespace qwalk

#endif
