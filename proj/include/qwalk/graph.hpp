#ifndef QWALK_GRAPH_HPP
#define QWALK_GRAPH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qwalk {

// Undirected simple graph on vertices 0..N-1. Edges are unordered pairs
// {x,y} with x != y; at most one edge per pair; no weights. Stored as a
// sorted pair list plus a dense N x N adjacency table for O(1) lookup.
// Immutable after construction, safe to share across runs.
class Graph {
public:
    Graph() = default;

    // Validates every pair: self-loops, duplicates (e_xy == e_yx) and
    // out-of-range indices are rejected with the offending pair named.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // A_xy. Total on nonnegative indices: any index >= N is a padded
    // register value and reads as 0 (disconnected), so walks on 2^n-dim
    // registers never leave the real vertices.
    int adjacency(int x, int y) const;

    // d_x = sum_y A_xy
    int degree(int x) const;

    int max_degree() const;
    double mean_degree() const;

    // Degree if every vertex has the same one, else -1.
    int regular_degree() const;

    // Edges as (x,y) with x < y, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::map<int, int> degree_histogram() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint8_t> adj_;
    std::vector<int> degrees_;
};

// Complete-graph edge coloring c = (x+y) mod N: the color-c neighbor of x
// is y_c(x) = (c-x) mod N. Bijective in c for fixed x; y_c(x) == x marks
// an inert color (A_xx = 0, nothing to traverse).
int color_neighbor(int n, int c, int x);

enum class GraphKindTag { line, cycle, hypercube, complete, glued_trees, random };

// Generator request. hypercube size must be a power of two; glued_trees
// depth >= 1; random probability in [0,1]. glued_trees and random require
// an explicit seed.
struct GraphKind {
    GraphKindTag tag = GraphKindTag::line;
    int size = 0;          // line/cycle/hypercube/complete/random vertex count
    int depth = 0;         // glued_trees
    double edge_prob = 0.0;
    std::uint64_t seed = 0;
    bool has_seed = false;

    static GraphKind line(int n);
    static GraphKind cycle(int n);
    static GraphKind hypercube(int n);
    static GraphKind complete(int n);
    static GraphKind glued_trees(int depth, std::uint64_t seed);
    static GraphKind random(int n, double p, std::uint64_t seed);

    // "cycle 16", "random 8 0.4" (seed passed separately), as used by the
    // CLI gen subcommand and run --generate.
    static GraphKind parse(const std::vector<std::string>& tokens);
};

std::string kind_name(GraphKindTag tag);

// Deterministic per seed: same seed, same edge set.
Graph generate(const GraphKind& kind);

} // namespace qwalk

#endif
