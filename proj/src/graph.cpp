#include "qwalk/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qwalk/errors.hpp"
#include "qwalk/rng.hpp"

namespace qwalk {

namespace {

std::string pair_str(int x, int y) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

} // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) {
        throw GraphError("graph: vertex count must be >= 1, got " + std::to_string(n));
    }
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n) * n, 0);
    g.degrees_.assign(n, 0);
    g.edges_.reserve(edges.size());
    for (auto [x, y] : edges) {
        if (x < 0 || x >= n || y < 0 || y >= n) {
            throw GraphError("graph: edge index out of range " + pair_str(x, y));
        }
        if (x == y) {
            throw GraphError("graph: self-loop rejected " + pair_str(x, y));
        }
        const auto lo = std::min(x, y);
        const auto hi = std::max(x, y);
        if (g.adj_[static_cast<std::size_t>(lo) * n + hi]) {
            throw GraphError("graph: duplicate edge " + pair_str(x, y) +
                             " (e_xy is identified with e_yx)");
        }
        g.adj_[static_cast<std::size_t>(lo) * n + hi] = 1;
        g.adj_[static_cast<std::size_t>(hi) * n + lo] = 1;
        g.degrees_[lo] += 1;
        g.degrees_[hi] += 1;
        g.edges_.emplace_back(lo, hi);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    return g;
}

int Graph::adjacency(int x, int y) const {
    if (x < 0 || y < 0) {
        throw GraphError("graph: negative vertex index " + pair_str(x, y));
    }
    if (x >= n_ || y >= n_) {
        return 0; // padded register index, never connected
    }
    return adj_[static_cast<std::size_t>(x) * n_ + y];
}

int Graph::degree(int x) const {
    if (x < 0 || x >= n_) {
        throw GraphError("graph: vertex index out of range " + std::to_string(x));
    }
    return degrees_[x];
}

int Graph::max_degree() const {
    return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

double Graph::mean_degree() const {
    if (n_ == 0) {
        return 0.0;
    }
    return 2.0 * static_cast<double>(edges_.size()) / n_;
}

int Graph::regular_degree() const {
    if (n_ == 0) {
        return -1;
    }
    const int d = degrees_[0];
    for (int x = 1; x < n_; ++x) {
        if (degrees_[x] != d) {
            return -1;
        }
    }
    return d;
}

std::map<int, int> Graph::degree_histogram() const {
    std::map<int, int> hist;
    for (int x = 0; x < n_; ++x) {
        hist[degrees_[x]] += 1;
    }
    return hist;
}

int color_neighbor(int n, int c, int x) {
    if (n < 1 || c < 0 || x < 0) {
        throw GraphError("color_neighbor: bad arguments");
    }
    return ((c - x) % n + n) % n;
}

GraphKind GraphKind::line(int n) { return GraphKind{GraphKindTag::line, n, 0, 0.0, 0, false}; }
GraphKind GraphKind::cycle(int n) { return GraphKind{GraphKindTag::cycle, n, 0, 0.0, 0, false}; }
GraphKind GraphKind::hypercube(int n) { return GraphKind{GraphKindTag::hypercube, n, 0, 0.0, 0, false}; }
GraphKind GraphKind::complete(int n) { return GraphKind{GraphKindTag::complete, n, 0, 0.0, 0, false}; }

GraphKind GraphKind::glued_trees(int depth, std::uint64_t seed) {
    return GraphKind{GraphKindTag::glued_trees, 0, depth, 0.0, seed, true};
}

GraphKind GraphKind::random(int n, double p, std::uint64_t seed) {
    return GraphKind{GraphKindTag::random, n, 0, p, seed, true};
}

std::string kind_name(GraphKindTag tag) {
    switch (tag) {
    case GraphKindTag::line: return "line";
    case GraphKindTag::cycle: return "cycle";
    case GraphKindTag::hypercube: return "hypercube";
    case GraphKindTag::complete: return "complete";
    case GraphKindTag::glued_trees: return "glued-trees";
    case GraphKindTag::random: return "random";
    }
    return "?";
}

GraphKind GraphKind::parse(const std::vector<std::string>& tokens) {
    if (tokens.empty()) {
        throw GraphError("graph spec: empty");
    }
    const std::string& name = tokens[0];
    auto int_at = [&](std::size_t i) {
        if (i >= tokens.size()) {
            throw GraphError("graph spec '" + name + "': missing parameter");
        }
        return std::stoi(tokens[i]);
    };
    auto real_at = [&](std::size_t i) {
        if (i >= tokens.size()) {
            throw GraphError("graph spec '" + name + "': missing parameter");
        }
        return std::stod(tokens[i]);
    };
    GraphKind k;
    if (name == "line") {
        k = line(int_at(1));
    } else if (name == "cycle") {
        k = cycle(int_at(1));
    } else if (name == "hypercube") {
        k = hypercube(int_at(1));
    } else if (name == "complete") {
        k = complete(int_at(1));
    } else if (name == "glued-trees" || name == "glued_trees") {
        k = glued_trees(int_at(1), 0);
        k.has_seed = false; // seed supplied separately
    } else if (name == "random") {
        k = random(int_at(1), real_at(2), 0);
        k.has_seed = false;
    } else {
        throw GraphError("graph spec: unknown kind '" + name + "'");
    }
    return k;
}

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

Graph generate_glued_trees(int depth, std::uint64_t seed) {
    if (depth < 1) {
        throw GraphError("glued-trees: depth must be >= 1");
    }
    const int tree = (1 << (depth + 1)) - 1; // vertices per binary tree
    const int leaves = 1 << depth;
    const int first_leaf = leaves - 1; // heap order: leaves are the last 2^d indices
    std::vector<std::pair<int, int>> edges;
    // two complete binary trees in heap order, the right one offset by `tree`
    for (int side = 0; side < 2; ++side) {
        const int off = side * tree;
        for (int p = 0; 2 * p + 2 < tree; ++p) {
            edges.emplace_back(off + p, off + 2 * p + 1);
            edges.emplace_back(off + p, off + 2 * p + 2);
        }
    }
    // random alternating cycle through the two leaf sets: every leaf picks
    // up exactly two cross edges, so all degrees are 3 except the roots
    std::vector<int> left(leaves), right(leaves);
    for (int i = 0; i < leaves; ++i) {
        left[i] = first_leaf + i;
        right[i] = tree + first_leaf + i;
    }
    Rng rng(seed);
    auto shuffle = [&rng](std::vector<int>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[rng.next_below(i)]);
        }
    };
    shuffle(left);
    shuffle(right);
    for (int i = 0; i < leaves; ++i) {
        edges.emplace_back(left[i], right[i]);
        edges.emplace_back(right[i], left[(i + 1) % leaves]);
    }
    return Graph::from_edges(2 * tree, edges);
}

} // namespace

Graph generate(const GraphKind& kind) {
    switch (kind.tag) {
    case GraphKindTag::line: {
        if (kind.size < 1) {
            throw GraphError("line: size must be >= 1");
        }
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i + 1 < kind.size; ++i) {
            edges.emplace_back(i, i + 1);
        }
        return Graph::from_edges(kind.size, edges);
    }
    case GraphKindTag::cycle: {
        if (kind.size < 3) {
            throw GraphError("cycle: size must be >= 3");
        }
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i + 1 < kind.size; ++i) {
            edges.emplace_back(i, i + 1);
        }
        edges.emplace_back(kind.size - 1, 0);
        return Graph::from_edges(kind.size, edges);
    }
    case GraphKindTag::hypercube: {
        if (!is_power_of_two(kind.size)) {
            throw GraphError("hypercube: size must be a power of 2");
        }
        std::vector<std::pair<int, int>> edges;
        for (int x = 0; x < kind.size; ++x) {
            for (int bit = 1; bit < kind.size; bit <<= 1) {
                const int y = x ^ bit;
                if (x < y) {
                    edges.emplace_back(x, y);
                }
            }
        }
        return Graph::from_edges(kind.size, edges);
    }
    case GraphKindTag::complete: {
        if (kind.size < 1) {
            throw GraphError("complete: size must be >= 1");
        }
        std::vector<std::pair<int, int>> edges;
        for (int x = 0; x < kind.size; ++x) {
            for (int y = x + 1; y < kind.size; ++y) {
                edges.emplace_back(x, y);
            }
        }
        return Graph::from_edges(kind.size, edges);
    }
    case GraphKindTag::glued_trees: {
        if (!kind.has_seed) {
            throw GraphError("glued-trees: seed required");
        }
        return generate_glued_trees(kind.depth, kind.seed);
    }
    case GraphKindTag::random: {
        if (!kind.has_seed) {
            throw GraphError("random: seed required");
        }
        if (kind.size < 1) {
            throw GraphError("random: size must be >= 1");
        }
        if (kind.edge_prob < 0.0 || kind.edge_prob > 1.0) {
            throw GraphError("random: probability must be in [0,1]");
        }
        Rng rng(kind.seed);
        std::vector<std::pair<int, int>> edges;
        for (int x = 0; x < kind.size; ++x) {
            for (int y = x + 1; y < kind.size; ++y) {
                if (rng.next_unit() < kind.edge_prob) {
                    edges.emplace_back(x, y);
                }
            }
        }
        return Graph::from_edges(kind.size, edges);
    }
    }
    throw GraphError("generate: unknown kind");
}

} // namespace qwalk
