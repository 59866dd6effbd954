#include "qwalk/oracle.hpp"

#include <utility>

#include "qwalk/errors.hpp"

namespace qwalk {

int classical_query(const Graph& g, int x, int y, OracleCounter& ctr) {
    ctr.classical_queries += 1;
    return g.adjacency(x, y);
}

void oracle_apply(CoinedState& s, const Graph& g, OracleCounter& ctr) {
    if (s.register_dim() < g.vertex_count()) {
        throw GraphError("oracle: register too small for graph");
    }
    ctr.quantum_calls += 1;
    // one basis swap per ordered adjacent pair; padded indices carry no
    // edges, so everything else stays put
    for (auto [x, y] : g.edges()) {
        std::swap(s.amps[s.index(x, y, 0)], s.amps[s.index(x, y, 1)]);
        std::swap(s.amps[s.index(y, x, 0)], s.amps[s.index(y, x, 1)]);
    }
}

void oso_apply(PairState& s, const Graph& g, OracleCounter& ctr) {
    if (s.register_dim() < g.vertex_count()) {
        throw GraphError("oso: register too small for graph");
    }
    ctr.oso_calls += 1;
    for (auto [x, y] : g.edges()) {
        std::swap(s.amps[s.index(x, y)], s.amps[s.index(y, x)]);
    }
}

} // namespace qwalk
