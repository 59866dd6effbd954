#ifndef QWALK_ORACLE_HPP
#define QWALK_ORACLE_HPP

#include <cstdint>

#include "qwalk/coined_state.hpp"
#include "qwalk/graph.hpp"

namespace qwalk {

// Per-run query tallies. One quantum call means one application of the
// oracle to the whole state, however wide the superposition; that is the
// unit the resource comparison counts in. Monotone within a run.
struct OracleCounter {
    std::uint64_t classical_queries = 0;
    std::uint64_t quantum_calls = 0;
    std::uint64_t oso_calls = 0;

    void reset() { *this = OracleCounter{}; }
};

// Classical oracle: one bit A_xy per query.
int classical_query(const Graph& g, int x, int y, OracleCounter& ctr);

// Quantum oracle O: |x,y,b> -> |x,y,b^A_xy>, extended linearly. An
// involutive permutation of the basis, applied in place; no matrix is
// ever materialized outside verification paths.
void oracle_apply(CoinedState& s, const Graph& g, OracleCounter& ctr);

// Combined OSO oracle on two registers, no flag qubit:
// |x,y> -> |y,x> if e_xy is an edge, else unchanged.
void oso_apply(PairState& s, const Graph& g, OracleCounter& ctr);

} // namespace qwalk

#endif
