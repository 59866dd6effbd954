#ifndef QWALK_COINED_WALK_HPP
#define QWALK_COINED_WALK_HPP

#include <functional>
#include <map>
#include <utility>

#include "qwalk/coin.hpp"
#include "qwalk/coined_state.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/oracle.hpp"

namespace qwalk {

// Conditional swap S: |x,y,1> -> |y,x,1>, identity on the flag-0 block.
// A Fredkin cascade over corresponding register qubits; self-inverse.
void swap_apply(CoinedState& s);

void coin_apply(CoinedState& s, const CoinOp& coin);

// One walk step OSOC, coin first. The second oracle call uncomputes the
// flag, which works because A_xy = A_yx, so the flag returns to |0>.
// Exactly two quantum oracle calls.
void step(CoinedState& s, const Graph& g, const CoinOp& coin, OracleCounter& ctr);

// (OSOC)^t from |x0,0,0>. quantum_calls grows by exactly 2t. on_step, if
// given, sees the state after each step (1-based).
CoinedState run_coined(const Graph& g, int x0, const CoinOp& coin, int steps, OracleCounter& ctr,
                       const std::function<void(int, const CoinedState&)>& on_step = {});

// The naive quantization that applies the adjacency matrix directly, with
// optional per-edge phases on the nonzero entries:
//   M_yx = (alpha/N) e^{i phi_xy} A_xy + (1 - alpha d_x/N) delta_xy
// Non-unitary except in contrived cases; this exists as the negative
// check motivating the coined construction.
struct NaiveQuantization {
    CMatrix matrix;
    double defect; // ||M'M - I||_max
};

NaiveQuantization naive_adjacency_operator(
    const Graph& g, double alpha,
    const std::map<std::pair<int, int>, double>& phases = {});

} // namespace qwalk

#endif
