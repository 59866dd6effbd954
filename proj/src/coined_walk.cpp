#include "qwalk/coined_walk.hpp"

#include <algorithm>
#include <cmath>

#include "qwalk/errors.hpp"

namespace qwalk {

void swap_apply(CoinedState& s) {
    const int dim = s.register_dim();
    for (int x = 0; x < dim; ++x) {
        for (int y = x + 1; y < dim; ++y) {
            std::swap(s.amps[s.index(x, y, 1)], s.amps[s.index(y, x, 1)]);
        }
    }
}

void coin_apply(CoinedState& s, const CoinOp& coin) {
    coin.apply(s);
}

void step(CoinedState& s, const Graph& g, const CoinOp& coin, OracleCounter& ctr) {
    coin_apply(s, coin);
    oracle_apply(s, g, ctr);
    swap_apply(s);
    oracle_apply(s, g, ctr);
}

CoinedState run_coined(const Graph& g, int x0, const CoinOp& coin, int steps, OracleCounter& ctr,
                       const std::function<void(int, const CoinedState&)>& on_step) {
    if (steps < 0) {
        throw GraphError("run_coined: steps must be >= 0");
    }
    if (x0 < 0 || x0 >= g.vertex_count()) {
        throw GraphError("run_coined: start vertex out of range");
    }
    CoinedState s = initial_state(x0, qubits_for(g.vertex_count()));
    for (int t = 1; t <= steps; ++t) {
        step(s, g, coin, ctr);
        if (on_step) {
            on_step(t, s);
        }
    }
    return s;
}

NaiveQuantization naive_adjacency_operator(
    const Graph& g, double alpha, const std::map<std::pair<int, int>, double>& phases) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw GraphError("alpha must be in [0,1]");
    }
    const int n = g.vertex_count();
    auto phase_of = [&phases](int x, int y) {
        const auto it = phases.find({std::min(x, y), std::max(x, y)});
        return it == phases.end() ? 0.0 : it->second;
    };
    CMatrix m = CMatrix::Zero(n, n);
    for (int x = 0; x < n; ++x) {
        m(x, x) = 1.0 - alpha * g.degree(x) / n;
        for (int y = 0; y < n; ++y) {
            if (g.adjacency(x, y)) {
                const double phi = phase_of(x, y);
                m(y, x) += (alpha / n) * Complex(std::cos(phi), std::sin(phi));
            }
        }
    }
    return NaiveQuantization{m, unitarity_defect(m)};
}

} // namespace qwalk
