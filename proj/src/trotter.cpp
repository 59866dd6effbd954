#include "qwalk/trotter.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qwalk/errors.hpp"

namespace qwalk {

TrotterOrdering ordering_from_name(const std::string& name) {
    if (name == "interleaved") {
        return TrotterOrdering::interleaved;
    }
    if (name == "per-color-power" || name == "per_color_power") {
        return TrotterOrdering::per_color_power;
    }
    throw GraphError("trotter: unknown ordering '" + name + "'");
}

std::string ordering_name(TrotterOrdering o) {
    return o == TrotterOrdering::interleaved ? "interleaved" : "per-color-power";
}

void v_c_apply(CoinedState& s, const Graph& g, int c) {
    const int n_vertices = g.vertex_count();
    if (c < 0 || c >= n_vertices) {
        throw GraphError("v_c: color out of range");
    }
    if (s.register_dim() < n_vertices) {
        throw GraphError("v_c: register too small for graph");
    }
    const int dim = s.register_dim();
    for (int x = 0; x < dim; ++x) {
        // padded positions have no color neighbor; V_c leaves them alone
        const int target = x < n_vertices ? color_neighbor(n_vertices, c, x) : 0;
        if (target == 0) {
            continue;
        }
        // XOR by a fixed target pairs up the y values; swap each pair once
        for (int y = 0; y < dim; ++y) {
            const int z = y ^ target;
            if (z > y) {
                std::swap(s.amps[s.index(x, y, 0)], s.amps[s.index(x, z, 0)]);
                std::swap(s.amps[s.index(x, y, 1)], s.amps[s.index(x, z, 1)]);
            }
        }
    }
}

void t_exp_apply(CoinedState& s, double tau) {
    const int dim = s.register_dim();
    const double c = std::cos(tau);
    const double sn = std::sin(tau);
    const Complex mix(0.0, -1.0);
    for (int x = 0; x < dim; ++x) {
        // diagonal flag-1 states are T-eigenstates with eigenvalue 1
        s.amps[s.index(x, x, 1)] *= Complex(c, -sn);
        for (int y = x + 1; y < dim; ++y) {
            const auto ixy = s.index(x, y, 1);
            const auto iyx = s.index(y, x, 1);
            const Complex a = s.amps[ixy];
            const Complex b = s.amps[iyx];
            s.amps[ixy] = c * a + mix * sn * b;
            s.amps[iyx] = mix * sn * a + c * b;
        }
    }
}

void color_factor_apply(CoinedState& s, const Graph& g, int c, double tau_gamma,
                        OracleCounter& ctr) {
    v_c_apply(s, g, c);
    oracle_apply(s, g, ctr);
    t_exp_apply(s, tau_gamma);
    oracle_apply(s, g, ctr);
    v_c_apply(s, g, c);
}

namespace {

void check_plan(const Graph& g, int x0, const TrotterPlan& plan) {
    if (plan.slices < 1) {
        throw GraphError("trotter: slice count j must be >= 1");
    }
    if (!(plan.gamma > 0.0)) {
        throw GraphError("trotter: gamma must be > 0");
    }
    if (x0 < 0 || x0 >= g.vertex_count()) {
        throw GraphError("trotter: start vertex out of range");
    }
}

} // namespace

CoinedState trotter_run(const Graph& g, int x0, const TrotterPlan& plan, OracleCounter& ctr,
                        const std::function<void(int, const CoinedState&)>& on_slice) {
    check_plan(g, x0, plan);
    const int n_vertices = g.vertex_count();
    const double tau = plan.gamma * plan.t / plan.slices;
    CoinedState s = initial_state(x0, qubits_for(n_vertices));
    if (plan.ordering == TrotterOrdering::interleaved) {
        for (int slice = 1; slice <= plan.slices; ++slice) {
            for (int c = 0; c < n_vertices; ++c) {
                color_factor_apply(s, g, c, tau, ctr);
            }
            if (on_slice) {
                on_slice(slice, s);
            }
        }
    } else {
        for (int c = 0; c < n_vertices; ++c) {
            for (int slice = 0; slice < plan.slices; ++slice) {
                color_factor_apply(s, g, c, tau, ctr);
            }
        }
    }
    return s;
}

CoinedState trotter_run_regrouped(const Graph& g, int x0, const TrotterPlan& plan,
                                  OracleCounter& ctr) {
    check_plan(g, x0, plan);
    const int n_vertices = g.vertex_count();
    const double tau = plan.gamma * plan.t / plan.slices;
    CoinedState s = initial_state(x0, qubits_for(n_vertices));
    const int last = n_vertices - 1;
    v_c_apply(s, g, last);
    for (int slice = 0; slice < plan.slices; ++slice) {
        for (int c = 0; c < n_vertices; ++c) {
            v_c_apply(s, g, (c + last) % n_vertices); // V_{c-1} with c-1 mod N
            v_c_apply(s, g, c);
            oracle_apply(s, g, ctr);
            t_exp_apply(s, tau);
            oracle_apply(s, g, ctr);
        }
    }
    v_c_apply(s, g, last);
    return s;
}

CMatrix build_hamiltonian_dense(const Graph& g, double gamma) {
    const int n_vertices = g.vertex_count();
    if (n_vertices > 8) {
        throw GraphError("build_hamiltonian_dense: verification path is limited to N <= 8");
    }
    const int n = qubits_for(n_vertices);
    const Eigen::Index dim = Eigen::Index(1) << (2 * n + 1);
    const CoinedState probe = CoinedState::zero(n);

    // dense T: swap on flag-1, zero on flag-0
    CMatrix t_mat = CMatrix::Zero(dim, dim);
    const int reg = probe.register_dim();
    for (int x = 0; x < reg; ++x) {
        for (int y = 0; y < reg; ++y) {
            t_mat(probe.index(y, x, 1), probe.index(x, y, 1)) = 1.0;
        }
    }

    // dense O and V_c by columns, as the basis permutations they are
    OracleCounter scratch;
    CMatrix oracle = CMatrix::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        CoinedState basis = CoinedState::zero(n);
        basis.amps[col] = 1.0;
        oracle_apply(basis, g, scratch);
        oracle.col(col) = basis.amps;
    }

    CMatrix h = CMatrix::Zero(dim, dim);
    const CMatrix oto = oracle * t_mat * oracle;
    for (int c = 0; c < n_vertices; ++c) {
        CMatrix vc = CMatrix::Zero(dim, dim);
        for (Eigen::Index col = 0; col < dim; ++col) {
            CoinedState basis = CoinedState::zero(n);
            basis.amps[col] = 1.0;
            v_c_apply(basis, g, c);
            vc.col(col) = basis.amps;
        }
        h += vc * oto * vc;
    }
    return gamma * h;
}

} // namespace qwalk
