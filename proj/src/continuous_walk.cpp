#include "qwalk/continuous_walk.hpp"

#include <cmath>

#include "qwalk/classical_walk.hpp"
#include "qwalk/errors.hpp"

namespace qwalk {

HamiltonianKind hamiltonian_from_name(const std::string& name) {
    if (name == "adjacency") {
        return HamiltonianKind::adjacency;
    }
    if (name == "laplacian") {
        return HamiltonianKind::laplacian;
    }
    throw GraphError("hamiltonian: unknown kind '" + name + "'");
}

std::string hamiltonian_name(HamiltonianKind kind) {
    return kind == HamiltonianKind::adjacency ? "adjacency" : "laplacian";
}

CMatrix hamiltonian_matrix(const Graph& g, const HamiltonianSpec& h) {
    if (!(h.gamma > 0.0)) {
        throw GraphError("gamma must be > 0");
    }
    const int n = g.vertex_count();
    if (h.kind == HamiltonianKind::adjacency) {
        CMatrix m = CMatrix::Zero(n, n);
        for (auto [x, y] : g.edges()) {
            m(x, y) = h.gamma;
            m(y, x) = h.gamma;
        }
        return m;
    }
    return generator_matrix(g, h.gamma).cast<Complex>();
}

ContinuousEngine::ContinuousEngine(const Graph& g, const HamiltonianSpec& h)
    : eigensystem_(hamiltonian_matrix(g, h)) {}

CVector ContinuousEngine::evolve(const CVector& psi0, double t) const {
    return eigensystem_.apply_exp(t, psi0);
}

CVector evolve(const Graph& g, const CVector& psi0, const HamiltonianSpec& h, double t) {
    if (psi0.size() != g.vertex_count()) {
        throw GraphError("evolve: state size does not match vertex count");
    }
    return ContinuousEngine(g, h).evolve(psi0, t);
}

ProbDist position_distribution(const CVector& psi) {
    RVector p(psi.size());
    for (Eigen::Index x = 0; x < psi.size(); ++x) {
        p[x] = std::norm(psi[x]);
    }
    return ProbDist::from_vector(std::move(p));
}

PhaseEquivalenceReport phase_equivalence_report(const Graph& g, const CVector& psi0,
                                                double gamma, double t) {
    const CVector psi_adj = evolve(g, psi0, {HamiltonianKind::adjacency, gamma}, t);
    const CVector psi_lap = evolve(g, psi0, {HamiltonianKind::laplacian, gamma}, t);

    PhaseEquivalenceReport report;
    report.degree = g.regular_degree();
    report.is_regular = report.degree >= 0;
    report.fidelity_after_phase_removal = fidelity(psi_adj, psi_lap);
    const ProbDist dist_adj = position_distribution(psi_adj);
    const ProbDist dist_lap = position_distribution(psi_lap);
    report.max_dist_diff = (dist_adj.p - dist_lap.p).cwiseAbs().maxCoeff();
    return report;
}

} // namespace qwalk
