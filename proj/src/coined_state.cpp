#include "qwalk/coined_state.hpp"

#include "qwalk/errors.hpp"

namespace qwalk {

int qubits_for(int n_vertices) {
    if (n_vertices < 1) {
        throw GraphError("qubits_for: need at least one vertex");
    }
    int n = 0;
    while ((1 << n) < n_vertices) {
        ++n;
    }
    return n;
}

CoinedState CoinedState::zero(int n) {
    if (n < 0 || n > 15) {
        throw GraphError("coined state: register size out of range");
    }
    CoinedState s;
    s.n = n;
    s.amps = CVector::Zero(Eigen::Index(1) << (2 * n + 1));
    return s;
}

CoinedState CoinedState::basis(int n, int x, int y, int b) {
    CoinedState s = zero(n);
    const int dim = s.register_dim();
    if (x < 0 || x >= dim || y < 0 || y >= dim || b < 0 || b > 1) {
        throw GraphError("coined state: basis label out of range");
    }
    s.amps[s.index(x, y, b)] = 1.0;
    return s;
}

CoinedState CoinedState::from_position(const CVector& psi, int n) {
    CoinedState s = zero(n);
    if (psi.size() > s.register_dim()) {
        throw GraphError("coined state: position vector larger than register");
    }
    for (Eigen::Index x = 0; x < psi.size(); ++x) {
        s.amps[s.index(static_cast<int>(x), 0, 0)] = psi[x];
    }
    return s;
}

double CoinedState::flag_one_probability() const {
    double mass = 0.0;
    for (Eigen::Index i = 1; i < amps.size(); i += 2) {
        mass += std::norm(amps[i]);
    }
    return mass;
}

double CoinedState::padded_mass(int n_vertices) const {
    const int dim = register_dim();
    double mass = 0.0;
    for (int x = n_vertices; x < dim; ++x) {
        for (int y = 0; y < dim; ++y) {
            mass += std::norm(amps[index(x, y, 0)]) + std::norm(amps[index(x, y, 1)]);
        }
    }
    return mass;
}

ProbDist CoinedState::position_distribution(int n_vertices) const {
    const int dim = register_dim();
    if (n_vertices < 1 || n_vertices > dim) {
        throw GraphError("position_distribution: vertex count out of range");
    }
    RVector p = RVector::Zero(n_vertices);
    for (int x = 0; x < n_vertices; ++x) {
        double mass = 0.0;
        for (int y = 0; y < dim; ++y) {
            mass += std::norm(amps[index(x, y, 0)]) + std::norm(amps[index(x, y, 1)]);
        }
        p[x] = mass;
    }
    return ProbDist::from_vector(std::move(p));
}

CoinedState initial_state(int x0, int n) {
    return CoinedState::basis(n, x0, 0, 0);
}

PairState PairState::zero(int n) {
    if (n < 0 || n > 15) {
        throw GraphError("pair state: register size out of range");
    }
    PairState s;
    s.n = n;
    s.amps = CVector::Zero(Eigen::Index(1) << (2 * n));
    return s;
}

PairState PairState::basis(int n, int x, int y) {
    PairState s = zero(n);
    const int dim = s.register_dim();
    if (x < 0 || x >= dim || y < 0 || y >= dim) {
        throw GraphError("pair state: basis label out of range");
    }
    s.amps[s.index(x, y)] = 1.0;
    return s;
}

} // namespace qwalk
