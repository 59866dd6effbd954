#ifndef QWALK_COINED_STATE_HPP
#define QWALK_COINED_STATE_HPP

#include "qwalk/linalg.hpp"
#include "qwalk/prob_dist.hpp"

namespace qwalk {

// Qubits needed to index N vertices: ceil(log2 N). N=1 needs none.
int qubits_for(int n_vertices);

// State over H_{2^n} (x) H_{2^n} (x) H_2, the register layout shared by the
// coined walk and the Trotterized continuous walk. Basis state (x,y,b) sits
// at amplitude index ((x << n) | y) << 1 | b. Vertices x >= N are padding:
// they exist in the register but are never adjacent to anything.
struct CoinedState {
    int n = 0;     // qubits per vertex register
    CVector amps;  // dimension 2^{2n+1}

    static CoinedState zero(int n);
    static CoinedState basis(int n, int x, int y, int b);
    // |psi> (x) |0> (x) |0> with psi over the first register
    static CoinedState from_position(const CVector& psi, int n);

    int register_dim() const { return 1 << n; }
    Eigen::Index dim() const { return amps.size(); }

    Eigen::Index index(int x, int y, int b) const {
        return (static_cast<Eigen::Index>((x << n) | y) << 1) | b;
    }

    double norm() const { return amps.norm(); }
    double flag_one_probability() const;
    // probability mass on padded positions x >= N
    double padded_mass(int n_vertices) const;
    // P(x) = sum_{y,b} |amp(x,y,b)|^2, truncated to x < N
    ProbDist position_distribution(int n_vertices) const;
};

// |x0, 0, 0>, the walk's start state
CoinedState initial_state(int x0, int n);

// Two vertex registers without the flag qubit, the domain of the combined
// OSO oracle. Basis (x,y) at index (x << n) | y.
struct PairState {
    int n = 0;
    CVector amps; // dimension 2^{2n}

    static PairState zero(int n);
    static PairState basis(int n, int x, int y);

    int register_dim() const { return 1 << n; }
    Eigen::Index dim() const { return amps.size(); }
    Eigen::Index index(int x, int y) const {
        return (static_cast<Eigen::Index>(x) << n) | y;
    }
};

} // namespace qwalk

#endif
