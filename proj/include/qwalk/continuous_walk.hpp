#ifndef QWALK_CONTINUOUS_WALK_HPP
#define QWALK_CONTINUOUS_WALK_HPP

#include <string>

#include "qwalk/graph.hpp"
#include "qwalk/linalg.hpp"
#include "qwalk/prob_dist.hpp"

namespace qwalk {

// The two Hamiltonians under discussion: H = gamma A, and the
// conservation-style H = gamma (A - D) with D = diag(d_x). On d-regular
// graphs they differ by the global phase e^{i gamma d t}; on irregular
// graphs they genuinely evolve differently.
enum class HamiltonianKind { adjacency, laplacian };

struct HamiltonianSpec {
    HamiltonianKind kind = HamiltonianKind::adjacency;
    double gamma = 1.0;
};

HamiltonianKind hamiltonian_from_name(const std::string& name);
std::string hamiltonian_name(HamiltonianKind kind);

CMatrix hamiltonian_matrix(const Graph& g, const HamiltonianSpec& h);

// e^{-iHt} psi0, exact through the spectral form. Negative t runs the
// inverse evolution.
CVector evolve(const Graph& g, const CVector& psi0, const HamiltonianSpec& h, double t);

// Cached eigensystem for sampling one evolution at many times.
class ContinuousEngine {
public:
    ContinuousEngine(const Graph& g, const HamiltonianSpec& h);
    CVector evolve(const CVector& psi0, double t) const;

private:
    HermitianEigensystem eigensystem_;
};

// P(x) = |psi_x|^2
ProbDist position_distribution(const CVector& psi);

struct PhaseEquivalenceReport {
    bool is_regular = false;
    int degree = -1;                          // regular degree, -1 otherwise
    double fidelity_after_phase_removal = 0;  // |<psi_adj|psi_lap>|, phase drops out
    double max_dist_diff = 0;                 // max_x |P_adj(x) - P_lap(x)|
};

// Runs both Hamiltonians side by side from psi0. For regular graphs the
// fidelity is 1 and the distributions coincide; for irregular graphs the
// same numbers are reported with no expectation attached.
PhaseEquivalenceReport phase_equivalence_report(const Graph& g, const CVector& psi0,
                                                double gamma, double t);

} // namespace qwalk

#endif
