#ifndef QWALK_CLASSICAL_WALK_HPP
#define QWALK_CLASSICAL_WALK_HPP

#include <cstdint>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/linalg.hpp"
#include "qwalk/oracle.hpp"
#include "qwalk/prob_dist.hpp"

namespace qwalk {

// One iteration of the discrete classical walk:
//   P'(x) = P(x) + (alpha/N) sum_y { A_xy P(y) - A_yx P(x) }
// i.e. P' = (I + (alpha/N)(A - D)) P. Conserves total probability edge by
// edge. alpha in [0,1] is the acceptance probability of a proposed move.
ProbDist discrete_step(const Graph& g, const ProbDist& p, double alpha);

// Iterated discrete_step; trajectory includes t=0.
std::vector<ProbDist> discrete_run(const Graph& g, const ProbDist& p0, double alpha, int steps);

// Master-equation evolution P(t) = e^{Lt} P0 with generator L = gamma(A-D),
// computed exactly through the spectral form of the symmetric generator.
ProbDist continuous_evolve(const Graph& g, const ProbDist& p0, double gamma, double t);

// Cached generator spectral form for evaluating many times in one run.
class ClassicalGenerator {
public:
    ClassicalGenerator(const Graph& g, double gamma);
    ProbDist evolve(const ProbDist& p0, double t) const;

private:
    SymmetricEigensystem eigensystem_;
};

// Monte Carlo trajectory of the procedure the difference equation models:
// per step draw y uniform on [0,N-1] (y = x allowed, as prescribed), spend
// one classical query on A_xy, and move with probability alpha when the
// edge exists. Returns the visited vertices including the start, so the
// result has steps+1 entries; classical_queries grows by exactly `steps`.
std::vector<int> sample_walk(const Graph& g, int x0, double alpha, int steps,
                             std::uint64_t seed, OracleCounter& ctr);

// gamma (A - D) as a dense symmetric matrix; shared by both classical
// continuous evolution and the quantum laplacian-kind Hamiltonian.
RMatrix generator_matrix(const Graph& g, double gamma);

} // namespace qwalk

#endif
