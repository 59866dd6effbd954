#ifndef QWALK_PROB_DIST_HPP
#define QWALK_PROB_DIST_HPP

#include "qwalk/linalg.hpp"

namespace qwalk {

// Probability distribution over vertices: nonnegative entries summing to 1
// within 1e-12. Spectral roundoff can leave entries a hair below zero;
// from_vector clamps anything in [-1e-12, 0) to 0 and rejects worse.
struct ProbDist {
    RVector p;

    static ProbDist point_mass(int n, int x);
    static ProbDist uniform(int n);
    static ProbDist from_vector(RVector v);

    int size() const { return static_cast<int>(p.size()); }
    double sum() const { return p.sum(); }
};

} // namespace qwalk

#endif
