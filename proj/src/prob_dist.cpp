#include "qwalk/prob_dist.hpp"

#include <cmath>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {
constexpr double kSumTol = 1e-12;
constexpr double kClampTol = 1e-12;
}

ProbDist ProbDist::point_mass(int n, int x) {
    if (n < 1 || x < 0 || x >= n) {
        throw GraphError("point_mass: vertex out of range");
    }
    RVector v = RVector::Zero(n);
    v[x] = 1.0;
    return ProbDist{std::move(v)};
}

ProbDist ProbDist::uniform(int n) {
    if (n < 1) {
        throw GraphError("uniform: size must be >= 1");
    }
    return ProbDist{RVector::Constant(n, 1.0 / n)};
}

ProbDist ProbDist::from_vector(RVector v) {
    if (v.size() < 1) {
        throw GraphError("prob dist: empty vector");
    }
    double total = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i]) || v[i] < -kClampTol) {
            throw InvariantViolation("prob dist: entry " + std::to_string(i) +
                                     " negative beyond tolerance: " + std::to_string(v[i]));
        }
        if (v[i] < 0.0) {
            v[i] = 0.0;
        }
        total += v[i];
    }
    if (std::abs(total - 1.0) > kSumTol) {
        throw InvariantViolation("prob dist: total probability " + std::to_string(total) +
                                 " leaks beyond tolerance");
    }
    return ProbDist{std::move(v)};
}

} // namespace qwalk
