#include "qwalk/classical_walk.hpp"

#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/rng.hpp"

namespace qwalk {

namespace {

void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw GraphError("alpha must be in [0,1], got " + std::to_string(alpha));
    }
}

void check_dims(const Graph& g, const ProbDist& p) {
    if (p.size() != g.vertex_count()) {
        throw GraphError("distribution size does not match vertex count");
    }
}

double checked_gamma(double gamma) {
    if (!(gamma > 0.0)) {
        throw GraphError("gamma must be > 0, got " + std::to_string(gamma));
    }
    return gamma;
}

} // namespace

RMatrix generator_matrix(const Graph& g, double gamma) {
    const int n = g.vertex_count();
    RMatrix m = RMatrix::Zero(n, n);
    for (auto [x, y] : g.edges()) {
        m(x, y) += gamma;
        m(y, x) += gamma;
        m(x, x) -= gamma;
        m(y, y) -= gamma;
    }
    return m;
}

ProbDist discrete_step(const Graph& g, const ProbDist& p, double alpha) {
    check_alpha(alpha);
    check_dims(g, p);
    const double rate = alpha / g.vertex_count();
    RVector next = p.p;
    // each edge moves rate*(P(y)-P(x)) from y to x and the mirror image
    // back, so the total is conserved term by term
    for (auto [x, y] : g.edges()) {
        const double flow = rate * (p.p[y] - p.p[x]);
        next[x] += flow;
        next[y] -= flow;
    }
    return ProbDist::from_vector(std::move(next));
}

std::vector<ProbDist> discrete_run(const Graph& g, const ProbDist& p0, double alpha, int steps) {
    if (steps < 0) {
        throw GraphError("discrete_run: steps must be >= 0");
    }
    std::vector<ProbDist> traj;
    traj.reserve(steps + 1);
    traj.push_back(p0);
    for (int t = 0; t < steps; ++t) {
        traj.push_back(discrete_step(g, traj.back(), alpha));
    }
    return traj;
}

ClassicalGenerator::ClassicalGenerator(const Graph& g, double gamma)
    : eigensystem_(generator_matrix(g, checked_gamma(gamma))) {}

ProbDist ClassicalGenerator::evolve(const ProbDist& p0, double t) const {
    if (t < 0.0) {
        throw GraphError("continuous_evolve: t must be >= 0");
    }
    return ProbDist::from_vector(eigensystem_.apply_exp(t, p0.p));
}

ProbDist continuous_evolve(const Graph& g, const ProbDist& p0, double gamma, double t) {
    check_dims(g, p0);
    return ClassicalGenerator(g, gamma).evolve(p0, t);
}

std::vector<int> sample_walk(const Graph& g, int x0, double alpha, int steps,
                             std::uint64_t seed, OracleCounter& ctr) {
    check_alpha(alpha);
    if (x0 < 0 || x0 >= g.vertex_count()) {
        throw GraphError("sample_walk: start vertex out of range");
    }
    if (steps < 0) {
        throw GraphError("sample_walk: steps must be >= 0");
    }
    Rng rng(seed);
    std::vector<int> traj;
    traj.reserve(steps + 1);
    int x = x0;
    traj.push_back(x);
    const auto n = static_cast<std::uint64_t>(g.vertex_count());
    for (int t = 0; t < steps; ++t) {
        const int y = static_cast<int>(rng.next_below(n));
        if (classical_query(g, x, y, ctr) == 1 && rng.next_unit() < alpha) {
            x = y;
        }
        traj.push_back(x);
    }
    return traj;
}

} // namespace qwalk
