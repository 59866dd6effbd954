#include <doctest.h>

#include <cmath>

#include "qwalk/classical_walk.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/observables.hpp"
#include "support/dense_ops.hpp"

using namespace qwalk;

TEST_SUITE("classical_walk") {

TEST_CASE("one step on K2 from a point mass") {
    const Graph k2 = generate(GraphKind::complete(2));
    const ProbDist next = discrete_step(k2, ProbDist::point_mass(2, 0), 1.0);
    CHECK(next.p[0] == doctest::Approx(0.5));
    CHECK(next.p[1] == doctest::Approx(0.5));
}

TEST_CASE("alpha zero and edgeless graphs are fixed points") {
    const Graph c4 = generate(GraphKind::cycle(4));
    const ProbDist p0 = ProbDist::point_mass(4, 1);
    CHECK((discrete_step(c4, p0, 0.0).p - p0.p).cwiseAbs().maxCoeff() == 0.0);

    const Graph edgeless = Graph::from_edges(4, {});
    CHECK((discrete_step(edgeless, p0, 0.7).p - p0.p).cwiseAbs().maxCoeff() == 0.0);

    CHECK_THROWS_AS(discrete_step(c4, p0, 1.5), GraphError);
    CHECK_THROWS_AS(discrete_step(c4, p0, -0.1), GraphError);
}

TEST_CASE("discrete step equals the dense update matrix") {
    const Graph g = generate(GraphKind::random(7, 0.5, 31));
    const double alpha = 0.6;
    const int n = g.vertex_count();
    RMatrix update = RMatrix::Identity(n, n);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (g.adjacency(x, y)) {
                update(x, y) += alpha / n;
            }
        }
        update(x, x) -= alpha * g.degree(x) / n;
    }
    ProbDist p = ProbDist::uniform(n);
    p.p[0] += 0.2;
    p.p[3] -= 0.2;
    const RVector expect = update * p.p;
    const ProbDist got = discrete_step(g, p, alpha);
    CHECK((got.p - expect).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("K8 mixes to uniform") {
    const Graph k8 = generate(GraphKind::complete(8));
    const auto traj = discrete_run(k8, ProbDist::point_mass(8, 0), 1.0, 200);
    REQUIRE(traj.size() == 201);
    CHECK(distance_to_uniform(traj.back()) < 1e-6);
}

TEST_CASE("zero steps returns only the initial distribution") {
    const Graph k2 = generate(GraphKind::complete(2));
    const auto traj = discrete_run(k2, ProbDist::point_mass(2, 0), 1.0, 0);
    CHECK(traj.size() == 1);
    CHECK(traj[0].p[0] == 1.0);
}

TEST_CASE("K2 at alpha=1 reaches its stationary point in one step") {
    const Graph k2 = generate(GraphKind::complete(2));
    const auto traj = discrete_run(k2, ProbDist::point_mass(2, 0), 1.0, 5);
    for (std::size_t t = 1; t < traj.size(); ++t) {
        CHECK(traj[t].p[0] == doctest::Approx(0.5));
        CHECK(traj[t].p[1] == doctest::Approx(0.5));
    }
}

TEST_CASE("probability is conserved along random runs") {
    const Graph g = generate(GraphKind::random(9, 0.4, 17));
    auto traj = discrete_run(g, ProbDist::point_mass(9, 2), 0.8, 50);
    for (const auto& dist : traj) {
        CHECK(std::abs(dist.sum() - 1.0) < 1e-12);
        CHECK(dist.p.minCoeff() >= 0.0);
    }
}

TEST_CASE("continuous evolution on K2 matches the two-state master equation") {
    const Graph k2 = generate(GraphKind::complete(2));
    const double gamma = 0.9;
    for (const double t : {0.0, 0.4, 1.7, 6.0}) {
        const ProbDist p = continuous_evolve(k2, ProbDist::point_mass(2, 0), gamma, t);
        CHECK(p.p[0] == doctest::Approx(0.5 * (1.0 + std::exp(-2.0 * gamma * t))).epsilon(1e-12));
        CHECK(p.p[1] == doctest::Approx(0.5 * (1.0 - std::exp(-2.0 * gamma * t))).epsilon(1e-12));
    }
}

TEST_CASE("continuous evolution edge cases") {
    const Graph edgeless = Graph::from_edges(3, {});
    const ProbDist p0 = ProbDist::point_mass(3, 1);
    const ProbDist out = continuous_evolve(edgeless, p0, 1.0, 5.0);
    CHECK((out.p - p0.p).cwiseAbs().maxCoeff() < 1e-14);

    const Graph c4 = generate(GraphKind::cycle(4));
    CHECK_THROWS_AS(continuous_evolve(c4, ProbDist::point_mass(4, 0), -1.0, 1.0), GraphError);
    CHECK_THROWS_AS(continuous_evolve(c4, ProbDist::point_mass(4, 0), 1.0, -1.0), GraphError);
}

TEST_CASE("Euler steps converge to the exact continuous evolution") {
    // || (I + LT/m)^m P0 - e^{LT} P0 ||_1 should shrink like 1/m
    const Graph c8 = generate(GraphKind::cycle(8));
    const double total_time = 1.0;
    const RMatrix gen = generator_matrix(c8, 1.0);
    const ProbDist p0 = ProbDist::point_mass(8, 0);
    const RVector exact = continuous_evolve(c8, p0, 1.0, total_time).p;

    double previous = 0.0;
    for (const int m : {16, 32, 64, 128}) {
        RMatrix euler = RMatrix::Identity(8, 8) + gen * (total_time / m);
        RVector p = p0.p;
        for (int i = 0; i < m; ++i) {
            p = euler * p;
        }
        const double error = (p - exact).cwiseAbs().sum();
        if (previous > 0.0) {
            CHECK(error / previous <= 0.6);
        }
        previous = error;
    }
}

TEST_CASE("sampled walk stays put on an edgeless graph") {
    const Graph edgeless = Graph::from_edges(5, {});
    OracleCounter ctr;
    const auto traj = sample_walk(edgeless, 3, 1.0, 50, 99, ctr);
    REQUIRE(traj.size() == 51);
    for (const int x : traj) {
        CHECK(x == 3);
    }
    CHECK(ctr.classical_queries == 50);
}

TEST_CASE("zero sampled steps returns only the start") {
    const Graph k2 = generate(GraphKind::complete(2));
    OracleCounter ctr;
    CHECK(sample_walk(k2, 1, 1.0, 0, 5, ctr) == std::vector<int>{1});
    CHECK(ctr.classical_queries == 0);
}

TEST_CASE("K8 move rate sits within 3 sigma of alpha d/N") {
    const Graph k8 = generate(GraphKind::complete(8));
    const int steps = 100000;
    OracleCounter ctr;
    const auto traj = sample_walk(k8, 0, 1.0, steps, 12345, ctr);
    CHECK(ctr.classical_queries == static_cast<std::uint64_t>(steps));

    int moves = 0;
    for (std::size_t i = 1; i < traj.size(); ++i) {
        moves += traj[i] != traj[i - 1];
    }
    const double rate = static_cast<double>(moves) / steps;
    const double expect = 7.0 / 8.0; // alpha d_x / N
    const double sigma = std::sqrt(expect * (1.0 - expect) / steps);
    CHECK(std::abs(rate - expect) <= 3.0 * sigma);
}

TEST_CASE("trajectories are reproducible per seed") {
    const Graph g = generate(GraphKind::random(9, 0.5, 4));
    OracleCounter ctr;
    const auto a = sample_walk(g, 0, 0.7, 200, 77, ctr);
    const auto b = sample_walk(g, 0, 0.7, 200, 77, ctr);
    const auto c = sample_walk(g, 0, 0.7, 200, 78, ctr);
    CHECK(a == b);
    CHECK(a != c);
}

TEST_CASE("ensemble of sampled walks matches the exact distribution") {
    const Graph k8 = generate(GraphKind::complete(8));
    const double alpha = 1.0;
    const int steps = 5;
    const int runs = 10000;
    const ProbDist exact = discrete_run(k8, ProbDist::point_mass(8, 0), alpha, steps).back();

    std::vector<int> counts(8, 0);
    OracleCounter ctr;
    for (int r = 0; r < runs; ++r) {
        counts[sample_walk(k8, 0, alpha, steps, 1000 + r, ctr).back()] += 1;
    }
    for (int x = 0; x < 8; ++x) {
        const double p = exact.p[x];
        const double sigma = std::sqrt(p * (1.0 - p) / runs);
        CHECK(std::abs(counts[x] / static_cast<double>(runs) - p) <= 4.0 * sigma);
    }
}

} // TEST_SUITE
