#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qwalk/continuous_walk.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/observables.hpp"
#include "support/dense_ops.hpp"

using namespace qwalk;
namespace qt = qwalk::testing;

namespace {

CVector basis_state(int dim, int x) {
    CVector v = CVector::Zero(dim);
    v[x] = 1.0;
    return v;
}

} // namespace

TEST_SUITE("continuous_walk") {

TEST_CASE("K2 adjacency walk is the sigma_x rotation") {
    const Graph k2 = generate(GraphKind::complete(2));
    const double gamma = 1.1;
    for (const double t : {0.0, 0.5, 2.0}) {
        const CVector psi = evolve(k2, basis_state(2, 0), {HamiltonianKind::adjacency, gamma}, t);
        CHECK(std::abs(psi[0] - Complex(std::cos(gamma * t), 0.0)) < 1e-12);
        CHECK(std::abs(psi[1] - Complex(0.0, -std::sin(gamma * t))) < 1e-12);
    }
}

TEST_CASE("K2 distribution at gamma t = pi/4 is uniform") {
    const Graph k2 = generate(GraphKind::complete(2));
    const CVector psi =
        evolve(k2, basis_state(2, 0), {HamiltonianKind::adjacency, 1.0}, std::numbers::pi / 4.0);
    const ProbDist dist = position_distribution(psi);
    CHECK(dist.p[0] == doctest::Approx(0.5));
    CHECK(dist.p[1] == doctest::Approx(0.5));
}

TEST_CASE("position distribution basics") {
    const ProbDist point = position_distribution(basis_state(5, 3));
    CHECK(point.p[3] == 1.0);

    CVector flat = CVector::Constant(8, Complex(1.0 / std::sqrt(8.0), 0.0));
    const ProbDist uniform = position_distribution(flat);
    for (int x = 0; x < 8; ++x) {
        CHECK(uniform.p[x] == doctest::Approx(0.125));
    }
}

TEST_CASE("both kinds agree with an independent Taylor evolution") {
    const Graph g = generate(GraphKind::random(7, 0.5, 19));
    const CVector psi0 = qt::random_unit_vector(7, 3);
    for (const auto kind : {HamiltonianKind::adjacency, HamiltonianKind::laplacian}) {
        const HamiltonianSpec spec{kind, 0.7};
        const CVector got = evolve(g, psi0, spec, 1.4);
        const CVector expect = qt::taylor_exp_apply(hamiltonian_matrix(g, spec), 1.4, psi0);
        CHECK((got - expect).norm() < 1e-10);
    }
}

TEST_CASE("evolution is unitary and composes in time") {
    const Graph g = generate(GraphKind::glued_trees(2, 13));
    const ContinuousEngine engine(g, {HamiltonianKind::laplacian, 0.9});
    const CVector psi0 = qt::random_unit_vector(g.vertex_count(), 8);
    const CVector once = engine.evolve(psi0, 1.7);
    CHECK(std::abs(once.norm() - 1.0) < 1e-10);
    const CVector twice = engine.evolve(engine.evolve(psi0, 0.9), 0.8);
    CHECK((once - twice).norm() < 1e-10);
    // negative time runs the inverse evolution
    const CVector back = engine.evolve(once, -1.7);
    CHECK((back - psi0).norm() < 1e-10);
}

TEST_CASE("regular graphs: laplacian evolution is a global phase away") {
    struct Case {
        Graph graph;
        double gamma_t;
    };
    const Case cases[] = {{generate(GraphKind::cycle(8)), 0.5},
                          {generate(GraphKind::cycle(8)), 2.0},
                          {generate(GraphKind::hypercube(8)), 1.0},
                          {generate(GraphKind::complete(5)), 1.0}};
    for (const auto& c : cases) {
        const int n = c.graph.vertex_count();
        const int d = c.graph.regular_degree();
        REQUIRE(d >= 0);
        const CVector psi0 = basis_state(n, 0);
        const CVector adj = evolve(c.graph, psi0, {HamiltonianKind::adjacency, 1.0}, c.gamma_t);
        const CVector lap = evolve(c.graph, psi0, {HamiltonianKind::laplacian, 1.0}, c.gamma_t);
        // psi_lap = e^{i gamma d t} psi_adj, componentwise
        const Complex phase = std::exp(Complex(0.0, d * c.gamma_t));
        CHECK((lap - phase * adj).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("phase equivalence report on regular graphs") {
    const Graph q3 = generate(GraphKind::hypercube(8));
    const CVector psi0 = qt::random_unit_vector(8, 29);
    const auto report = phase_equivalence_report(q3, psi0, 1.0, 1.0);
    CHECK(report.is_regular);
    CHECK(report.degree == 3);
    CHECK(report.fidelity_after_phase_removal == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(report.max_dist_diff < 1e-10);

    const Graph c4 = generate(GraphKind::cycle(4));
    const auto cycle_report = phase_equivalence_report(c4, basis_state(4, 0), 0.8, 1.25);
    CHECK(cycle_report.max_dist_diff < 1e-10);
}

TEST_CASE("the star graph evolves differently under the two kinds") {
    const Graph star = qt::make_star(4);
    const auto report = phase_equivalence_report(star, basis_state(5, 0), 1.0, 1.0);
    CHECK_FALSE(report.is_regular);
    CHECK(report.max_dist_diff > 0.01);

    // cross-check the distribution gap with the Taylor oracle
    const CVector adj = qt::taylor_exp_apply(
        hamiltonian_matrix(star, {HamiltonianKind::adjacency, 1.0}), 1.0, basis_state(5, 0));
    const CVector lap = qt::taylor_exp_apply(
        hamiltonian_matrix(star, {HamiltonianKind::laplacian, 1.0}), 1.0, basis_state(5, 0));
    const double gap =
        (position_distribution(adj).p - position_distribution(lap).p).cwiseAbs().maxCoeff();
    CHECK(gap == doctest::Approx(report.max_dist_diff).epsilon(1e-9));
    CHECK(gap > 0.01);
}

TEST_CASE("edgeless graphs evolve trivially under both kinds") {
    const Graph edgeless = Graph::from_edges(4, {});
    const auto report = phase_equivalence_report(edgeless, basis_state(4, 1), 1.0, 2.0);
    CHECK(report.is_regular);
    CHECK(report.degree == 0);
    CHECK(report.max_dist_diff < 1e-14);
    CHECK(report.fidelity_after_phase_removal == doctest::Approx(1.0));
}

TEST_CASE("bad inputs are rejected") {
    const Graph c4 = generate(GraphKind::cycle(4));
    CHECK_THROWS_AS(evolve(c4, basis_state(3, 0), {HamiltonianKind::adjacency, 1.0}, 1.0),
                    GraphError);
    CHECK_THROWS_AS(evolve(c4, basis_state(4, 0), {HamiltonianKind::adjacency, 0.0}, 1.0),
                    GraphError);
    CHECK_THROWS_AS(hamiltonian_from_name("swirl"), GraphError);
}

} // TEST_SUITE
