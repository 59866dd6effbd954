#include <doctest.h>

#include "qwalk/errors.hpp"
#include "qwalk/oracle.hpp"
#include "support/dense_ops.hpp"

using namespace qwalk;
namespace qt = qwalk::testing;

namespace {

// dense matrix of the implementation, one basis column at a time
CMatrix materialize_oracle(const Graph& g, int n) {
    OracleCounter ctr;
    const Eigen::Index dim = qt::coined_dim(n);
    CMatrix m(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        CoinedState s = CoinedState::zero(n);
        s.amps[col] = 1.0;
        oracle_apply(s, g, ctr);
        m.col(col) = s.amps;
    }
    return m;
}

CMatrix materialize_oso(const Graph& g, int n) {
    OracleCounter ctr;
    const Eigen::Index dim = Eigen::Index(1) << (2 * n);
    CMatrix m(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        PairState s = PairState::zero(n);
        s.amps[col] = 1.0;
        oso_apply(s, g, ctr);
        m.col(col) = s.amps;
    }
    return m;
}

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("classical query returns A_xy and counts") {
    const Graph k2 = generate(GraphKind::complete(2));
    OracleCounter ctr;
    CHECK(classical_query(k2, 0, 1, ctr) == 1);
    CHECK(ctr.classical_queries == 1);
    CHECK(classical_query(k2, 0, 0, ctr) == 0);

    const Graph c4 = generate(GraphKind::cycle(4));
    CHECK(classical_query(c4, 0, 2, ctr) == 0);
    CHECK(ctr.classical_queries == 3);
    CHECK(ctr.quantum_calls == 0);
}

TEST_CASE("oracle flips the flag on edges, both directions") {
    const Graph k2 = generate(GraphKind::complete(2));
    OracleCounter ctr;

    CoinedState s = CoinedState::basis(1, 0, 1, 0);
    oracle_apply(s, k2, ctr);
    CHECK(std::abs(s.amps[s.index(0, 1, 1)] - Complex(1.0)) < 1e-15);

    oracle_apply(s, k2, ctr); // O|x,y,A_xy> = |x,y,0>
    CHECK(std::abs(s.amps[s.index(0, 1, 0)] - Complex(1.0)) < 1e-15);
    CHECK(ctr.quantum_calls == 2);
}

TEST_CASE("oracle extends linearly over superpositions") {
    const Graph c4 = generate(GraphKind::cycle(4));
    const int n = 2;
    CoinedState s = CoinedState::zero(n);
    const double amp = 1.0 / std::sqrt(2.0);
    s.amps[s.index(0, 1, 0)] = amp;
    s.amps[s.index(0, 2, 0)] = amp;

    OracleCounter ctr;
    CVector input = s.amps;
    oracle_apply(s, c4, ctr);

    CHECK(std::abs(s.amps[s.index(0, 1, 1)] - amp) < 1e-15);
    CHECK(std::abs(s.amps[s.index(0, 2, 0)] - amp) < 1e-15);

    // same answer as the dense definition applied to the same vector
    const CVector expect = qt::dense_oracle(c4, n) * input;
    CHECK((s.amps - expect).norm() < 1e-15);
}

TEST_CASE("oracle is an involutive permutation on every basis state") {
    const Graph graphs[] = {generate(GraphKind::cycle(4)), generate(GraphKind::random(8, 0.4, 2)),
                            generate(GraphKind::glued_trees(2, 3)),
                            generate(GraphKind::complete(20))};
    for (const Graph& g : graphs) {
        const int n = qubits_for(g.vertex_count());
        REQUIRE(2 * n + 1 <= 13);
        OracleCounter ctr;
        const Eigen::Index dim = qt::coined_dim(n);
        for (Eigen::Index col = 0; col < dim; ++col) {
            CoinedState s = CoinedState::zero(n);
            s.amps[col] = 1.0;
            oracle_apply(s, g, ctr);
            CHECK(s.amps.cwiseAbs().maxCoeff() == 1.0); // still a basis state
            oracle_apply(s, g, ctr);
            CHECK(s.amps[col] == Complex(1.0));
        }
    }
}

TEST_CASE("oracle matches its dense definition and is unitary") {
    for (const Graph& g : {generate(GraphKind::cycle(5)), generate(GraphKind::random(8, 0.5, 7))}) {
        const int n = qubits_for(g.vertex_count());
        const CMatrix impl = materialize_oracle(g, n);
        CHECK((impl - qt::dense_oracle(g, n)).cwiseAbs().maxCoeff() == 0.0);
        CHECK(unitarity_defect(impl) < 1e-12);
    }
}

TEST_CASE("oso swaps exactly the adjacent pairs") {
    const Graph k2 = generate(GraphKind::complete(2));
    OracleCounter ctr;
    PairState s = PairState::basis(1, 0, 1);
    oso_apply(s, k2, ctr);
    CHECK(std::abs(s.amps[s.index(1, 0)] - Complex(1.0)) < 1e-15);
    CHECK(ctr.oso_calls == 1);

    const Graph c4 = generate(GraphKind::cycle(4));
    PairState t = PairState::basis(2, 0, 2);
    oso_apply(t, c4, ctr);
    CHECK(std::abs(t.amps[t.index(0, 2)] - Complex(1.0)) < 1e-15);
}

TEST_CASE("oso equals O.S.O restricted to the flag-0 block") {
    const Graph graphs[] = {generate(GraphKind::complete(2)), generate(GraphKind::cycle(4)),
                            generate(GraphKind::cycle(8)), generate(GraphKind::random(8, 0.4, 9)),
                            qt::make_star(4), generate(GraphKind::line(5))};
    for (const Graph& g : graphs) {
        const int n = qubits_for(g.vertex_count());
        const CMatrix oso_full =
            qt::dense_oracle(g, n) * qt::dense_swap(n) * qt::dense_oracle(g, n);
        // pick out the b=0 rows and columns
        const Eigen::Index pair_dim = Eigen::Index(1) << (2 * n);
        CMatrix restricted(pair_dim, pair_dim);
        for (Eigen::Index row = 0; row < pair_dim; ++row) {
            for (Eigen::Index col = 0; col < pair_dim; ++col) {
                restricted(row, col) = oso_full(2 * row, 2 * col);
            }
        }
        const CMatrix impl = materialize_oso(g, n);
        CHECK((impl - restricted).cwiseAbs().maxCoeff() == 0.0);

        // a real symmetric permutation, its own inverse
        CHECK((impl - impl.transpose()).cwiseAbs().maxCoeff() == 0.0);
        CHECK((impl * impl - CMatrix::Identity(pair_dim, pair_dim)).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("register too small for the graph is rejected") {
    const Graph c5 = generate(GraphKind::cycle(5));
    OracleCounter ctr;
    CoinedState s = CoinedState::zero(2); // holds 4 vertices, needs 3 qubits
    CHECK_THROWS_AS(oracle_apply(s, c5, ctr), GraphError);
}

} // TEST_SUITE
