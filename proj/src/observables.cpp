#include "qwalk/observables.hpp"

#include <cmath>

#include "qwalk/errors.hpp"

namespace qwalk {

double total_variation(const ProbDist& p, const ProbDist& q) {
    if (p.size() != q.size()) {
        throw GraphError("total_variation: dimension mismatch");
    }
    return 0.5 * (p.p - q.p).cwiseAbs().sum();
}

double distance_to_uniform(const ProbDist& p) {
    return total_variation(p, ProbDist::uniform(p.size()));
}

Moments position_moments(const ProbDist& p) {
    double mean = 0.0;
    for (int x = 0; x < p.size(); ++x) {
        mean += x * p.p[x];
    }
    double var = 0.0;
    for (int x = 0; x < p.size(); ++x) {
        var += (x - mean) * (x - mean) * p.p[x];
    }
    return Moments{mean, std::sqrt(std::max(var, 0.0))};
}

std::vector<double> hitting_curve(const std::vector<ProbDist>& traj, int target) {
    std::vector<double> curve;
    curve.reserve(traj.size());
    for (const auto& dist : traj) {
        if (target < 0 || target >= dist.size()) {
            throw GraphError("hitting_curve: target out of range");
        }
        curve.push_back(dist.p[target]);
    }
    return curve;
}

int mixing_index(const std::vector<ProbDist>& traj, double epsilon) {
    for (std::size_t i = 0; i < traj.size(); ++i) {
        if (distance_to_uniform(traj[i]) < epsilon) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

RunReport resource_report(const OracleCounter& ctr, const WalkRunInfo& info) {
    if (info.graph == nullptr) {
        throw GraphError("resource_report: missing graph");
    }
    const Graph& g = *info.graph;
    RunReport report;
    report.walk_kind = info.walk_kind;
    report.n = g.vertex_count();
    report.edge_count = g.edge_count();
    report.degree_histogram = g.degree_histogram();
    report.steps = info.steps;
    report.time = info.time;
    report.slices = info.slices;
    report.classical_queries = ctr.classical_queries;
    report.quantum_calls = ctr.quantum_calls;
    report.oso_calls = ctr.oso_calls;

    if (info.alpha) {
        report.expected_move_rate = *info.alpha * g.mean_degree() / g.vertex_count();
    }

    if (info.walk_kind == "coined") {
        // two oracle calls per step
        report.calls_per_unit = 2;
        report.expected_quantum_calls = 2ULL * static_cast<std::uint64_t>(info.steps.value_or(0));
    } else if (info.walk_kind == "trotter") {
        // 2N calls per slice
        report.calls_per_unit = 2ULL * static_cast<std::uint64_t>(g.vertex_count());
        report.expected_quantum_calls =
            2ULL * static_cast<std::uint64_t>(g.vertex_count()) *
            static_cast<std::uint64_t>(info.slices.value_or(0));
    } else if (info.walk_kind == "classical-sample") {
        // one classical query per step
        report.calls_per_unit = 1;
        report.expected_classical_queries = static_cast<std::uint64_t>(info.steps.value_or(0));
    } else {
        // exact engines touch no oracle
        report.expected_quantum_calls = 0;
        report.expected_classical_queries = 0;
    }

    if (report.expected_quantum_calls && *report.expected_quantum_calls != ctr.quantum_calls) {
        throw InvariantViolation("resource_report: quantum calls " +
                                 std::to_string(ctr.quantum_calls) + " != closed form " +
                                 std::to_string(*report.expected_quantum_calls));
    }
    if (report.expected_classical_queries &&
        *report.expected_classical_queries != ctr.classical_queries) {
        throw InvariantViolation("resource_report: classical queries " +
                                 std::to_string(ctr.classical_queries) + " != closed form " +
                                 std::to_string(*report.expected_classical_queries));
    }
    return report;
}

} // namespace qwalk
