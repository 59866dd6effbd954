#ifndef QWALK_OBSERVABLES_HPP
#define QWALK_OBSERVABLES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/oracle.hpp"
#include "qwalk/prob_dist.hpp"

namespace qwalk {

// (1/2) sum_x |P(x) - Q(x)|
double total_variation(const ProbDist& p, const ProbDist& q);

double distance_to_uniform(const ProbDist& p);

struct Moments {
    double mean = 0.0;
    double stddev = 0.0;
};

// moments of the vertex-index distribution; meaningful for line/cycle labelings
Moments position_moments(const ProbDist& p);

// P_target(t) along a recorded trajectory
std::vector<double> hitting_curve(const std::vector<ProbDist>& traj, int target);

// Index of the first recorded distribution within epsilon of uniform in
// total variation, or -1 if the trajectory never gets there. Mixing is
// reported as a curve; the threshold is the caller's convention, with
// 1/e as the customary default.
int mixing_index(const std::vector<ProbDist>& traj, double epsilon);

// Everything the resource comparison needs for one run: what ran, the
// graph shape, the measured tallies, and the closed-form expectations
// they must match (2 calls per coined step, 2N per Trotter slice, one
// classical query per sampled step).
struct WalkRunInfo {
    std::string walk_kind;
    const Graph* graph = nullptr;
    std::optional<double> alpha;
    std::optional<double> gamma;
    std::optional<double> time;
    std::optional<int> steps;
    std::optional<int> slices;
};

struct RunReport {
    std::string walk_kind;
    int n = 0;
    int edge_count = 0;
    std::map<int, int> degree_histogram;
    std::optional<int> steps;
    std::optional<double> time;
    std::optional<int> slices;
    std::uint64_t classical_queries = 0;
    std::uint64_t quantum_calls = 0;
    std::uint64_t oso_calls = 0;
    std::optional<std::uint64_t> expected_classical_queries;
    std::optional<std::uint64_t> expected_quantum_calls;
    std::optional<std::uint64_t> calls_per_unit; // 2 per coined step, 2N per slice
    std::optional<double> expected_move_rate;    // alpha * dbar / N
};

// Tallies plus their closed forms. A measured count that disagrees with
// its closed form is an InvariantViolation, not a report entry.
RunReport resource_report(const OracleCounter& ctr, const WalkRunInfo& info);

} // namespace qwalk

#endif
