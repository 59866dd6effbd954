// qwalk: classical and quantum walks on general graphs from the command
// line. Subcommands: gen (graph files), run (one engine, CSV + report),
// compare (two engines side by side), report (resource accounting only).
// Exit codes: 0 success, 1 usage or I/O error, 2 invariant violation.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qwalk/classical_walk.hpp"
#include "qwalk/coined_walk.hpp"
#include "qwalk/continuous_walk.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/io.hpp"
#include "qwalk/observables.hpp"
#include "qwalk/trotter.hpp"

using namespace qwalk;
using nlohmann::json;

namespace {

// ---------------------------------------------------------------- config

struct RunConfig {
    std::string graph_path;    // or
    std::string generate_spec; // "cycle 16"
    std::optional<std::uint64_t> graph_seed;

    std::string walk; // classical-discrete | classical-continuous |
                      // classical-sample | coined | continuous-exact | trotter
    int start = 0;
    std::optional<double> alpha;
    std::optional<double> gamma;
    std::optional<double> time;
    std::optional<int> steps;
    std::optional<int> slices; // j
    int samples = 10;
    std::string coin = "hadamard";
    std::string hamiltonian = "adjacency";
    std::string ordering = "interleaved";
    std::optional<std::uint64_t> seed;
    int record_every = 1;
    double mixing_epsilon = 1.0 / std::numbers::e;
    std::string out_csv;
    std::string out_report;
};

RunConfig config_from_json(const json& j) {
    RunConfig cfg;
    if (j.contains("graph")) cfg.graph_path = j["graph"].get<std::string>();
    if (j.contains("generate")) cfg.generate_spec = j["generate"].get<std::string>();
    if (j.contains("graph_seed")) cfg.graph_seed = j["graph_seed"].get<std::uint64_t>();
    if (j.contains("walk")) cfg.walk = j["walk"].get<std::string>();
    if (j.contains("start")) cfg.start = j["start"].get<int>();
    if (j.contains("alpha")) cfg.alpha = j["alpha"].get<double>();
    if (j.contains("gamma")) cfg.gamma = j["gamma"].get<double>();
    if (j.contains("t")) cfg.time = j["t"].get<double>();
    if (j.contains("steps")) cfg.steps = j["steps"].get<int>();
    if (j.contains("j")) cfg.slices = j["j"].get<int>();
    if (j.contains("samples")) cfg.samples = j["samples"].get<int>();
    if (j.contains("coin")) cfg.coin = j["coin"].get<std::string>();
    if (j.contains("hamiltonian")) cfg.hamiltonian = j["hamiltonian"].get<std::string>();
    if (j.contains("ordering")) cfg.ordering = j["ordering"].get<std::string>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("record_every")) cfg.record_every = j["record_every"].get<int>();
    if (j.contains("mixing_epsilon")) cfg.mixing_epsilon = j["mixing_epsilon"].get<double>();
    if (j.contains("out_csv")) cfg.out_csv = j["out_csv"].get<std::string>();
    if (j.contains("out_report")) cfg.out_report = j["out_report"].get<std::string>();
    return cfg;
}

std::vector<std::string> split_tokens(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    std::string token;
    while (in >> token) {
        tokens.push_back(token);
    }
    return tokens;
}

Graph resolve_graph(const RunConfig& cfg) {
    if (!cfg.graph_path.empty()) {
        return read_graph_json(cfg.graph_path); // re-validates on load
    }
    if (!cfg.generate_spec.empty()) {
        GraphKind kind = GraphKind::parse(split_tokens(cfg.generate_spec));
        if (cfg.graph_seed) {
            kind.seed = *cfg.graph_seed;
            kind.has_seed = true;
        }
        return generate(kind);
    }
    throw GraphError("run config needs a graph file or a generate spec");
}

double require(const std::optional<double>& v, const char* name) {
    if (!v) {
        throw GraphError(std::string("missing required parameter: ") + name);
    }
    return *v;
}

int require(const std::optional<int>& v, const char* name) {
    if (!v) {
        throw GraphError(std::string("missing required parameter: ") + name);
    }
    return *v;
}

// ------------------------------------------------------------- execution

// everything a run leaves behind, enough for reports and comparisons
struct RunOutput {
    std::vector<double> times;
    std::vector<ProbDist> dists;
    std::vector<CVector> register_states; // coined/trotter full-register states
    std::vector<CVector> vertex_states;   // continuous-exact states over vertices
    std::vector<int> trajectory;          // classical-sample path
    OracleCounter counter;
    WalkRunInfo info;
};

constexpr double kNormTol = 1e-9;
constexpr double kFlagTol = 1e-12;
constexpr double kPaddingTol = 1e-14;
constexpr double kSubspaceTol = 1e-13;

void check_coined_state(const CoinedState& s, int n_vertices) {
    if (std::abs(s.norm() - 1.0) > kNormTol) {
        throw InvariantViolation("norm drift: |psi| = " + format_float(s.norm()));
    }
    if (s.flag_one_probability() > kFlagTol) {
        throw InvariantViolation("ancilla leak: flag qubit did not return to |0>");
    }
    if (s.padded_mass(n_vertices) > kPaddingTol) {
        throw InvariantViolation("probability leak onto padded vertices");
    }
}

double subspace_leak(const CoinedState& s, int n_vertices) {
    double outside = 0.0;
    const int reg = s.register_dim();
    for (int x = 0; x < reg; ++x) {
        for (int y = 0; y < reg; ++y) {
            for (int b = 0; b < 2; ++b) {
                if (y != 0 || b != 0 || x >= n_vertices) {
                    outside += std::norm(s.amps[s.index(x, y, b)]);
                }
            }
        }
    }
    return outside;
}

// sample times k*t/samples for k = 0..samples
std::vector<double> sample_times(double total, int samples) {
    if (samples < 1) {
        throw GraphError("samples must be >= 1");
    }
    std::vector<double> times;
    times.reserve(samples + 1);
    for (int k = 0; k <= samples; ++k) {
        times.push_back(total * k / samples);
    }
    return times;
}

bool should_record(int step, int total, int every) {
    return step == total || step % every == 0;
}

RunOutput execute_run(const RunConfig& cfg, const Graph& g,
                      const std::optional<std::vector<double>>& forced_times = std::nullopt) {
    if (cfg.record_every < 1) {
        throw GraphError("record_every must be >= 1");
    }
    if (cfg.start < 0 || cfg.start >= g.vertex_count()) {
        throw GraphError("start vertex out of range");
    }
    RunOutput out;
    out.info.walk_kind = cfg.walk;
    out.info.graph = &g;

    if (cfg.walk == "classical-discrete") {
        const double alpha = require(cfg.alpha, "alpha");
        const int steps = require(cfg.steps, "steps");
        out.info.alpha = alpha;
        out.info.steps = steps;
        ProbDist p = ProbDist::point_mass(g.vertex_count(), cfg.start);
        out.times.push_back(0.0);
        out.dists.push_back(p);
        for (int t = 1; t <= steps; ++t) {
            p = discrete_step(g, p, alpha);
            if (should_record(t, steps, cfg.record_every)) {
                out.times.push_back(t);
                out.dists.push_back(p);
            }
        }
    } else if (cfg.walk == "classical-continuous") {
        const double gamma = require(cfg.gamma, "gamma");
        const double total = require(cfg.time, "t");
        out.info.gamma = gamma;
        out.info.time = total;
        const ClassicalGenerator engine(g, gamma);
        const ProbDist p0 = ProbDist::point_mass(g.vertex_count(), cfg.start);
        for (const double t : forced_times ? *forced_times : sample_times(total, cfg.samples)) {
            out.times.push_back(t);
            out.dists.push_back(engine.evolve(p0, t));
        }
    } else if (cfg.walk == "classical-sample") {
        const double alpha = require(cfg.alpha, "alpha");
        const int steps = require(cfg.steps, "steps");
        if (!cfg.seed) {
            throw GraphError("classical-sample requires an explicit seed");
        }
        out.info.alpha = alpha;
        out.info.steps = steps;
        out.trajectory = sample_walk(g, cfg.start, alpha, steps, *cfg.seed, out.counter);
        for (int t = 0; t <= steps; ++t) {
            if (t == 0 || should_record(t, steps, cfg.record_every)) {
                out.times.push_back(t);
                out.dists.push_back(ProbDist::point_mass(g.vertex_count(), out.trajectory[t]));
            }
        }
    } else if (cfg.walk == "coined") {
        const int steps = require(cfg.steps, "steps");
        out.info.steps = steps;
        const CoinOp coin = CoinOp::from_name(cfg.coin);
        const CoinedState start = initial_state(cfg.start, qubits_for(g.vertex_count()));
        out.times.push_back(0.0);
        out.dists.push_back(start.position_distribution(g.vertex_count()));
        out.register_states.push_back(start.amps);
        run_coined(g, cfg.start, coin, steps, out.counter,
                   [&](int t, const CoinedState& s) {
                       check_coined_state(s, g.vertex_count());
                       if (should_record(t, steps, cfg.record_every)) {
                           out.times.push_back(t);
                           out.dists.push_back(s.position_distribution(g.vertex_count()));
                           out.register_states.push_back(s.amps);
                       }
                   });
    } else if (cfg.walk == "continuous-exact") {
        const double gamma = require(cfg.gamma, "gamma");
        const double total = require(cfg.time, "t");
        out.info.gamma = gamma;
        out.info.time = total;
        const HamiltonianSpec spec{hamiltonian_from_name(cfg.hamiltonian), gamma};
        const ContinuousEngine engine(g, spec);
        CVector psi0 = CVector::Zero(g.vertex_count());
        psi0[cfg.start] = 1.0;
        for (const double t : forced_times ? *forced_times : sample_times(total, cfg.samples)) {
            const CVector psi = engine.evolve(psi0, t);
            if (std::abs(psi.norm() - 1.0) > kNormTol) {
                throw InvariantViolation("norm drift in continuous evolution");
            }
            out.times.push_back(t);
            out.dists.push_back(position_distribution(psi));
            out.vertex_states.push_back(psi);
        }
    } else if (cfg.walk == "trotter") {
        const double gamma = require(cfg.gamma, "gamma");
        const double total = require(cfg.time, "t");
        const int slices = require(cfg.slices, "j");
        out.info.gamma = gamma;
        out.info.time = total;
        out.info.slices = slices;
        const TrotterPlan plan{gamma, total, slices, ordering_from_name(cfg.ordering)};
        const CoinedState start = initial_state(cfg.start, qubits_for(g.vertex_count()));
        out.times.push_back(0.0);
        out.dists.push_back(start.position_distribution(g.vertex_count()));
        out.register_states.push_back(start.amps);
        const bool interleaved = plan.ordering == TrotterOrdering::interleaved;
        const CoinedState last = trotter_run(
            g, cfg.start, plan, out.counter, [&](int slice, const CoinedState& s) {
                check_coined_state(s, g.vertex_count());
                if (subspace_leak(s, g.vertex_count()) > kSubspaceTol) {
                    throw InvariantViolation("trotter state leaked out of the |.,0,0> subspace");
                }
                if (should_record(slice, plan.slices, cfg.record_every)) {
                    out.times.push_back(total * slice / plan.slices);
                    out.dists.push_back(s.position_distribution(g.vertex_count()));
                    out.register_states.push_back(s.amps);
                }
            });
        if (!interleaved) {
            // per-color ordering has no meaningful intermediate times
            check_coined_state(last, g.vertex_count());
            out.times.push_back(total);
            out.dists.push_back(last.position_distribution(g.vertex_count()));
            out.register_states.push_back(last.amps);
        }
    } else {
        throw GraphError("unknown walk kind '" + cfg.walk + "'");
    }
    return out;
}

// --------------------------------------------------------------- gen cmd

int cmd_gen(const std::vector<std::string>& spec_tokens,
            const std::optional<std::uint64_t>& seed, const std::string& output) {
    GraphKind kind = GraphKind::parse(spec_tokens);
    if (seed) {
        kind.seed = *seed;
        kind.has_seed = true;
    }
    const Graph g = generate(kind);
    write_graph_json(g, output, kind_name(kind.tag),
                     kind.has_seed ? std::optional<std::uint64_t>(kind.seed) : std::nullopt);
    return 0;
}

// --------------------------------------------------------------- run cmd

int cmd_run(const RunConfig& cfg) {
    const Graph g = resolve_graph(cfg);
    const RunOutput out = execute_run(cfg, g);
    if (!cfg.out_csv.empty()) {
        if (cfg.walk == "classical-sample") {
            write_trajectory_csv(cfg.out_csv, out.trajectory);
        } else {
            write_distribution_csv(cfg.out_csv, out.times, out.dists);
        }
    }
    if (!cfg.out_report.empty()) {
        json rep = report_to_json(resource_report(out.counter, out.info));
        rep["mixing"]["epsilon"] = cfg.mixing_epsilon;
        const int crossing = mixing_index(out.dists, cfg.mixing_epsilon);
        if (crossing >= 0) {
            rep["mixing"]["first_time"] = out.times[crossing];
        } else {
            rep["mixing"]["first_time"] = nullptr;
        }
        write_json(cfg.out_report, rep);
    } else {
        resource_report(out.counter, out.info); // still verifies the tallies
    }
    return 0;
}

// ------------------------------------------------------------ report cmd

int cmd_report(const RunConfig& cfg, const std::string& out_path) {
    const Graph g = resolve_graph(cfg);
    const RunOutput out = execute_run(cfg, g);
    json j = report_to_json(resource_report(out.counter, out.info));
    if (cfg.walk == "trotter" && g.vertex_count() <= 8) {
        // dense reconstruction check of the summed Hamiltonian
        const double gamma = cfg.gamma.value_or(1.0);
        const CMatrix h = build_hamiltonian_dense(g, gamma);
        const CoinedState probe = CoinedState::zero(qubits_for(g.vertex_count()));
        double restriction_error = 0.0;
        double off_subspace = 0.0;
        for (int x = 0; x < g.vertex_count(); ++x) {
            const Eigen::Index col = probe.index(x, 0, 0);
            for (Eigen::Index row = 0; row < h.rows(); ++row) {
                bool position_row = false;
                for (int v = 0; v < g.vertex_count(); ++v) {
                    if (row == probe.index(v, 0, 0)) {
                        restriction_error = std::max(
                            restriction_error,
                            std::abs(h(row, col) - Complex(gamma * g.adjacency(v, x))));
                        position_row = true;
                        break;
                    }
                }
                if (!position_row) {
                    off_subspace = std::max(off_subspace, std::abs(h(row, col)));
                }
            }
        }
        j["hamiltonian_check"]["hermiticity_defect"] = hermiticity_defect(h);
        j["hamiltonian_check"]["restriction_max_error"] = restriction_error;
        j["hamiltonian_check"]["subspace_leak_max"] = off_subspace;
    }
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        write_json(out_path, j);
    }
    return 0;
}

// ----------------------------------------------------------- compare cmd

bool flexible_times(const std::string& walk) {
    return walk == "classical-continuous" || walk == "continuous-exact";
}

// fidelity column where both sides carry pure states; continuous states
// get embedded as |psi>(x)|0,0> when paired with a register walk
std::optional<std::vector<double>> fidelity_column(const std::vector<CVector>& a,
                                                   const std::vector<CVector>& b) {
    if (a.empty() || b.empty()) {
        return std::nullopt;
    }
    const std::size_t rows = std::min(a.size(), b.size());
    std::vector<double> column;
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != b[i].size()) {
            return std::nullopt;
        }
        column.push_back(fidelity(a[i], b[i]));
    }
    return column;
}

std::vector<CVector> pure_states_at(const RunOutput& run, const std::vector<std::size_t>& rows,
                                    bool embed, int n) {
    std::vector<CVector> states;
    for (const std::size_t row : rows) {
        if (!run.register_states.empty()) {
            states.push_back(run.register_states[row]);
        } else if (!run.vertex_states.empty()) {
            states.push_back(embed
                                 ? CoinedState::from_position(run.vertex_states[row], n).amps
                                 : run.vertex_states[row]);
        }
    }
    return states;
}

int cmd_compare(const std::string& config_a_path, const std::string& config_b_path,
                const std::string& metric, const std::string& out_path,
                const std::vector<int>& j_sweep, const std::string& sweep_csv) {
    RunConfig a = config_from_json(read_json(config_a_path));
    RunConfig b = config_from_json(read_json(config_b_path));
    // both runs share one graph: A's source wins
    const Graph g = resolve_graph(a);

    RunOutput out_a = execute_run(a, g);
    RunOutput out_b;
    if (flexible_times(b.walk)) {
        // evaluate B on A's clock; exact engines accept any time set
        out_b = execute_run(b, g, out_a.times);
    } else {
        out_b = execute_run(b, g);
        if (flexible_times(a.walk)) {
            out_a = execute_run(a, g, out_b.times);
        }
    }

    // align on shared time points
    std::vector<std::size_t> ia, ib;
    {
        std::size_t i = 0, k = 0;
        while (i < out_a.times.size() && k < out_b.times.size()) {
            const double ta = out_a.times[i], tb = out_b.times[k];
            if (std::abs(ta - tb) < 1e-9) {
                ia.push_back(i);
                ib.push_back(k);
                ++i;
                ++k;
            } else if (ta < tb) {
                ++i;
            } else {
                ++k;
            }
        }
    }
    if (ia.empty()) {
        throw GraphError("compare: the two runs share no time points");
    }

    json result;
    result["walk_a"] = a.walk;
    result["walk_b"] = b.walk;
    result["graph"]["n"] = g.vertex_count();
    result["graph"]["edges"] = g.edge_count();
    auto times = json::array();
    auto tv_column = json::array();
    double max_tv = 0.0;
    for (std::size_t row = 0; row < ia.size(); ++row) {
        const double tv = total_variation(out_a.dists[ia[row]], out_b.dists[ib[row]]);
        max_tv = std::max(max_tv, tv);
        times.push_back(out_a.times[ia[row]]);
        tv_column.push_back(tv);
    }
    result["times"] = std::move(times);
    if (metric == "tv" || metric == "both") {
        result["tv"] = std::move(tv_column);
        result["max_tv"] = max_tv;
    }
    if (metric == "fidelity" || metric == "both") {
        const bool embed = !out_a.register_states.empty() || !out_b.register_states.empty();
        const int n = qubits_for(g.vertex_count());
        const auto column = fidelity_column(pure_states_at(out_a, ia, embed, n),
                                            pure_states_at(out_b, ib, embed, n));
        if (column) {
            result["fidelity"] = *column;
        } else if (metric == "fidelity") {
            throw GraphError("compare: fidelity needs pure states on both sides");
        }
    }

    // side-by-side continuous kinds: attach the phase equivalence report
    if (a.walk == "continuous-exact" && b.walk == "continuous-exact" &&
        a.hamiltonian != b.hamiltonian) {
        CVector psi0 = CVector::Zero(g.vertex_count());
        psi0[a.start] = 1.0;
        result["phase_equivalence"] = phase_report_to_json(phase_equivalence_report(
            g, psi0, require(a.gamma, "gamma"), require(a.time, "t")));
    }

    // trotter vs exact: convergence table over the slice sweep
    const bool trotter_vs_exact = (a.walk == "trotter" && b.walk == "continuous-exact") ||
                                  (b.walk == "trotter" && a.walk == "continuous-exact");
    if (!j_sweep.empty()) {
        if (!trotter_vs_exact) {
            throw GraphError("compare: --j-sweep applies to trotter vs continuous-exact");
        }
        const RunConfig& trotter_cfg = a.walk == "trotter" ? a : b;
        const double gamma = require(trotter_cfg.gamma, "gamma");
        const double total = require(trotter_cfg.time, "t");
        CVector psi0 = CVector::Zero(g.vertex_count());
        psi0[trotter_cfg.start] = 1.0;
        const CVector exact_embedded =
            CoinedState::from_position(evolve(g, psi0, {HamiltonianKind::adjacency, gamma}, total),
                                       qubits_for(g.vertex_count()))
                .amps;
        auto sweep = json::array();
        std::vector<std::array<double, 3>> sweep_rows;
        for (const int j_value : j_sweep) {
            OracleCounter ctr;
            const TrotterPlan plan{gamma, total, j_value, ordering_from_name(trotter_cfg.ordering)};
            const CoinedState state = trotter_run(g, trotter_cfg.start, plan, ctr);
            const double error = (state.amps - exact_embedded).norm();
            json row;
            row["j"] = j_value;
            row["error"] = error;
            row["oracle_calls"] = ctr.quantum_calls;
            sweep.push_back(std::move(row));
            sweep_rows.push_back(
                {static_cast<double>(j_value), error, static_cast<double>(ctr.quantum_calls)});
        }
        result["j_sweep"] = std::move(sweep);
        if (!sweep_csv.empty()) {
            std::ofstream csv(sweep_csv, std::ios::binary);
            if (!csv) {
                throw GraphError("cannot open for writing: " + sweep_csv);
            }
            csv << "j,error,oracle_calls\n";
            for (const auto& row : sweep_rows) {
                csv << static_cast<long long>(row[0]) << "," << format_float(row[1]) << ","
                    << static_cast<long long>(row[2]) << "\n";
            }
        }
    }

    if (out_path.empty()) {
        std::cout << result.dump(2) << "\n";
    } else {
        write_json(out_path, result);
    }
    return 0;
}

// ------------------------------------------------------------------ main

void add_run_flags(CLI::App* cmd, RunConfig& flags, std::string& config_path) {
    cmd->add_option("--config", config_path, "run configuration JSON; flags override it");
    cmd->add_option("--graph", flags.graph_path, "graph JSON file");
    cmd->add_option("--generate", flags.generate_spec, "generator spec, e.g. 'cycle 16'");
    cmd->add_option("--graph-seed", flags.graph_seed, "seed for the generator spec");
    cmd->add_option("--walk", flags.walk, "walk kind");
    cmd->add_option("--start", flags.start, "start vertex");
    cmd->add_option("--alpha", flags.alpha, "acceptance probability (classical)");
    cmd->add_option("--gamma", flags.gamma, "hopping rate per unit time");
    cmd->add_option("--t", flags.time, "total evolution time");
    cmd->add_option("--steps", flags.steps, "discrete step count");
    cmd->add_option("--j", flags.slices, "trotter slice count");
    cmd->add_option("--samples", flags.samples, "continuous-time sample count");
    cmd->add_option("--coin", flags.coin, "coin kind: hadamard|grover|dft");
    cmd->add_option("--hamiltonian", flags.hamiltonian, "adjacency|laplacian");
    cmd->add_option("--ordering", flags.ordering, "interleaved|per-color-power");
    cmd->add_option("--seed", flags.seed, "RNG seed (required for stochastic walks)");
    cmd->add_option("--record-every", flags.record_every, "record cadence in steps/slices");
    cmd->add_option("--mixing-epsilon", flags.mixing_epsilon,
                    "TV-to-uniform threshold reported in the run report");
    cmd->add_option("--out-csv", flags.out_csv, "distribution CSV output path");
    cmd->add_option("--out-report", flags.out_report, "resource report JSON output path");
}

RunConfig merge_config(const CLI::App* cmd, const RunConfig& flags,
                       const std::string& config_path) {
    RunConfig cfg;
    if (!config_path.empty()) {
        cfg = config_from_json(read_json(config_path));
    }
    const auto touched = [cmd](const std::string& name) { return cmd->count(name) > 0; };
    if (touched("--graph")) cfg.graph_path = flags.graph_path;
    if (touched("--generate")) cfg.generate_spec = flags.generate_spec;
    if (touched("--graph-seed")) cfg.graph_seed = flags.graph_seed;
    if (touched("--walk")) cfg.walk = flags.walk;
    if (touched("--start")) cfg.start = flags.start;
    if (touched("--alpha")) cfg.alpha = flags.alpha;
    if (touched("--gamma")) cfg.gamma = flags.gamma;
    if (touched("--t")) cfg.time = flags.time;
    if (touched("--steps")) cfg.steps = flags.steps;
    if (touched("--j")) cfg.slices = flags.slices;
    if (touched("--samples")) cfg.samples = flags.samples;
    if (touched("--coin")) cfg.coin = flags.coin;
    if (touched("--hamiltonian")) cfg.hamiltonian = flags.hamiltonian;
    if (touched("--ordering")) cfg.ordering = flags.ordering;
    if (touched("--seed")) cfg.seed = flags.seed;
    if (touched("--record-every")) cfg.record_every = flags.record_every;
    if (touched("--mixing-epsilon")) cfg.mixing_epsilon = flags.mixing_epsilon;
    if (touched("--out-csv")) cfg.out_csv = flags.out_csv;
    if (touched("--out-report")) cfg.out_report = flags.out_report;
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"classical and quantum walks on general graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph file");
    std::vector<std::string> gen_spec;
    std::optional<std::uint64_t> gen_seed;
    std::string gen_output;
    gen->add_option("spec", gen_spec, "kind and parameters, e.g. cycle 16 | random 8 0.4")
        ->required()
        ->expected(-1);
    gen->add_option("--seed", gen_seed, "generator seed (glued-trees, random)");
    gen->add_option("-o,--output", gen_output, "output path")->required();

    // run
    auto* run = app.add_subcommand("run", "run one walk engine");
    RunConfig run_flags;
    std::string run_config_path;
    add_run_flags(run, run_flags, run_config_path);

    // report
    auto* report = app.add_subcommand("report", "emit the resource report only");
    RunConfig report_flags;
    std::string report_config_path;
    std::string report_out;
    add_run_flags(report, report_flags, report_config_path);
    report->add_option("--out", report_out, "write the report here instead of stdout");

    // compare
    auto* compare = app.add_subcommand("compare", "run two configs on one graph");
    std::string cmp_a, cmp_b, cmp_metric = "both", cmp_out, cmp_sweep_csv;
    std::vector<int> cmp_sweep;
    compare->add_option("--a", cmp_a, "config JSON for run A")->required();
    compare->add_option("--b", cmp_b, "config JSON for run B")->required();
    compare->add_option("--metric", cmp_metric, "tv|fidelity|both");
    compare->add_option("--out", cmp_out, "comparison JSON path (stdout if omitted)");
    compare->add_option("--j-sweep", cmp_sweep, "slice counts for the convergence table")
        ->delimiter(',');
    compare->add_option("--sweep-csv", cmp_sweep_csv, "write the sweep as CSV too");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            return cmd_gen(gen_spec, gen_seed, gen_output);
        }
        if (run->parsed()) {
            return cmd_run(merge_config(run, run_flags, run_config_path));
        }
        if (report->parsed()) {
            return cmd_report(merge_config(report, report_flags, report_config_path), report_out);
        }
        if (compare->parsed()) {
            if (cmp_metric != "tv" && cmp_metric != "fidelity" && cmp_metric != "both") {
                throw GraphError("unknown metric '" + cmp_metric + "'");
            }
            return cmd_compare(cmp_a, cmp_b, cmp_metric, cmp_out, cmp_sweep, cmp_sweep_csv);
        }
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
