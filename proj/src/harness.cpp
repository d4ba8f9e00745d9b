// Copyright 2026 The qgopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgopt/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qgopt {

namespace {

constexpr int kOracleMaxQubits = 24;
constexpr int kStoredDistributionMaxQubits = 16;
constexpr double kProbeEps = 1e-5;

CostProblem cost_problem_for(ProblemKind kind) {
    // Generic instances share the portfolio cost shape (weighted graph with
    // diagonal terms).
    return kind == ProblemKind::Mvc ? CostProblem::Mvc : CostProblem::Portfolio;
}

double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t k = values.size() / 2;
    if (values.size() % 2 == 1) return values[k];
    return 0.5 * (values[k - 1] + values[k]);
}

long lower_median_of(std::vector<long> values) {
    std::sort(values.begin(), values.end());
    return values[(values.size() - 1) / 2];
}

}  // namespace

int thread_count_from_env() {
    if (const char* env = std::getenv("QGOPT_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

QuboInstance resolve_instance(const ExperimentConfig& cfg) {
    if (!cfg.instance_path.empty()) return load_instance(cfg.instance_path);
    if (!cfg.generator) {
        throw std::invalid_argument(
            "experiment needs an instance path or a generator spec");
    }
    const GeneratorSpec& g = *cfg.generator;
    switch (g.kind) {
        case ProblemKind::Portfolio:
            return gen_portfolio(g.n, g.n_edges, g.lambda, g.seed);
        case ProblemKind::Mvc:
            return gen_mvc(g.n, g.n_edges, g.b, g.seed).first;
        case ProblemKind::Generic:
            break;
    }
    throw std::invalid_argument("no generator for generic instances");
}

std::pair<double, bool> success_metrics(const std::vector<double>& probs,
                                        const OracleResult& oracle) {
    double p_optimal = 0.0;
    for (std::uint64_t a : oracle.optimal_assignments) {
        if (a < probs.size()) p_optimal += probs[a];
    }
    double top = 0.0;
    for (double p : probs) top = std::max(top, p);
    bool argmax_match = false;
    for (std::uint64_t a = 0; a < probs.size(); ++a) {
        if (probs[a] == top &&
            std::binary_search(oracle.optimal_assignments.begin(),
                               oracle.optimal_assignments.end(), a)) {
            argmax_match = true;
            break;
        }
    }
    return {p_optimal, argmax_match};
}

RunResult run_single(const ExperimentConfig& cfg, Algorithm alg, int layers,
                     std::uint64_t seed) {
    const QuboInstance inst = resolve_instance(cfg);
    const SpinConvention conv = convention_for(inst.kind);
    const CompiledObservable compiled = qubo_to_observable(inst, conv);
    const GraphInstance graph = aggregation_graph(inst);

    const AnsatzCircuit ansatz =
        alg == Algorithm::Qgoa
            ? build_qgoa(graph, layers)
            : build_qaoa(compiled.observable, inst.n, layers);

    RunResult result;
    result.alg = alg;
    result.layers = layers;
    result.seed = seed;
    result.instance = instance_label(inst);
    result.adam = cfg.adam;
    result.adam.seed = seed;
    result.max_iters = cfg.adam.max_iters;

    const Observable objective = compiled.with_offset();
    std::vector<double> init = init_params(ansatz.layout, seed);
    result.trace = adam_minimize(ansatz.circuit, objective, std::move(init),
                                 result.adam, cfg.engine);
    result.iterations = result.trace.iterations();
    result.converged = result.trace.converged_at.has_value();

    const StateVector state =
        run_circuit(ansatz.circuit, result.trace.final_params);
    result.final_loss = expectation(state, objective);
    const std::vector<double> basis_probs = probabilities(state);

    // Decode the most probable basis state into a variable assignment.
    std::uint64_t argmax_index = 0;
    for (std::uint64_t k = 1; k < basis_probs.size(); ++k) {
        if (basis_probs[k] > basis_probs[argmax_index]) argmax_index = k;
    }
    result.argmax_assignment = index_to_bitstring(
        assignment_to_basis(argmax_index, inst.n, conv), inst.n);

    if (inst.n <= kOracleMaxQubits) {
        const OracleResult oracle = brute_force(inst);
        result.oracle_value = oracle.optimal_value;
        if (inst.n <= kStoredDistributionMaxQubits) {
            result.distribution.resize(basis_probs.size());
            for (std::uint64_t a = 0; a < basis_probs.size(); ++a) {
                result.distribution[a] =
                    basis_probs[assignment_to_basis(a, inst.n, conv)];
            }
            const auto [p_optimal, argmax_match] =
                success_metrics(result.distribution, oracle);
            result.p_optimal = p_optimal;
            result.argmax_match = argmax_match;
        } else {
            double p_optimal = 0.0;
            for (std::uint64_t a : oracle.optimal_assignments) {
                p_optimal += basis_probs[assignment_to_basis(a, inst.n, conv)];
            }
            result.p_optimal = p_optimal;
            const std::uint64_t argmax_assignment =
                assignment_to_basis(argmax_index, inst.n, conv);
            result.argmax_match = std::binary_search(
                oracle.optimal_assignments.begin(),
                oracle.optimal_assignments.end(), argmax_assignment);
        }
    }

    result.actual_gates = count_gates(ansatz.circuit);
    result.paper =
        paper_cost_model(alg, cost_problem_for(inst.kind), inst.n,
                         graph.edge_count(), layers);

    std::ostringstream trace_name;
    trace_name << "traces/" << algorithm_name(alg) << "_L" << layers << "_s"
               << seed << ".csv";
    result.trace_path = trace_name.str();
    return result;
}

std::vector<RunResult> sweep(const ExperimentConfig& cfg,
                             const std::vector<Algorithm>& algs,
                             const std::vector<int>& layers,
                             const std::vector<std::uint64_t>& seeds) {
    if (layers.empty() || seeds.empty()) {
        throw std::invalid_argument("sweep needs at least one layer and seed");
    }

    struct Cell {
        Algorithm alg;
        int layers;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (Algorithm alg : algs) {
        for (int l : layers) {
            for (std::uint64_t s : seeds) cells.push_back({alg, l, s});
        }
    }

    std::vector<std::optional<RunResult>> slots(cells.size());
    std::atomic<std::size_t> next{0};
    std::mutex log_mutex;
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            const Cell& cell = cells[i];
            try {
                slots[i] = run_single(cfg, cell.alg, cell.layers, cell.seed);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(log_mutex);
                std::cerr << "sweep cell " << algorithm_name(cell.alg) << " L"
                          << cell.layers << " seed " << cell.seed
                          << " failed: " << e.what() << "\n";
            }
        }
    };

    const int n_threads = std::min<int>(thread_count_from_env(),
                                        static_cast<int>(cells.size()));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_threads));
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    std::vector<RunResult> results;
    results.reserve(cells.size());
    for (std::optional<RunResult>& slot : slots) {
        if (slot) results.push_back(std::move(*slot));
    }
    return results;
}

std::vector<SweepSummaryRow> summarize_sweep(
    const std::vector<RunResult>& results) {
    std::vector<SweepSummaryRow> summary;
    for (const RunResult& r : results) {
        auto it = std::find_if(summary.begin(), summary.end(),
                               [&](const SweepSummaryRow& row) {
                                   return row.alg == r.alg &&
                                          row.layers == r.layers;
                               });
        if (it == summary.end()) {
            summary.push_back({r.alg, r.layers, 0, 0.0, 0.0, 0.0});
            it = summary.end() - 1;
        }
        ++it->n_seeds;
    }
    for (SweepSummaryRow& row : summary) {
        std::vector<double> losses;
        int matches = 0;
        for (const RunResult& r : results) {
            if (r.alg != row.alg || r.layers != row.layers) continue;
            losses.push_back(r.final_loss);
            if (r.argmax_match.value_or(false)) ++matches;
        }
        row.median_final_loss = median_of(losses);
        row.best_final_loss = *std::min_element(losses.begin(), losses.end());
        row.argmax_rate = static_cast<double>(matches) / row.n_seeds;
    }
    std::sort(summary.begin(), summary.end(),
              [](const SweepSummaryRow& a, const SweepSummaryRow& b) {
                  return std::pair{algorithm_name(a.alg), a.layers} <
                         std::pair{algorithm_name(b.alg), b.layers};
              });
    return summary;
}

std::optional<int> best_layer(const std::vector<SweepSummaryRow>& summary,
                              Algorithm alg) {
    std::optional<int> best;
    double best_loss = 0.0;
    for (const SweepSummaryRow& row : summary) {
        if (row.alg != alg) continue;
        if (!best || row.median_final_loss < best_loss) {
            best = row.layers;
            best_loss = row.median_final_loss;
        }
    }
    return best;
}

std::vector<ScaleRow> scalability_curve(const ScaleConfig& cfg) {
    if (cfg.size_lo < 2 || cfg.size_hi < cfg.size_lo) {
        throw std::invalid_argument("bad size range");
    }
    std::vector<std::uint64_t> seeds;
    for (int s = 0; s < cfg.n_seeds; ++s) {
        seeds.push_back(static_cast<std::uint64_t>(s));
    }

    std::vector<ScaleRow> rows;
    for (int n = cfg.size_lo; n <= cfg.size_hi; ++n) {
        const long max_edges = static_cast<long>(n) * (n - 1) / 2;
        const int n_edges = static_cast<int>(
            std::min<long>(static_cast<long>(cfg.density) * n, max_edges));

        ExperimentConfig exp;
        exp.generator = GeneratorSpec{ProblemKind::Portfolio, n, n_edges,
                                      cfg.lambda, 1.0,
                                      cfg.instance_seed + static_cast<std::uint64_t>(n)};
        exp.adam = cfg.adam;

        for (Algorithm alg : {Algorithm::Qgoa, Algorithm::Qaoa}) {
            const std::vector<int>& layer_list =
                alg == Algorithm::Qgoa ? cfg.qgoa_layers : cfg.qaoa_layers;
            const std::vector<RunResult> results =
                sweep(exp, {alg}, layer_list, seeds);
            if (results.empty()) {
                std::cerr << "scale: no results for " << algorithm_name(alg)
                          << " at n=" << n << "\n";
                continue;
            }
            const auto summary = summarize_sweep(results);
            const int chosen = best_layer(summary, alg).value();

            ScaleRow row;
            row.n_qubits = n;
            row.n_edges = n_edges;
            row.alg = alg;
            row.layers = chosen;
            std::vector<long> iters;
            for (const RunResult& r : results) {
                if (r.layers != chosen) continue;
                row.two_qubit_gates = r.actual_gates.doubles;
                row.n_params = r.paper.n_params;
                iters.push_back(r.iterations);
            }
            row.t_iterations = lower_median_of(iters);
            row.classical_cost = row.t_iterations * row.n_params;
            rows.push_back(row);
        }
    }
    return rows;
}

std::array<std::array<double, 3>, 3> locality_probe(
    const std::array<double, 3>& x, const std::array<double, 3>& theta_y,
    const std::array<double, 3>& theta_z, double eta) {
    // Path 1-0-2: vertex 0 is the center, edges (0,1) and (0,2), unit weights.
    auto readouts = [&](const std::array<double, 3>& enc) {
        Circuit circuit(3, 0);
        for (int q = 0; q < 3; ++q) {
            circuit.add(Gate::ry(q, AngleSlot::fixed(enc[static_cast<std::size_t>(q)])));
        }
        for (int q = 0; q < 3; ++q) {
            circuit.add(Gate::ry(q, AngleSlot::fixed(theta_y[static_cast<std::size_t>(q)])));
            circuit.add(Gate::rz(q, AngleSlot::fixed(theta_z[static_cast<std::size_t>(q)])));
        }
        // The (0,2) edge aggregates first: the signal encoded on vertex 3
        // hops to the center, and the (0,1) factor then carries it into the
        // vertex-2 readout. Aggregating (0,1) first would commute that edge
        // past the Z readout of qubit 1 and hide the two-hop coupling.
        for (int other : {2, 1}) {
            circuit.add(Gate::xx(0, other, AngleSlot::fixed(2.0 * eta)));
            circuit.add(Gate::yy(0, other, AngleSlot::fixed(2.0 * eta)));
        }
        const StateVector state = run_circuit(circuit, {});
        std::array<double, 3> z{};
        for (int q = 0; q < 3; ++q) {
            z[static_cast<std::size_t>(q)] = expectation(
                state, make_observable({PauliString::z(q)}));
        }
        return z;
    };

    std::array<std::array<double, 3>, 3> sensitivity{};
    for (int j = 0; j < 3; ++j) {
        std::array<double, 3> up = x;
        std::array<double, 3> down = x;
        up[static_cast<std::size_t>(j)] += kProbeEps;
        down[static_cast<std::size_t>(j)] -= kProbeEps;
        const auto z_up = readouts(up);
        const auto z_down = readouts(down);
        for (int i = 0; i < 3; ++i) {
            sensitivity[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                (z_up[static_cast<std::size_t>(i)] -
                 z_down[static_cast<std::size_t>(i)]) /
                (2.0 * kProbeEps);
        }
    }
    return sensitivity;
}

}  // namespace qgopt
