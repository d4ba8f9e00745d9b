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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgopt/adam.hpp"
#include "qgopt/ansatz.hpp"
#include "qgopt/problems.hpp"

namespace qgopt {

struct GeneratorSpec {
    ProblemKind kind = ProblemKind::Portfolio;
    int n = 0;
    int n_edges = 0;
    double lambda = 0.5;
    double b = 1.0;
    std::uint64_t seed = 0;
};

struct ExperimentConfig {
    std::string instance_path;               // empty: use the generator
    std::optional<GeneratorSpec> generator;  // ignored when a path is set
    AdamConfig adam;
    GradientEngine engine = GradientEngine::Adjoint;
    std::string output_dir = ".";
};

/// Outcome of one optimized run. Success metrics are empty when the oracle
/// bound (n > 24) rules out brute force. The final distribution is stored in
/// assignment order (basis probabilities decoded through the compilation
/// convention) for systems up to 16 qubits.
struct RunResult {
    Algorithm alg = Algorithm::Qgoa;
    int layers = 1;
    std::uint64_t seed = 0;
    std::string instance;
    AdamConfig adam;

    int iterations = 0;
    int max_iters = 0;
    bool converged = false;
    double final_loss = 0.0;

    std::optional<double> oracle_value;
    std::optional<double> p_optimal;
    std::optional<bool> argmax_match;
    std::string argmax_assignment;

    GateCounts actual_gates;
    PaperCost paper;
    std::string trace_path;
    std::vector<double> distribution;

    OptTrace trace;  // not serialized; emit_report writes it to a CSV

    bool equivalent(const RunResult& other) const;  // serialized fields only
};

/// (p_optimal, argmax_match) of an assignment-ordered distribution against
/// the oracle ties. p_optimal sums the probability on optimal assignments;
/// argmax matches when any maximal-probability assignment is optimal.
std::pair<double, bool> success_metrics(const std::vector<double>& probs,
                                        const OracleResult& oracle);

QuboInstance resolve_instance(const ExperimentConfig& cfg);

RunResult run_single(const ExperimentConfig& cfg, Algorithm alg, int layers,
                     std::uint64_t seed);

/// Full cross product of algorithms x layers x seeds. Cells run on
/// QGOPT_THREADS workers (hardware concurrency by default); results come
/// back in canonical (alg, layer, seed) order regardless of scheduling.
/// A failed cell is reported on stderr and skipped.
std::vector<RunResult> sweep(const ExperimentConfig& cfg,
                             const std::vector<Algorithm>& algs,
                             const std::vector<int>& layers,
                             const std::vector<std::uint64_t>& seeds);

struct SweepSummaryRow {
    Algorithm alg;
    int layers = 0;
    int n_seeds = 0;
    double median_final_loss = 0.0;
    double best_final_loss = 0.0;
    double argmax_rate = 0.0;
};

std::vector<SweepSummaryRow> summarize_sweep(
    const std::vector<RunResult>& results);

/// Layer with the lowest median final loss for the algorithm.
std::optional<int> best_layer(const std::vector<SweepSummaryRow>& summary,
                              Algorithm alg);

struct ScaleConfig {
    int size_lo = 4;
    int size_hi = 12;
    int density = 2;  // edges = min(density * n, n(n-1)/2)
    double lambda = 0.5;
    int n_seeds = 3;
    std::vector<int> qgoa_layers = {2};
    std::vector<int> qaoa_layers = {8};
    AdamConfig adam;
    std::uint64_t instance_seed = 1;
};

struct ScaleRow {
    int n_qubits = 0;
    int n_edges = 0;
    Algorithm alg = Algorithm::Qgoa;
    int layers = 0;
    long two_qubit_gates = 0;
    long t_iterations = 0;  // lower median across seeds at the best layer
    long n_params = 0;
    long classical_cost = 0;  // t_iterations * n_params
};

/// Resource curve over system sizes: per size, a seeded sparse portfolio
/// instance is optimized for each algorithm over its layer list; the row
/// reports the two-qubit gate count and classical cost at the best layer.
std::vector<ScaleRow> scalability_curve(const ScaleConfig& cfg);

/// Sensitivity of single-qubit Z readouts to the encoding angles on the
/// 3-vertex path 1-0-2. The circuit is RY(x_i) per qubit, RY(theta_y_i) and
/// RZ(theta_z_i) per qubit, then the XX+YY evolution of the two edges with
/// shared angle parameter eta. Entry [i][j] = d<Z_i>/dx_j by central
/// differences.
std::array<std::array<double, 3>, 3> locality_probe(
    const std::array<double, 3>& x, const std::array<double, 3>& theta_y,
    const std::array<double, 3>& theta_z, double eta);

/// Writes runs.jsonl, summary.csv, and traces/<id>.csv under output_dir.
/// Floats are serialized with 17 significant digits.
void emit_report(const std::vector<RunResult>& results,
                 const std::string& output_dir);

std::vector<RunResult> load_runs(const std::string& jsonl_path);

void write_sweep_summary(const std::vector<SweepSummaryRow>& summary,
                         const std::string& path);

void write_scale_csv(const std::vector<ScaleRow>& rows,
                     const std::string& path);

int thread_count_from_env();

}  // namespace qgopt
