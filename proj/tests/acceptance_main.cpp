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

// Acceptance suite: every release criterion as one pass/fail line, with the
// measured margin and elapsed time. Exit code is the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qgopt/graph_hamiltonian.hpp"
#include "qgopt/harness.hpp"

namespace {

namespace fs = std::filesystem;
using namespace qgopt;
using namespace qgopt::testing;

std::string g_cli_path;
fs::path g_work_dir;

struct Outcome {
    bool pass = false;
    std::string detail;
};

// --- 1. projector form vs XY form -----------------------------------------

Outcome check_projector_equivalence() {
    double worst = 0.0;
    SeededRng rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 5;  // 2..6
        const int max_edges = n * (n - 1) / 2;
        const int n_edges =
            static_cast<int>(rng.below(static_cast<std::uint64_t>(max_edges) + 1));
        const GraphInstance graph =
            random_weighted_graph(n, n_edges, 5000 + static_cast<std::uint64_t>(trial));

        const DenseMatrix projector = build_projector_matrix(graph, n);
        DenseMatrix xy = observable_matrix(build_ht_observable(graph), n);
        const double shift = graph.vertex_weight_sum() / 2.0;
        for (cdouble& v : xy.data) v *= 0.5;
        for (std::size_t k = 0; k < xy.dim; ++k) xy.at(k, k) += shift;

        worst = std::max(worst, max_abs_diff(projector, xy));
    }
    return {worst < 1e-12,
            "max elementwise diff " + std::to_string(worst) + " over 50 graphs"};
}

// --- 2. compiled objective soundness ---------------------------------------

Outcome check_compilation_soundness() {
    double worst = 0.0;
    SeededRng rng(202);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(9));  // 2..10
        const int max_edges = n * (n - 1) / 2;
        const int n_edges =
            1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_edges)));
        const std::uint64_t seed = 9000 + static_cast<std::uint64_t>(trial);

        QuboInstance inst;
        if (trial % 2 == 0) {
            const double lambda = 0.25 * static_cast<double>(rng.below(5));
            inst = gen_portfolio(n, n_edges, lambda, seed);
        } else {
            inst = gen_mvc(n, n_edges, 1.0, seed).first;
        }
        const auto compiled = qubo_to_observable(inst, convention_for(inst.kind));

        const std::uint64_t space = std::uint64_t{1} << n;
        const bool exhaustive = n <= 4;
        const int samples = exhaustive ? static_cast<int>(space) : 200;
        for (int s = 0; s < samples; ++s) {
            const std::uint64_t x =
                exhaustive ? static_cast<std::uint64_t>(s) : rng.below(space);
            const std::uint64_t basis =
                assignment_to_basis(x, n, compiled.convention);
            const StateVector state = init_basis(n, index_to_bitstring(basis, n));
            const double via_observable =
                expectation(state, compiled.observable) + compiled.offset;
            worst = std::max(worst, std::abs(via_observable - inst.objective(x)));
        }
    }
    return {worst < 1e-9,
            "max |<x|M|x> + offset - objective| = " + std::to_string(worst)};
}

// --- 3. edge order independence --------------------------------------------

// The edge terms of one flavor all commute, so applying a full XX (or YY)
// product in any edge order gives the same state.
Outcome check_order_independence() {
    double worst = 0.0;
    for (std::uint64_t draw = 0; draw < 20; ++draw) {
        const GraphInstance graph =
            random_weighted_graph(6, 8, 300 + draw, true);
        SeededRng rng(500 + draw);
        const double eta = rng.angle();

        std::vector<std::pair<int, int>> order;
        for (const auto& [edge, w] : graph.edges) {
            (void)w;
            order.push_back(edge);
        }
        std::vector<std::pair<int, int>> permuted = order;
        for (std::size_t k = permuted.size(); k-- > 1;) {
            std::swap(permuted[k], permuted[rng.below(k + 1)]);
        }

        for (const GateKind kind : {GateKind::XX, GateKind::YY}) {
            StateVector canonical = random_state(6, 400 + draw);
            StateVector reordered = canonical;
            for (const auto& edge : order) {
                apply_gate(canonical, Gate{kind, edge.first, edge.second, {}},
                           2 * eta * graph.edges.at(edge));
            }
            for (const auto& edge : permuted) {
                apply_gate(reordered, Gate{kind, edge.first, edge.second, {}},
                           2 * eta * graph.edges.at(edge));
            }
            worst = std::max(worst, max_amp_diff(canonical, reordered));
        }
    }
    return {worst < 1e-10,
            "max amplitude change " + std::to_string(worst) + " over 20 draws"};
}

// --- 4. gradient correctness ------------------------------------------------

Outcome check_gradients() {
    double worst_rel = 0.0;
    double smallest_ref = 1e300;
    for (int draw = 0; draw < 20; ++draw) {
        const int n = 6 + (draw % 7);  // 6..12
        const std::uint64_t seed = 600 + static_cast<std::uint64_t>(draw);
        const QuboInstance inst = gen_portfolio(n, 2 * n, 0.5, seed);
        const auto compiled = qubo_to_observable(inst, convention_for(inst.kind));

        AnsatzCircuit ansatz;
        if (draw % 2 == 0) {
            ansatz = build_qgoa(instance_graph(inst), 2);
        } else {
            ansatz = build_qaoa(compiled.observable, n, 2);
        }
        const std::vector<double> params = init_params(ansatz.layout, seed + 7);
        const auto adjoint =
            adjoint_gradient(ansatz.circuit, compiled.observable, params);
        const auto fd = finite_diff_gradient(ansatz.circuit, compiled.observable,
                                             params, 1e-5);
        for (std::size_t j = 0; j < adjoint.size(); ++j) {
            smallest_ref = std::min(smallest_ref, std::abs(fd[j]));
            const double rel =
                std::abs(adjoint[j] - fd[j]) / std::max(std::abs(fd[j]), 1e-4);
            worst_rel = std::max(worst_rel, rel);
        }
    }
    std::ostringstream detail;
    detail << "max relative error " << worst_rel << " (smallest reference component "
           << smallest_ref << ")";
    return {worst_rel < 1e-5, detail.str()};
}

// --- 5. cost formulas --------------------------------------------------------

Outcome check_cost_formulas() {
    std::vector<std::string> failures;
    auto expect = [&](const std::string& label, bool ok) {
        if (!ok) failures.push_back(label);
    };

    const PaperCost qgoa_p =
        paper_cost_model(Algorithm::Qgoa, CostProblem::Portfolio, 9, 30, 2);
    expect("portfolio qgoa closed form",
           qgoa_p.gates == GateCounts{96, 120} && qgoa_p.n_params == 38);
    const PaperCost qaoa_p =
        paper_cost_model(Algorithm::Qaoa, CostProblem::Portfolio, 9, 30, 20);
    expect("portfolio qaoa closed form",
           qaoa_p.gates == GateCounts{369, 600} && qaoa_p.n_params == 40);
    const PaperCost qgoa_m =
        paper_cost_model(Algorithm::Qgoa, CostProblem::Mvc, 12, 17, 4);
    expect("cover qgoa closed form",
           qgoa_m.gates == GateCounts{96, 136} && qgoa_m.n_params == 100);
    const PaperCost qaoa_m =
        paper_cost_model(Algorithm::Qaoa, CostProblem::Mvc, 12, 17, 10);
    expect("cover qaoa closed form",
           qaoa_m.gates == GateCounts{252, 170} && qaoa_m.n_params == 20);

    // Literal traversal matches the closed form exactly for vertex-cover
    // instances, and on the two-qubit column for portfolio.
    const auto [mvc, graph] = gen_mvc(12, 17, 1.0, 42);
    expect("cover qgoa traversal",
           count_gates(build_qgoa(graph, 4).circuit) == qgoa_m.gates);
    const auto mvc_compiled = qubo_to_observable(mvc, SpinConvention::OneIsPlusOne);
    expect("cover qaoa traversal",
           count_gates(build_qaoa(mvc_compiled.observable, 12, 10).circuit) ==
               qaoa_m.gates);

    const QuboInstance portfolio = gen_portfolio(9, 30, 0.5, 42);
    const GateCounts actual_qgoa =
        count_gates(build_qgoa(instance_graph(portfolio), 2).circuit);
    expect("portfolio qgoa two-qubit traversal",
           actual_qgoa.doubles == qgoa_p.gates.doubles);
    const auto pf_compiled =
        qubo_to_observable(portfolio, SpinConvention::ZeroIsPlusOne);
    expect("portfolio qaoa traversal",
           count_gates(build_qaoa(pf_compiled.observable, 9, 20).circuit) ==
               qaoa_p.gates);

    std::ostringstream detail;
    if (failures.empty()) {
        detail << "all table rows exact; portfolio qgoa traversal counts "
               << actual_qgoa.singles << " singles vs closed-form "
               << qgoa_p.gates.singles << " (logged, not asserted)";
    } else {
        for (const std::string& f : failures) detail << f << "; ";
    }
    return {failures.empty(), detail.str()};
}

// --- 6. portfolio benchmark ---------------------------------------------------

Outcome check_portfolio_benchmark() {
    const int n_seeds = 10;
    int good_seeds = 0;
    std::vector<double> qgoa_losses;
    std::vector<double> qaoa_losses;

    for (int s = 0; s < n_seeds; ++s) {
        const std::uint64_t seed = static_cast<std::uint64_t>(s);
        ExperimentConfig cfg;
        cfg.generator = GeneratorSpec{ProblemKind::Portfolio, 9, 30, 0.5, 1.0, seed};
        cfg.adam.tol = 0.0;

        cfg.adam.max_iters = 500;
        const RunResult qgoa = run_single(cfg, Algorithm::Qgoa, 2, seed);
        cfg.adam.max_iters = 2000;
        const RunResult qaoa = run_single(cfg, Algorithm::Qaoa, 8, seed);

        qgoa_losses.push_back(qgoa.final_loss);
        qaoa_losses.push_back(qaoa.final_loss);
        if (qgoa.p_optimal.value_or(0.0) >= 0.5 &&
            qgoa.argmax_match.value_or(false)) {
            ++good_seeds;
        }
    }

    auto median = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        return 0.5 * (v[(v.size() - 1) / 2] + v[v.size() / 2]);
    };
    const double qgoa_median = median(qgoa_losses);
    const double qaoa_median = median(qaoa_losses);

    std::ostringstream detail;
    detail << good_seeds << "/10 seeds reach p_optimal >= 0.5 with matching "
           << "argmax; median loss " << qgoa_median << " (qgoa L2) vs "
           << qaoa_median << " (qaoa L8)";
    return {good_seeds >= 8 && qgoa_median <= qaoa_median, detail.str()};
}

// --- 7. vertex-cover benchmark -------------------------------------------------

Outcome check_cover_benchmark() {
    const int n_seeds = 10;
    int matches = 0;
    for (int s = 0; s < n_seeds; ++s) {
        const std::uint64_t seed = static_cast<std::uint64_t>(s);
        ExperimentConfig cfg;
        cfg.generator = GeneratorSpec{ProblemKind::Mvc, 12, 17, 0.5, 1.0, seed};
        cfg.adam.tol = 0.0;
        cfg.adam.max_iters = 500;
        const RunResult result = run_single(cfg, Algorithm::Qgoa, 4, seed);
        if (result.argmax_match.value_or(false)) ++matches;
    }
    return {matches >= 8,
            std::to_string(matches) + "/10 seeds place the most probable "
            "assignment on an optimal cover"};
}

// --- 8. locality of aggregation -------------------------------------------------

Outcome check_locality() {
    double worst_decoupled = 0.0;
    double weakest_coupled = 1e300;
    SeededRng rng(808);
    for (int draw = 0; draw < 20; ++draw) {
        const std::array<double, 3> x{rng.angle(), rng.angle(), rng.angle()};
        const std::array<double, 3> ty{rng.angle(), rng.angle(), rng.angle()};
        const std::array<double, 3> tz{rng.angle(), rng.angle(), rng.angle()};

        const auto off = locality_probe(x, ty, tz, 0.0);
        worst_decoupled = std::max(worst_decoupled, std::abs(off[1][2]));

        const auto on = locality_probe(x, ty, tz, 0.7);
        weakest_coupled = std::min(weakest_coupled, std::abs(on[1][2]));
    }
    std::ostringstream detail;
    detail << "non-neighbor sensitivity " << worst_decoupled
           << " at eta=0; weakest coupling " << weakest_coupled
           << " at eta=0.7";
    return {worst_decoupled < 1e-8 && weakest_coupled >= 1e-3, detail.str()};
}

// --- 9. magnetization conservation ----------------------------------------------

Outcome check_conservation() {
    double worst = 0.0;
    for (int n = 3; n <= 10; ++n) {
        const GraphInstance graph = random_weighted_graph(
            n, std::min(2 * n, n * (n - 1) / 2), 900 + static_cast<std::uint64_t>(n));
        const auto [circuit, layout] = build_qgoa(graph, 1);
        Observable total_z;
        for (int q = 0; q < n; ++q) total_z.add_term(PauliString::z(q));

        SeededRng rng(910 + static_cast<std::uint64_t>(n));
        for (int trial = 0; trial < 20; ++trial) {
            const double eta = rng.angle();
            StateVector state = random_state(
                n, 1000 + static_cast<std::uint64_t>(n * 100 + trial));
            const double before = expectation(state, total_z);
            for (const Gate& gate : circuit.gates) {
                if (gate.slot.is_bound() &&
                    layout.labels[static_cast<std::size_t>(gate.slot.param_index)]
                            .role == ParamRole::Eta) {
                    apply_gate(state, gate, gate.slot.value * eta);
                }
            }
            worst = std::max(worst, std::abs(expectation(state, total_z) - before));
        }
    }
    return {worst < 1e-10,
            "max drift of <sum Z> = " + std::to_string(worst)};
}

// --- 10. scalability command shape ------------------------------------------------

Outcome check_scale_command() {
    const fs::path out_dir = g_work_dir / "scale";
    fs::remove_all(out_dir);
    const std::string command =
        g_cli_path + " scale --sizes 4..12 --density 2 --seeds 2 " +
        "--max-iters 150 --out-dir " + out_dir.string() + " >/dev/null 2>&1";
    if (std::system(command.c_str()) != 0) {
        return {false, "scale command exited nonzero"};
    }

    std::ifstream csv(out_dir / "scale.csv");
    if (!csv) return {false, "scale.csv missing"};
    std::string line;
    std::getline(csv, line);  // header
    std::map<std::string, std::vector<long>> two_qubit_columns;
    while (std::getline(csv, line)) {
        std::istringstream row(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(row, field, ',')) fields.push_back(field);
        if (fields.size() != 8) return {false, "unexpected scale.csv row: " + line};
        two_qubit_columns[fields[2]].push_back(std::stol(fields[4]));
    }
    if (two_qubit_columns.size() != 2) {
        return {false, "expected qgoa and qaoa rows"};
    }
    for (const auto& [alg, column] : two_qubit_columns) {
        if (column.size() != 9) {
            return {false, alg + " column has " + std::to_string(column.size()) +
                               " sizes, expected 9"};
        }
        for (std::size_t k = 1; k < column.size(); ++k) {
            if (column[k] < column[k - 1]) {
                return {false, alg + " two-qubit gates decrease at step " +
                                   std::to_string(k)};
            }
        }
    }
    return {true, "two-qubit gate columns nondecreasing over n=4..12 for both "
                  "algorithms"};
}

struct Criterion {
    std::string name;
    double time_limit_s;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    g_cli_path = (fs::path(argv[0]).parent_path() / "../tools/qgopt").string();
    g_work_dir = fs::temp_directory_path() / "qgopt_acceptance";
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--cli" && i + 1 < argc) {
            g_cli_path = argv[++i];
        } else if (arg == "--work-dir" && i + 1 < argc) {
            g_work_dir = argv[++i];
        } else if (arg == "--criterion" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: " << argv[0]
                      << " [--cli PATH] [--work-dir DIR] [--criterion N]\n";
            return 2;
        }
    }
    fs::create_directories(g_work_dir);

    const std::vector<Criterion> criteria{
        {"projector-form graph Hamiltonian equals its XY form", 10.0,
         check_projector_equivalence},
        {"compiled observables reproduce the classical objective", 120.0,
         check_compilation_soundness},
        {"edge order inside XX/YY blocks is irrelevant", 60.0,
         check_order_independence},
        {"adjoint gradients match central finite differences", 120.0,
         check_gradients},
        {"closed-form cost tables and traversal counts", 30.0,
         check_cost_formulas},
        {"9-qubit portfolio benchmark (qgoa L2 vs qaoa L8)", 1800.0,
         check_portfolio_benchmark},
        {"12-qubit vertex-cover benchmark (qgoa L4)", 2700.0,
         check_cover_benchmark},
        {"aggregation couples neighbors only", 60.0, check_locality},
        {"aggregation block conserves total magnetization", 60.0,
         check_conservation},
        {"scale command emits nondecreasing two-qubit columns", 600.0,
         check_scale_command},
    };

    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        if (only != 0 && static_cast<int>(k + 1) != only) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[k].run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        const bool in_time = elapsed < criteria[k].time_limit_s;
        const bool pass = outcome.pass && in_time;
        if (!pass) ++failures;
        std::printf("[%2zu/10] %s  %s (%s; %.1fs)\n", k + 1,
                    pass ? "PASS" : "FAIL", criteria[k].name.c_str(),
                    outcome.detail.c_str(), elapsed);
        std::fflush(stdout);
        if (outcome.pass && !in_time) {
            std::printf("        exceeded the %.0fs budget\n",
                        criteria[k].time_limit_s);
        }
    }
    return failures;
}
