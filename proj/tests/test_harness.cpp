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

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "qgopt/harness.hpp"

using namespace qgopt;
using namespace qgopt::testing;

namespace {

namespace fs = std::filesystem;

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ExperimentConfig path_mvc_config() {
    static const fs::path path = [] {
        GraphInstance graph(3);
        graph.add_edge(0, 1, 1.0);
        graph.add_edge(0, 2, 1.0);
        const fs::path p = fs::temp_directory_path() / "qgopt_path_mvc.json";
        save_instance(mvc_qubo(graph, 1.0), p.string());
        return p;
    }();
    ExperimentConfig cfg;
    cfg.instance_path = path.string();
    cfg.adam.max_iters = 300;
    cfg.adam.tol = 0.0;
    return cfg;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("run_single solves the path cover") {
    const ExperimentConfig cfg = path_mvc_config();
    const RunResult result = run_single(cfg, Algorithm::Qgoa, 2, 0);

    REQUIRE(result.argmax_match.has_value());
    CHECK(*result.argmax_match);
    CHECK(result.argmax_assignment == "001");
    REQUIRE(result.oracle_value.has_value());
    CHECK(*result.oracle_value == 1.0);
    CHECK(result.final_loss >= *result.oracle_value - 1e-9);

    // Metric consistency against the stored distribution.
    const OracleResult oracle = brute_force(resolve_instance(cfg));
    const auto [p_optimal, argmax_match] =
        success_metrics(result.distribution, oracle);
    CHECK(p_optimal == *result.p_optimal);
    CHECK(argmax_match == *result.argmax_match);

    // Cost cross-check is exact for vertex-cover instances.
    CHECK(result.actual_gates == result.paper.gates);
}

TEST_CASE("zero-angle qaoa spreads mass uniformly") {
    const ExperimentConfig cfg = path_mvc_config();
    const QuboInstance inst = resolve_instance(cfg);
    const auto compiled = qubo_to_observable(inst, convention_for(inst.kind));
    const auto [circuit, layout] = build_qaoa(compiled.observable, 3, 1);
    const StateVector state = run_circuit(circuit, std::vector<double>{0.0, 0.0});
    const OracleResult oracle = brute_force(inst);
    const auto [p_optimal, argmax_match] =
        success_metrics(probabilities(state), oracle);
    CHECK(p_optimal ==
          doctest::Approx(static_cast<double>(oracle.optimal_assignments.size()) / 8.0));
    CHECK(argmax_match);  // ties include an optimal assignment
}

TEST_CASE("success metrics") {
    OracleResult oracle;
    oracle.optimal_value = 0.0;
    oracle.optimal_assignments = {2};
    std::vector<double> point(8, 0.0);
    point[2] = 1.0;
    const auto [p1, m1] = success_metrics(point, oracle);
    CHECK(p1 == 1.0);
    CHECK(m1);

    oracle.optimal_assignments = {2, 5};
    const std::vector<double> uniform(8, 0.125);
    const auto [p2, m2] = success_metrics(uniform, oracle);
    CHECK(p2 == doctest::Approx(0.25));
    CHECK(m2);

    oracle.optimal_assignments = {7};
    std::vector<double> off(8, 0.0);
    off[0] = 0.9;
    off[7] = 0.1;
    const auto [p3, m3] = success_metrics(off, oracle);
    CHECK(p3 == doctest::Approx(0.1));
    CHECK_FALSE(m3);
}

TEST_CASE("sweep covers the cross product in canonical order") {
    ExperimentConfig cfg = path_mvc_config();
    cfg.adam.max_iters = 40;
    const auto results = sweep(cfg, {Algorithm::Qgoa, Algorithm::Qaoa},
                               {1, 2}, {0, 1});
    REQUIRE(results.size() == 8);

    const auto summary = summarize_sweep(results);
    CHECK(summary.size() == 4);
    for (const SweepSummaryRow& row : summary) CHECK(row.n_seeds == 2);
    CHECK(best_layer(summary, Algorithm::Qgoa).has_value());
}

TEST_CASE("sweep reports are deterministic") {
    ExperimentConfig cfg = path_mvc_config();
    cfg.adam.max_iters = 25;
    const fs::path dir_a = fresh_dir("qgopt_sweep_a");
    const fs::path dir_b = fresh_dir("qgopt_sweep_b");
    emit_report(sweep(cfg, {Algorithm::Qgoa}, {1, 2}, {0, 1}), dir_a.string());
    emit_report(sweep(cfg, {Algorithm::Qgoa}, {1, 2}, {0, 1}), dir_b.string());
    CHECK(slurp(dir_a / "summary.csv") == slurp(dir_b / "summary.csv"));
    CHECK(slurp(dir_a / "runs.jsonl") == slurp(dir_b / "runs.jsonl"));
}

TEST_CASE("reports round-trip and order stably") {
    const ExperimentConfig cfg = path_mvc_config();
    const fs::path dir = fresh_dir("qgopt_report");

    SUBCASE("empty results produce a headers-only csv") {
        emit_report({}, dir.string());
        CHECK(slurp(dir / "summary.csv") ==
              "alg,layer,seed,T,final_loss,p_optimal,argmax_match,n1_actual,"
              "n2_actual,n1_paper,n2_paper,np\n");
        CHECK(slurp(dir / "runs.jsonl").empty());
    }

    SUBCASE("one result round-trips") {
        ExperimentConfig quick = cfg;
        quick.adam.max_iters = 30;
        const RunResult result = run_single(quick, Algorithm::Qgoa, 1, 4);
        emit_report({result}, dir.string());
        const auto loaded = load_runs((dir / "runs.jsonl").string());
        REQUIRE(loaded.size() == 1);
        CHECK(loaded[0].equivalent(result));
        CHECK(fs::exists(dir / result.trace_path));

        // Trace rows carry one line per iteration plus the header.
        std::istringstream trace(slurp(dir / result.trace_path));
        std::string line;
        int lines = 0;
        while (std::getline(trace, line)) ++lines;
        CHECK(lines == result.iterations + 1);
    }

    SUBCASE("rows are ordered by algorithm, layer, seed") {
        ExperimentConfig quick = cfg;
        quick.adam.max_iters = 5;
        std::vector<RunResult> results;
        for (std::uint64_t seed : {1, 0}) {
            for (int layers : {2, 1}) {
                results.push_back(
                    run_single(quick, Algorithm::Qgoa, layers, seed));
            }
        }
        emit_report(results, dir.string());
        const auto loaded = load_runs((dir / "runs.jsonl").string());
        REQUIRE(loaded.size() == 4);
        CHECK(loaded[0].layers == 1);
        CHECK(loaded[0].seed == 0);
        CHECK(loaded[3].layers == 2);
        CHECK(loaded[3].seed == 1);
    }

    SUBCASE("unwritable directories fail with the path in the message") {
        CHECK_THROWS_WITH_AS(emit_report({}, "/proc/qgopt_nope"),
                             doctest::Contains("/proc/qgopt_nope"),
                             std::runtime_error);
    }
}

TEST_CASE("locality probe separates neighbors from non-neighbors") {
    SeededRng rng(42);
    for (int draw = 0; draw < 5; ++draw) {
        const std::array<double, 3> x{rng.angle(), rng.angle(), rng.angle()};
        const std::array<double, 3> ty{rng.angle(), rng.angle(), rng.angle()};
        const std::array<double, 3> tz{rng.angle(), rng.angle(), rng.angle()};

        // Without aggregation, readout 2 cannot see encoding 3 (vertices 2
        // and 3 are not adjacent), while the self term survives.
        const auto decoupled = locality_probe(x, ty, tz, 0.0);
        CHECK(std::abs(decoupled[1][2]) < 1e-8);
        CHECK(std::abs(decoupled[2][1]) < 1e-8);
        CHECK(std::abs(decoupled[1][1]) > 1e-4);

        // With aggregation the neighbor coupling through the center shows up.
        const auto coupled = locality_probe(x, ty, tz, 0.7);
        CHECK(std::abs(coupled[1][0]) > 1e-4);
    }
}

TEST_CASE("scalability rows carry consistent arithmetic") {
    ScaleConfig cfg;
    cfg.size_lo = 4;
    cfg.size_hi = 6;
    cfg.n_seeds = 2;
    cfg.adam.max_iters = 30;
    const auto rows = scalability_curve(cfg);
    REQUIRE(rows.size() == 6);  // two algorithms per size
    for (const ScaleRow& row : rows) {
        CHECK(row.classical_cost == row.t_iterations * row.n_params);
        CHECK(row.two_qubit_gates > 0);
    }
}

}  // TEST_SUITE
