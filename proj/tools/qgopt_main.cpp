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

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgopt/harness.hpp"
#include "qgopt/rng.hpp"

namespace {

using namespace qgopt;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// "A..B" (or a single integer) to an inclusive list.
std::vector<int> parse_range(const std::string& text) {
    const auto sep = text.find("..");
    if (sep == std::string::npos) return {std::stoi(text)};
    const int lo = std::stoi(text.substr(0, sep));
    const int hi = std::stoi(text.substr(sep + 2));
    if (lo > hi) throw CLI::ValidationError("range must satisfy A <= B");
    std::vector<int> values;
    for (int v = lo; v <= hi; ++v) values.push_back(v);
    return values;
}

std::vector<std::uint64_t> seed_list(int count) {
    std::vector<std::uint64_t> seeds;
    for (int s = 0; s < count; ++s) seeds.push_back(static_cast<std::uint64_t>(s));
    return seeds;
}

std::vector<Algorithm> parse_algs(const std::string& name) {
    if (name == "qgoa") return {Algorithm::Qgoa};
    if (name == "qaoa") return {Algorithm::Qaoa};
    if (name == "both") return {Algorithm::Qgoa, Algorithm::Qaoa};
    throw CLI::ValidationError("--alg must be qgoa, qaoa, or both");
}

void add_adam_flags(CLI::App* cmd, AdamConfig& adam) {
    cmd->add_option("--lr", adam.learning_rate, "ADAM learning rate");
    cmd->add_option("--beta1", adam.beta1, "ADAM first-moment decay");
    cmd->add_option("--beta2", adam.beta2, "ADAM second-moment decay");
    cmd->add_option("--eps", adam.epsilon, "ADAM denominator epsilon");
    cmd->add_option("--max-iters", adam.max_iters, "iteration budget");
    cmd->add_option("--tol", adam.tol, "trailing-window loss spread threshold");
    cmd->add_option("--window", adam.window, "convergence window length");
}

void print_run(const RunResult& r) {
    std::cout << algorithm_name(r.alg) << " L=" << r.layers
              << " seed=" << r.seed << " T=" << r.iterations
              << (r.converged ? " (converged)" : "")
              << " final_loss=" << fmt_double(r.final_loss);
    if (r.oracle_value) std::cout << " oracle=" << fmt_double(*r.oracle_value);
    if (r.p_optimal) std::cout << " p_optimal=" << fmt_double(*r.p_optimal);
    if (r.argmax_match) {
        std::cout << " argmax_match=" << (*r.argmax_match ? "true" : "false");
    }
    std::cout << " argmax=" << r.argmax_assignment << "\n";
}

int run_cli(int argc, char** argv) {
    CLI::App app{
        "qgopt: statevector experiments for graph-structured QUBO problems"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a seeded instance file");
    std::string gen_kind = "portfolio";
    int gen_n = 9;
    int gen_edges = 30;
    double gen_lambda = 0.5;
    double gen_b = 1.0;
    std::uint64_t gen_seed = 0;
    std::string gen_out = "instance.json";
    gen->add_option("--kind", gen_kind, "portfolio or mvc")->required();
    gen->add_option("--n", gen_n, "variable count")->required();
    gen->add_option("--edges", gen_edges, "edge count")->required();
    gen->add_option("--lambda", gen_lambda, "portfolio risk/return trade-off");
    gen->add_option("--b", gen_b, "vertex-cover penalty weight");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "output path");

    // solve
    auto* solve = app.add_subcommand("solve", "brute-force an instance");
    std::string solve_instance;
    solve->add_option("--instance", solve_instance, "instance file")->required();

    // run
    auto* run = app.add_subcommand("run", "optimize one configuration");
    std::string run_instance;
    std::string run_alg = "qgoa";
    int run_layers = 2;
    std::uint64_t run_seed = 0;
    std::string run_out_dir = "runs";
    AdamConfig run_adam;
    run->add_option("--instance", run_instance, "instance file")->required();
    run->add_option("--alg", run_alg, "qgoa or qaoa");
    run->add_option("--layers", run_layers, "layer count");
    run->add_option("--seed", run_seed, "initial-parameter seed");
    run->add_option("--out-dir", run_out_dir, "report directory");
    add_adam_flags(run, run_adam);

    // sweep
    auto* sw = app.add_subcommand("sweep", "layer x seed cross product");
    std::string sweep_instance;
    std::string sweep_alg = "both";
    std::string sweep_layers = "2..6";
    int sweep_seeds = 10;
    std::string sweep_out_dir = "sweep";
    AdamConfig sweep_adam;
    sw->add_option("--instance", sweep_instance, "instance file")->required();
    sw->add_option("--alg", sweep_alg, "qgoa, qaoa, or both");
    sw->add_option("--layers", sweep_layers, "layer range A..B");
    sw->add_option("--seeds", sweep_seeds, "number of seeds (0..k-1)");
    sw->add_option("--out-dir", sweep_out_dir, "report directory");
    add_adam_flags(sw, sweep_adam);

    // scale
    auto* scale = app.add_subcommand("scale", "resource curve over sizes");
    std::string scale_sizes = "4..12";
    int scale_density = 2;
    double scale_lambda = 0.5;
    int scale_seeds = 3;
    std::string scale_qgoa_layers = "2";
    std::string scale_qaoa_layers = "8";
    std::string scale_out_dir = "scale";
    AdamConfig scale_adam;
    scale_adam.max_iters = 300;
    scale->add_option("--sizes", scale_sizes, "qubit range A..B");
    scale->add_option("--density", scale_density, "edges per qubit");
    scale->add_option("--lambda", scale_lambda, "portfolio trade-off");
    scale->add_option("--seeds", scale_seeds, "seeds per cell");
    scale->add_option("--qgoa-layers", scale_qgoa_layers,
                      "layer list swept for qgoa (A..B or single)");
    scale->add_option("--qaoa-layers", scale_qaoa_layers,
                      "layer list swept for qaoa (A..B or single)");
    scale->add_option("--out-dir", scale_out_dir, "report directory");
    add_adam_flags(scale, scale_adam);

    // probe-locality
    auto* probe = app.add_subcommand(
        "probe-locality", "readout sensitivities on the 3-vertex path");
    double probe_eta = 0.7;
    std::uint64_t probe_seed = 0;
    probe->add_option("--eta", probe_eta, "aggregation angle");
    probe->add_option("--seed", probe_seed, "draw seed for angles");

    // report
    auto* report = app.add_subcommand("report",
                                      "rebuild summary.csv from runs.jsonl");
    std::string report_runs;
    std::string report_out_dir = "report";
    report->add_option("--runs", report_runs, "runs.jsonl path")->required();
    report->add_option("--out-dir", report_out_dir, "report directory");

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        QuboInstance inst;
        if (gen_kind == "portfolio") {
            inst = gen_portfolio(gen_n, gen_edges, gen_lambda, gen_seed);
        } else if (gen_kind == "mvc") {
            inst = gen_mvc(gen_n, gen_edges, gen_b, gen_seed).first;
        } else {
            std::cerr << "--kind must be portfolio or mvc\n";
            return 2;
        }
        save_instance(inst, gen_out);
        std::cout << "wrote " << gen_out << " (" << instance_label(inst)
                  << ")\n";
        return 0;
    }

    if (solve->parsed()) {
        const QuboInstance inst = load_instance(solve_instance);
        const OracleResult oracle = brute_force(inst);
        std::cout << "optimal_value " << fmt_double(oracle.optimal_value)
                  << "\n";
        std::cout << "evaluations " << oracle.evaluations << "\n";
        for (std::uint64_t a : oracle.optimal_assignments) {
            std::cout << "optimal " << index_to_bitstring(a, inst.n) << "\n";
        }
        return 0;
    }

    if (run->parsed()) {
        ExperimentConfig cfg;
        cfg.instance_path = run_instance;
        cfg.adam = run_adam;
        cfg.output_dir = run_out_dir;
        const RunResult result =
            run_single(cfg, parse_algs(run_alg).at(0), run_layers, run_seed);
        emit_report({result}, run_out_dir);
        print_run(result);
        if (result.actual_gates.singles != result.paper.gates.singles) {
            std::cerr << "note: traversal counts " << result.actual_gates.singles
                      << " single-qubit gates; the closed-form model counts "
                      << result.paper.gates.singles << "\n";
        }
        return 0;
    }

    if (sw->parsed()) {
        ExperimentConfig cfg;
        cfg.instance_path = sweep_instance;
        cfg.adam = sweep_adam;
        cfg.output_dir = sweep_out_dir;
        const auto results = sweep(cfg, parse_algs(sweep_alg),
                                   parse_range(sweep_layers),
                                   seed_list(sweep_seeds));
        emit_report(results, sweep_out_dir);
        const auto summary = summarize_sweep(results);
        write_sweep_summary(
            summary,
            (std::filesystem::path(sweep_out_dir) / "sweep_summary.csv").string());
        for (Algorithm alg : parse_algs(sweep_alg)) {
            if (auto best = best_layer(summary, alg)) {
                std::cout << algorithm_name(alg) << " best layer "
                          << *best << " by median final loss\n";
            }
        }
        std::cout << results.size() << " runs -> " << sweep_out_dir << "\n";
        return 0;
    }

    if (scale->parsed()) {
        ScaleConfig cfg;
        const auto sizes = parse_range(scale_sizes);
        cfg.size_lo = sizes.front();
        cfg.size_hi = sizes.back();
        cfg.density = scale_density;
        cfg.lambda = scale_lambda;
        cfg.n_seeds = scale_seeds;
        cfg.qgoa_layers = parse_range(scale_qgoa_layers);
        cfg.qaoa_layers = parse_range(scale_qaoa_layers);
        cfg.adam = scale_adam;
        const auto rows = scalability_curve(cfg);
        std::filesystem::create_directories(scale_out_dir);
        const std::string path =
            (std::filesystem::path(scale_out_dir) / "scale.csv").string();
        write_scale_csv(rows, path);
        std::cout << "wrote " << path << "\n";
        return 0;
    }

    if (probe->parsed()) {
        SeededRng rng(probe_seed);
        std::array<double, 3> x{rng.angle(), rng.angle(), rng.angle()};
        std::array<double, 3> ty{rng.angle(), rng.angle(), rng.angle()};
        std::array<double, 3> tz{rng.angle(), rng.angle(), rng.angle()};
        const auto s = locality_probe(x, ty, tz, probe_eta);
        std::cout << "d<Z_i>/dx_j,j=1,j=2,j=3\n";
        for (int i = 0; i < 3; ++i) {
            std::cout << "i=" << (i + 1);
            for (int j = 0; j < 3; ++j) {
                std::cout << "," << fmt_double(s[i][j]);
            }
            std::cout << "\n";
        }
        return 0;
    }

    if (report->parsed()) {
        const auto results = load_runs(report_runs);
        emit_report(results, report_out_dir);
        write_sweep_summary(
            summarize_sweep(results),
            (std::filesystem::path(report_out_dir) / "sweep_summary.csv").string());
        std::cout << results.size() << " runs -> " << report_out_dir << "\n";
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
