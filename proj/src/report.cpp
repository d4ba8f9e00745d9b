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

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qgopt/harness.hpp"

namespace qgopt {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "qgoa") return Algorithm::Qgoa;
    if (name == "qaoa") return Algorithm::Qaoa;
    throw std::runtime_error("unknown algorithm \"" + name + "\"");
}

bool before(const RunResult& a, const RunResult& b) {
    return std::tuple{std::string(algorithm_name(a.alg)), a.layers, a.seed} <
           std::tuple{std::string(algorithm_name(b.alg)), b.layers, b.seed};
}

void write_jsonl_line(std::ofstream& out, const RunResult& r) {
    out << "{\"alg\": \"" << algorithm_name(r.alg) << "\""
        << ", \"layers\": " << r.layers << ", \"seed\": " << r.seed
        << ", \"instance\": \"" << json_escape(r.instance) << "\""
        << ", \"adam\": {\"learning_rate\": " << fmt_double(r.adam.learning_rate)
        << ", \"beta1\": " << fmt_double(r.adam.beta1)
        << ", \"beta2\": " << fmt_double(r.adam.beta2)
        << ", \"epsilon\": " << fmt_double(r.adam.epsilon)
        << ", \"max_iters\": " << r.adam.max_iters
        << ", \"tol\": " << fmt_double(r.adam.tol)
        << ", \"window\": " << r.adam.window << "}"
        << ", \"iterations\": " << r.iterations
        << ", \"max_iters\": " << r.max_iters
        << ", \"converged\": " << (r.converged ? "true" : "false")
        << ", \"final_loss\": " << fmt_double(r.final_loss);
    out << ", \"oracle_value\": "
        << (r.oracle_value ? fmt_double(*r.oracle_value) : "null");
    out << ", \"p_optimal\": "
        << (r.p_optimal ? fmt_double(*r.p_optimal) : "null");
    out << ", \"argmax_match\": "
        << (r.argmax_match ? (*r.argmax_match ? "true" : "false") : "null");
    out << ", \"argmax_assignment\": \"" << r.argmax_assignment << "\""
        << ", \"n1_actual\": " << r.actual_gates.singles
        << ", \"n2_actual\": " << r.actual_gates.doubles
        << ", \"n1_paper\": " << r.paper.gates.singles
        << ", \"n2_paper\": " << r.paper.gates.doubles
        << ", \"np\": " << r.paper.n_params
        << ", \"trace_path\": \"" << json_escape(r.trace_path) << "\"";
    out << ", \"distribution\": [";
    for (std::size_t i = 0; i < r.distribution.size(); ++i) {
        if (i) out << ", ";
        out << fmt_double(r.distribution[i]);
    }
    out << "]}\n";
}

}  // namespace

bool RunResult::equivalent(const RunResult& other) const {
    return alg == other.alg && layers == other.layers && seed == other.seed &&
           instance == other.instance &&
           adam.learning_rate == other.adam.learning_rate &&
           adam.beta1 == other.adam.beta1 && adam.beta2 == other.adam.beta2 &&
           adam.epsilon == other.adam.epsilon &&
           adam.max_iters == other.adam.max_iters &&
           adam.tol == other.adam.tol && adam.window == other.adam.window &&
           iterations == other.iterations && max_iters == other.max_iters &&
           converged == other.converged && final_loss == other.final_loss &&
           oracle_value == other.oracle_value &&
           p_optimal == other.p_optimal && argmax_match == other.argmax_match &&
           argmax_assignment == other.argmax_assignment &&
           actual_gates == other.actual_gates && paper == other.paper &&
           trace_path == other.trace_path && distribution == other.distribution;
}

void emit_report(const std::vector<RunResult>& results,
                 const std::string& output_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(fs::path(output_dir) / "traces", ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory: " +
                                 output_dir + " (" + ec.message() + ")");
    }

    std::vector<const RunResult*> ordered;
    ordered.reserve(results.size());
    for (const RunResult& r : results) ordered.push_back(&r);
    std::sort(ordered.begin(), ordered.end(),
              [](const RunResult* a, const RunResult* b) { return before(*a, *b); });

    const std::string jsonl_path =
        (fs::path(output_dir) / "runs.jsonl").string();
    std::ofstream jsonl(jsonl_path);
    if (!jsonl) throw std::runtime_error("cannot write " + jsonl_path);
    for (const RunResult* r : ordered) write_jsonl_line(jsonl, *r);

    const std::string csv_path = (fs::path(output_dir) / "summary.csv").string();
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot write " + csv_path);
    csv << "alg,layer,seed,T,final_loss,p_optimal,argmax_match,n1_actual,"
           "n2_actual,n1_paper,n2_paper,np\n";
    for (const RunResult* r : ordered) {
        csv << algorithm_name(r->alg) << "," << r->layers << "," << r->seed
            << "," << r->iterations << "," << fmt_double(r->final_loss) << ",";
        if (r->p_optimal) csv << fmt_double(*r->p_optimal);
        csv << ",";
        if (r->argmax_match) csv << (*r->argmax_match ? "true" : "false");
        csv << "," << r->actual_gates.singles << "," << r->actual_gates.doubles
            << "," << r->paper.gates.singles << "," << r->paper.gates.doubles
            << "," << r->paper.n_params << "\n";
    }

    for (const RunResult* r : ordered) {
        if (r->trace_path.empty()) continue;
        const std::string trace_path =
            (fs::path(output_dir) / r->trace_path).string();
        std::ofstream trace(trace_path);
        if (!trace) throw std::runtime_error("cannot write " + trace_path);
        trace << "iteration,loss,grad_norm\n";
        for (std::size_t i = 0; i < r->trace.losses.size(); ++i) {
            trace << i << "," << fmt_double(r->trace.losses[i]) << ","
                  << fmt_double(r->trace.grad_norms[i]) << "\n";
        }
    }
}

std::vector<RunResult> load_runs(const std::string& jsonl_path) {
    std::ifstream in(jsonl_path);
    if (!in) throw std::runtime_error("cannot open " + jsonl_path);

    std::vector<RunResult> results;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw std::runtime_error(jsonl_path + ":" +
                                     std::to_string(line_no) + ": " + e.what());
        }
        RunResult r;
        r.alg = algorithm_from_name(j.at("alg").get<std::string>());
        r.layers = j.at("layers").get<int>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.instance = j.at("instance").get<std::string>();
        const auto& adam = j.at("adam");
        r.adam.learning_rate = adam.at("learning_rate").get<double>();
        r.adam.beta1 = adam.at("beta1").get<double>();
        r.adam.beta2 = adam.at("beta2").get<double>();
        r.adam.epsilon = adam.at("epsilon").get<double>();
        r.adam.max_iters = adam.at("max_iters").get<int>();
        r.adam.tol = adam.at("tol").get<double>();
        r.adam.window = adam.at("window").get<int>();
        r.adam.seed = r.seed;
        r.iterations = j.at("iterations").get<int>();
        r.max_iters = j.at("max_iters").get<int>();
        r.converged = j.at("converged").get<bool>();
        r.final_loss = j.at("final_loss").get<double>();
        if (!j.at("oracle_value").is_null()) {
            r.oracle_value = j.at("oracle_value").get<double>();
        }
        if (!j.at("p_optimal").is_null()) {
            r.p_optimal = j.at("p_optimal").get<double>();
        }
        if (!j.at("argmax_match").is_null()) {
            r.argmax_match = j.at("argmax_match").get<bool>();
        }
        r.argmax_assignment = j.at("argmax_assignment").get<std::string>();
        r.actual_gates.singles = j.at("n1_actual").get<long>();
        r.actual_gates.doubles = j.at("n2_actual").get<long>();
        r.paper.gates.singles = j.at("n1_paper").get<long>();
        r.paper.gates.doubles = j.at("n2_paper").get<long>();
        r.paper.n_params = j.at("np").get<long>();
        r.trace_path = j.at("trace_path").get<std::string>();
        r.distribution = j.at("distribution").get<std::vector<double>>();
        results.push_back(std::move(r));
    }
    return results;
}

void write_sweep_summary(const std::vector<SweepSummaryRow>& summary,
                         const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "alg,layer,n_seeds,median_final_loss,best_final_loss,argmax_rate\n";
    for (const SweepSummaryRow& row : summary) {
        out << algorithm_name(row.alg) << "," << row.layers << ","
            << row.n_seeds << "," << fmt_double(row.median_final_loss) << ","
            << fmt_double(row.best_final_loss) << ","
            << fmt_double(row.argmax_rate) << "\n";
    }
}

void write_scale_csv(const std::vector<ScaleRow>& rows,
                     const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "n_qubits,n_edges,alg,layers,two_qubit_gates,t_iterations,"
           "n_params,classical_cost\n";
    for (const ScaleRow& row : rows) {
        out << row.n_qubits << "," << row.n_edges << ","
            << algorithm_name(row.alg) << "," << row.layers << ","
            << row.two_qubit_gates << "," << row.t_iterations << ","
            << row.n_params << "," << row.classical_cost << "\n";
    }
}

}  // namespace qgopt
