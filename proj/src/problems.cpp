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

#include "qgopt/problems.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qgopt/rng.hpp"
#include "qgopt/state_vector.hpp"

namespace qgopt {

namespace {

constexpr int kBruteForceMaxVars = 24;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

const char* kind_name(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::Portfolio: return "portfolio";
        case ProblemKind::Mvc: return "mvc";
        case ProblemKind::Generic: return "generic";
    }
    return "generic";
}

}  // namespace

PortfolioDraw draw_portfolio(int n, int n_edges, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("need at least one asset");
    SeededRng rng(seed);
    PortfolioDraw draw;
    draw.n = n;
    draw.covariance.assign(static_cast<std::size_t>(n),
                           std::vector<double>(static_cast<std::size_t>(n), 0.0));
    draw.returns.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        draw.covariance[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
            rng.uniform01();
    }
    for (int i = 0; i < n; ++i) {
        draw.returns[static_cast<std::size_t>(i)] = rng.uniform01();
    }
    for (const auto& [i, j] : sample_edge_pairs(n, n_edges, rng)) {
        const double w = rng.uniform01();
        draw.covariance[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = w;
        draw.covariance[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = w;
    }
    return draw;
}

QuboInstance portfolio_qubo(const PortfolioDraw& draw, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw std::invalid_argument("lambda must lie in [0, 1]");
    }
    QuboInstance inst(draw.n);
    inst.kind = ProblemKind::Portfolio;
    inst.lambda = lambda;
    for (int i = 0; i < draw.n; ++i) {
        inst.diag[static_cast<std::size_t>(i)] =
            lambda * draw.covariance[static_cast<std::size_t>(i)]
                                    [static_cast<std::size_t>(i)];
        inst.linear[static_cast<std::size_t>(i)] =
            -(1.0 - lambda) * draw.returns[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < draw.n; ++i) {
        for (int j = i + 1; j < draw.n; ++j) {
            const double v = draw.covariance[static_cast<std::size_t>(i)]
                                            [static_cast<std::size_t>(j)];
            if (v != 0.0) inst.set_quad(i, j, lambda * v);
        }
    }
    return inst;
}

QuboInstance gen_portfolio(int n, int n_edges, double lambda,
                           std::uint64_t seed) {
    QuboInstance inst = portfolio_qubo(draw_portfolio(n, n_edges, seed), lambda);
    inst.seed = seed;
    return inst;
}

GraphInstance random_graph(int n, int n_edges, std::uint64_t seed) {
    SeededRng rng(seed);
    GraphInstance graph(n);
    for (const auto& [i, j] : sample_edge_pairs(n, n_edges, rng)) {
        graph.add_edge(i, j, 1.0);
    }
    return graph;
}

QuboInstance mvc_qubo(const GraphInstance& graph, double b) {
    QuboInstance inst(graph.n);
    inst.kind = ProblemKind::Mvc;
    inst.b = b;
    for (int v = 0; v < graph.n; ++v) {
        inst.linear[static_cast<std::size_t>(v)] = b;
    }
    for (const auto& [edge, weight] : graph.edges) {
        (void)weight;
        // (1 - x_i)(1 - x_j) = 1 - x_i - x_j + x_i x_j; the pair stores 1/2
        // so the folded double sum restores the unit coefficient.
        inst.constant += 1.0;
        inst.linear[static_cast<std::size_t>(edge.first)] -= 1.0;
        inst.linear[static_cast<std::size_t>(edge.second)] -= 1.0;
        inst.set_quad(edge.first, edge.second, 0.5);
    }
    return inst;
}

std::pair<QuboInstance, GraphInstance> gen_mvc(int n, int n_edges, double b,
                                               std::uint64_t seed) {
    GraphInstance graph = random_graph(n, n_edges, seed);
    QuboInstance inst = mvc_qubo(graph, b);
    inst.seed = seed;
    return {std::move(inst), std::move(graph)};
}

GraphInstance instance_graph(const QuboInstance& instance) {
    GraphInstance graph(instance.n);
    graph.vertex_weights = instance.diag;
    for (const auto& [pair, w] : instance.quad) {
        if (w != 0.0) graph.add_edge(pair.first, pair.second, w);
    }
    return graph;
}

GraphInstance aggregation_graph(const QuboInstance& instance) {
    if (instance.kind != ProblemKind::Mvc) return instance_graph(instance);
    GraphInstance graph(instance.n);
    for (const auto& [pair, w] : instance.quad) {
        if (w != 0.0) graph.add_edge(pair.first, pair.second, 1.0);
    }
    return graph;
}

OracleResult brute_force(const QuboInstance& instance) {
    if (instance.n > kBruteForceMaxVars) {
        throw std::invalid_argument("brute force limited to 24 variables");
    }
    OracleResult result;
    result.evaluations = std::uint64_t{1} << instance.n;
    result.optimal_value = instance.objective(0);
    result.optimal_assignments = {0};
    for (std::uint64_t x = 1; x < result.evaluations; ++x) {
        const double value = instance.objective(x);
        if (value < result.optimal_value) {
            result.optimal_value = value;
            result.optimal_assignments = {x};
        } else if (value == result.optimal_value) {
            result.optimal_assignments.push_back(x);
        }
    }
    return result;
}

void save_instance(const QuboInstance& instance, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write instance file: " + path);

    out << "{\n";
    out << "  \"n\": " << instance.n << ",\n";
    out << "  \"kind\": {\"type\": \"" << kind_name(instance.kind) << "\"";
    if (instance.kind == ProblemKind::Portfolio) {
        out << ", \"lambda\": " << fmt_double(instance.lambda);
    } else if (instance.kind == ProblemKind::Mvc) {
        out << ", \"b\": " << fmt_double(instance.b);
    }
    out << "},\n";
    out << "  \"seed\": " << instance.seed << ",\n";
    auto write_array = [&](const char* name, const std::vector<double>& vals) {
        out << "  \"" << name << "\": [";
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (i) out << ", ";
            out << fmt_double(vals[i]);
        }
        out << "]";
    };
    write_array("diag", instance.diag);
    out << ",\n";
    write_array("linear", instance.linear);
    out << ",\n";
    out << "  \"quad\": [";
    bool first = true;
    for (const auto& [pair, w] : instance.quad) {
        if (!first) out << ",";
        first = false;
        out << "\n    {\"i\": " << pair.first << ", \"j\": " << pair.second
            << ", \"w\": " << fmt_double(w) << "}";
    }
    out << (instance.quad.empty() ? "]" : "\n  ]");
    if (instance.constant != 0.0) {
        out << ",\n  \"constant\": " << fmt_double(instance.constant);
    }
    out << "\n}\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

const nlohmann::json& require_field(const nlohmann::json& j, const char* name,
                                    const std::string& path) {
    auto it = j.find(name);
    if (it == j.end()) {
        throw std::runtime_error("instance file " + path +
                                 ": missing field \"" + name + "\"");
    }
    return *it;
}

}  // namespace

QuboInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);

    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("instance file " + path + ": " + e.what());
    }

    try {
        const int n = require_field(j, "n", path).get<int>();
        if (n < 1 || n > 64) {
            throw std::runtime_error("instance file " + path +
                                     ": field \"n\" out of range");
        }
        QuboInstance inst(n);

        const auto& kind = require_field(j, "kind", path);
        const std::string type = require_field(kind, "type", path).get<std::string>();
        if (type == "portfolio") {
            inst.kind = ProblemKind::Portfolio;
            if (kind.contains("lambda")) inst.lambda = kind["lambda"].get<double>();
        } else if (type == "mvc") {
            inst.kind = ProblemKind::Mvc;
            if (kind.contains("b")) inst.b = kind["b"].get<double>();
        } else if (type == "generic") {
            inst.kind = ProblemKind::Generic;
        } else {
            throw std::runtime_error("instance file " + path +
                                     ": unknown kind \"" + type + "\"");
        }

        inst.seed = require_field(j, "seed", path).get<std::uint64_t>();

        auto read_array = [&](const char* name, std::vector<double>& dst) {
            const auto& arr = require_field(j, name, path);
            if (!arr.is_array() || arr.size() != static_cast<std::size_t>(n)) {
                throw std::runtime_error("instance file " + path + ": field \"" +
                                         name + "\" must be an array of " +
                                         std::to_string(n) + " floats");
            }
            for (std::size_t i = 0; i < dst.size(); ++i) {
                dst[i] = arr[i].get<double>();
            }
        };
        read_array("diag", inst.diag);
        read_array("linear", inst.linear);

        const auto& quad = require_field(j, "quad", path);
        if (!quad.is_array()) {
            throw std::runtime_error("instance file " + path +
                                     ": field \"quad\" must be an array");
        }
        for (const auto& entry : quad) {
            const int i = require_field(entry, "i", path).get<int>();
            const int jj = require_field(entry, "j", path).get<int>();
            const double w = require_field(entry, "w", path).get<double>();
            if (i < 0 || jj < 0 || i >= n || jj >= n || i >= jj) {
                throw std::runtime_error("instance file " + path +
                                         ": field \"quad\" requires 0 <= i < j < n");
            }
            if (inst.quad.count({i, jj})) {
                throw std::runtime_error("instance file " + path +
                                         ": duplicate quad pair");
            }
            inst.quad[{i, jj}] = w;
        }
        if (j.contains("constant")) inst.constant = j["constant"].get<double>();
        return inst;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("instance file " + path + ": " + e.what());
    }
}

std::string instance_label(const QuboInstance& instance) {
    std::ostringstream label;
    label << kind_name(instance.kind) << "-n" << instance.n << "-e"
          << instance.quad.size();
    if (instance.kind == ProblemKind::Portfolio) {
        label << "-l" << instance.lambda;
    } else if (instance.kind == ProblemKind::Mvc) {
        label << "-b" << instance.b;
    }
    label << "-s" << instance.seed;
    return label.str();
}

}  // namespace qgopt
