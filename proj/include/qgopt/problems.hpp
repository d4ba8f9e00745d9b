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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qgopt/graph.hpp"
#include "qgopt/qubo.hpp"

namespace qgopt {

/// Raw inputs of a seeded portfolio instance. The covariance is symmetric
/// with uniform(0,1) diagonal, uniform(0,1) entries on the sampled edge
/// pairs, and zeros elsewhere; returns are uniform(0,1).
struct PortfolioDraw {
    int n = 0;
    std::vector<std::vector<double>> covariance;
    std::vector<double> returns;
};

PortfolioDraw draw_portfolio(int n, int n_edges, std::uint64_t seed);

/// QUBO coefficients from raw portfolio data:
///   diag_i = lambda V_ii, quad_ij = lambda V_ij, linear_i = -(1-lambda) mu_i.
/// Edge pairs are kept even when lambda is 0, so the sparsity structure
/// survives in the instance.
QuboInstance portfolio_qubo(const PortfolioDraw& draw, double lambda);

QuboInstance gen_portfolio(int n, int n_edges, double lambda,
                           std::uint64_t seed);

/// Uniform random simple graph with exactly n_edges edges, unit weights,
/// zero vertex weights.
GraphInstance random_graph(int n, int n_edges, std::uint64_t seed);

/// Vertex-cover QUBO of a graph: each edge contributes the expansion of
/// (1 - x_i)(1 - x_j) (the per-edge unit lands in the instance constant),
/// each vertex a +b linear term.
QuboInstance mvc_qubo(const GraphInstance& graph, double b);

std::pair<QuboInstance, GraphInstance> gen_mvc(int n, int n_edges, double b,
                                               std::uint64_t seed);

/// Weighted graph read off the instance: edges where quad is nonzero with
/// that weight, vertex weights from diag.
GraphInstance instance_graph(const QuboInstance& instance);

/// Graph driving the aggregation Hamiltonian. Vertex-cover instances use the
/// plain adjacency (unit edges, no vertex weights); everything else uses
/// instance_graph.
GraphInstance aggregation_graph(const QuboInstance& instance);

struct OracleResult {
    double optimal_value = 0.0;
    std::vector<std::uint64_t> optimal_assignments;  // ascending, all ties
    std::uint64_t evaluations = 0;
};

/// Exhaustive minimization over all 2^n assignments; n <= 24.
OracleResult brute_force(const QuboInstance& instance);

void save_instance(const QuboInstance& instance, const std::string& path);
QuboInstance load_instance(const std::string& path);

std::string instance_label(const QuboInstance& instance);

}  // namespace qgopt
