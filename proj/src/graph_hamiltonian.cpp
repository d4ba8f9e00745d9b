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

#include "qgopt/graph_hamiltonian.hpp"

#include <stdexcept>

namespace qgopt {

Observable build_ht_observable(const GraphInstance& graph) {
    Observable obs;
    for (const auto& [edge, weight] : graph.edges) {
        obs.add_term(PauliString::xx(edge.first, edge.second, weight));
        obs.add_term(PauliString::yy(edge.first, edge.second, weight));
    }
    for (int v = 0; v < graph.n; ++v) {
        const double w = graph.vertex_weights[static_cast<std::size_t>(v)];
        if (w != 0.0) obs.add_term(PauliString::z(v, -w));
    }
    return obs;
}

DenseMatrix build_projector_matrix(const GraphInstance& graph, int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxDenseQubits) {
        throw std::invalid_argument("projector matrix limited to 1..10 qubits");
    }
    if (graph.n > n_qubits) {
        throw std::invalid_argument("graph does not fit in the qubit count");
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    DenseMatrix m = DenseMatrix::zero(dim);

    // |1><1|_i picks out basis states with bit i set.
    for (std::uint64_t b = 0; b < dim; ++b) {
        double diag = 0.0;
        for (int v = 0; v < graph.n; ++v) {
            if ((b >> v) & 1) {
                diag += graph.vertex_weights[static_cast<std::size_t>(v)];
            }
        }
        m.at(b, b) = diag;
    }

    // |1><0|_i (x) |0><1|_j moves the excitation from j to i.
    for (const auto& [edge, weight] : graph.edges) {
        const std::uint64_t bi = std::uint64_t{1} << edge.first;
        const std::uint64_t bj = std::uint64_t{1} << edge.second;
        for (std::uint64_t b = 0; b < dim; ++b) {
            if ((b & bi) == 0 && (b & bj) != 0) {
                const std::uint64_t target = (b | bi) & ~bj;
                m.at(target, b) += weight;
                m.at(b, target) += weight;
            }
        }
    }
    return m;
}

}  // namespace qgopt
