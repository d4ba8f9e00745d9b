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

// Test-only reference implementations. Everything here goes through dense
// matrices built from the textbook gate formulas, independent of the sparse
// kernels under test.

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "qgopt/circuit.hpp"
#include "qgopt/dense.hpp"
#include "qgopt/graph.hpp"
#include "qgopt/pauli.hpp"
#include "qgopt/rng.hpp"
#include "qgopt/state_vector.hpp"

namespace qgopt::testing {

// 2x2 gate matrix from the closed-form entries.
inline DenseMatrix gate_matrix_1q(GateKind kind, double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    const double r = 1.0 / std::sqrt(2.0);
    DenseMatrix m = DenseMatrix::zero(2);
    switch (kind) {
        case GateKind::RX:
            m.at(0, 0) = c; m.at(0, 1) = cdouble(0, -s);
            m.at(1, 0) = cdouble(0, -s); m.at(1, 1) = c;
            break;
        case GateKind::RY:
            m.at(0, 0) = c; m.at(0, 1) = -s;
            m.at(1, 0) = s; m.at(1, 1) = c;
            break;
        case GateKind::RZ:
            m.at(0, 0) = std::polar(1.0, -angle / 2.0);
            m.at(1, 1) = std::polar(1.0, angle / 2.0);
            break;
        case GateKind::H:
            m.at(0, 0) = r; m.at(0, 1) = r;
            m.at(1, 0) = r; m.at(1, 1) = -r;
            break;
        case GateKind::X:
            m.at(0, 1) = 1.0; m.at(1, 0) = 1.0;
            break;
        default:
            throw std::logic_error("not a one-qubit gate");
    }
    return m;
}

// 4x4 matrix of exp(-i*(angle/2)*P(x)P) on basis |b_q1 b_q0>.
inline DenseMatrix gate_matrix_2q(GateKind kind, double angle) {
    const double c = std::cos(angle / 2.0);
    const cdouble mis(0.0, -std::sin(angle / 2.0));
    DenseMatrix m = DenseMatrix::zero(4);
    switch (kind) {
        case GateKind::XX:
            for (int k = 0; k < 4; ++k) {
                m.at(k, k) = c;
                m.at(3 - k, k) += mis;
            }
            break;
        case GateKind::YY:
            for (int k = 0; k < 4; ++k) m.at(k, k) = c;
            m.at(3, 0) = -mis; m.at(0, 3) = -mis;
            m.at(2, 1) = mis;  m.at(1, 2) = mis;
            break;
        case GateKind::ZZ:
            m.at(0, 0) = c + mis * 1.0;
            m.at(1, 1) = c - mis * 1.0;
            m.at(2, 2) = c - mis * 1.0;
            m.at(3, 3) = c + mis * 1.0;
            break;
        default:
            throw std::logic_error("not a two-qubit gate");
    }
    return m;
}

inline DenseMatrix embed_1q(const DenseMatrix& g, int q, int n) {
    const std::size_t dim = std::size_t{1} << n;
    const std::uint64_t bit = std::uint64_t{1} << q;
    DenseMatrix m = DenseMatrix::zero(dim);
    for (std::uint64_t k = 0; k < dim; ++k) {
        if (k & bit) continue;
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                m.at(k | (a ? bit : 0), k | (b ? bit : 0)) =
                    g.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
            }
        }
    }
    return m;
}

inline DenseMatrix embed_2q(const DenseMatrix& g, int q0, int q1, int n) {
    const std::size_t dim = std::size_t{1} << n;
    const std::uint64_t b0 = std::uint64_t{1} << q0;
    const std::uint64_t b1 = std::uint64_t{1} << q1;
    DenseMatrix m = DenseMatrix::zero(dim);
    for (std::uint64_t k = 0; k < dim; ++k) {
        if (k & (b0 | b1)) continue;
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                const std::uint64_t row =
                    k | ((r & 1) ? b0 : 0) | ((r & 2) ? b1 : 0);
                const std::uint64_t col =
                    k | ((c & 1) ? b0 : 0) | ((c & 2) ? b1 : 0);
                m.at(row, col) =
                    g.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
            }
        }
    }
    return m;
}

inline DenseMatrix full_gate_matrix(const Gate& gate, double angle, int n) {
    if (is_two_qubit(gate.kind)) {
        return embed_2q(gate_matrix_2q(gate.kind, angle), gate.q0, gate.q1, n);
    }
    return embed_1q(gate_matrix_1q(gate.kind, angle), gate.q0, n);
}

// Reference circuit execution: every gate Kronecker-expanded and applied as
// a dense matvec.
inline StateVector dense_run_circuit(const Circuit& circuit,
                                     std::span<const double> params) {
    StateVector state = prepare_initial_state(circuit);
    for (const Gate& gate : circuit.gates) {
        state = matvec(full_gate_matrix(gate, gate.slot.resolve(params),
                                        circuit.n_qubits),
                       state);
    }
    return state;
}

inline StateVector random_state(int n, std::uint64_t seed) {
    SeededRng rng(seed);
    StateVector state(n);
    for (cdouble& a : state.amplitudes) {
        a = cdouble(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    }
    const double scale = 1.0 / std::sqrt(state.norm_sq());
    for (cdouble& a : state.amplitudes) a *= scale;
    return state;
}

inline Observable random_observable(int n, int n_terms, std::uint64_t seed) {
    SeededRng rng(seed);
    Observable obs;
    for (int t = 0; t < n_terms; ++t) {
        PauliString term;
        term.coefficient = rng.uniform(-1.0, 1.0);
        for (int q = 0; q < n; ++q) {
            switch (rng.below(4)) {
                case 1: term.x_mask |= std::uint64_t{1} << q; break;
                case 2: term.z_mask |= std::uint64_t{1} << q; break;
                case 3:
                    term.x_mask |= std::uint64_t{1} << q;
                    term.z_mask |= std::uint64_t{1} << q;
                    break;
                default: break;
            }
        }
        obs.add_term(term);
    }
    return obs;
}

inline GraphInstance random_weighted_graph(int n, int n_edges,
                                           std::uint64_t seed,
                                           bool vertex_weights = true) {
    SeededRng rng(seed);
    GraphInstance graph(n);
    for (const auto& [i, j] : sample_edge_pairs(n, n_edges, rng)) {
        graph.add_edge(i, j, rng.uniform(0.1, 1.0) * (rng.below(2) ? 1.0 : -1.0));
    }
    if (vertex_weights) {
        for (double& w : graph.vertex_weights) w = rng.uniform(-1.0, 1.0);
    }
    return graph;
}

inline double max_amp_diff(const StateVector& a, const StateVector& b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.dim(); ++k) {
        worst = std::max(worst, std::abs(a.amplitudes[k] - b.amplitudes[k]));
    }
    return worst;
}

}  // namespace qgopt::testing
