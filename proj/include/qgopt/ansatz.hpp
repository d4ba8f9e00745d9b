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

#include "qgopt/circuit.hpp"
#include "qgopt/graph.hpp"
#include "qgopt/pauli.hpp"

namespace qgopt {

enum class Algorithm { Qgoa, Qaoa };

const char* algorithm_name(Algorithm alg);

struct AnsatzCircuit {
    Circuit circuit;
    ParamLayout layout;
};

/// Graph-aggregation ansatz on |0...0>. Each layer applies RY then RZ on
/// every qubit (one parameter each), then one shared parameter eta evolving
/// the graph Hamiltonian as an XX gate followed by a YY gate per edge in
/// canonical order (scale 2*E_ij) and per-vertex RZ gates with scale
/// -2*E_ii for nonzero vertex weights. Pairing the two flavors per edge
/// keeps the aggregation an exact XY evolution edge by edge, so it
/// conserves total magnetization. n_params = (2n + 1) * L.
AnsatzCircuit build_qgoa(const GraphInstance& graph, int layers);

/// Alternating cost/mixer ansatz on |+>^n. Per layer: every ZZ cost term as
/// a ZZ gate with scale 2w on gamma, every Z term as RZ with scale 2h on
/// gamma, then RX with scale 2 on beta for every qubit. The cost observable
/// may contain only Z and ZZ terms. n_params = 2 * L.
AnsatzCircuit build_qaoa(const Observable& cost, int n_qubits, int layers);

enum class CostProblem { Portfolio, Mvc };

struct PaperCost {
    GateCounts gates;
    long n_params = 0;

    bool operator==(const PaperCost&) const = default;
};

/// Closed-form gate and parameter counts of the reference cost model:
///   Qgoa/Portfolio: N1 = (2 Nq + Ne) L, N2 = 2 Ne L, Np = (2 Nq + 1) L
///   Qgoa/Mvc:       N1 = 2 Nq L,       N2 = 2 Ne L, Np = (2 Nq + 1) L
///   Qaoa (both):    N1 = 2 Nq L + Nq,  N2 = Ne L,   Np = 2 L
/// The Qgoa/Portfolio N1 counts Ne extra single-qubit gates per layer; a
/// per-vertex realization of the diagonal terms produces fewer, so literal
/// traversal counts can differ from this model (callers report both).
PaperCost paper_cost_model(Algorithm alg, CostProblem problem, int n_qubits,
                           int n_edges, int layers);

}  // namespace qgopt
