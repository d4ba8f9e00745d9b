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

#include "qgopt/ansatz.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qgopt {

const char* algorithm_name(Algorithm alg) {
    return alg == Algorithm::Qgoa ? "qgoa" : "qaoa";
}

AnsatzCircuit build_qgoa(const GraphInstance& graph, int layers) {
    if (layers < 1) throw std::invalid_argument("layers must be >= 1");
    if (graph.n < 1) throw std::invalid_argument("graph must be non-empty");

    const int n = graph.n;
    const int per_layer = 2 * n + 1;
    AnsatzCircuit out;
    out.layout.n_params = per_layer * layers;
    out.circuit = Circuit(n, out.layout.n_params, InitialState::AllZero);

    for (int layer = 0; layer < layers; ++layer) {
        const int base = layer * per_layer;
        for (int q = 0; q < n; ++q) {
            out.layout.labels.push_back({ParamRole::ThetaY, layer, q});
            out.circuit.add(Gate::ry(q, AngleSlot::bound(base + q, 1.0)));
        }
        for (int q = 0; q < n; ++q) {
            out.layout.labels.push_back({ParamRole::ThetaZ, layer, q});
            out.circuit.add(Gate::rz(q, AngleSlot::bound(base + n + q, 1.0)));
        }
        const int eta = base + 2 * n;
        out.layout.labels.push_back({ParamRole::Eta, layer, -1});
        // exp(-i eta w XX) exp(-i eta w YY) per edge in canonical order. The
        // two factors of one edge commute and merge into the exact XY
        // evolution of that edge, so the whole product commutes with sum Z_i;
        // splitting into a full XX block before a full YY block would not.
        for (const auto& [edge, w] : graph.edges) {
            out.circuit.add(
                Gate::xx(edge.first, edge.second, AngleSlot::bound(eta, 2.0 * w)));
            out.circuit.add(
                Gate::yy(edge.first, edge.second, AngleSlot::bound(eta, 2.0 * w)));
        }
        // Vertex weights enter as exp(+i eta w Z).
        for (int q = 0; q < n; ++q) {
            const double w = graph.vertex_weights[static_cast<std::size_t>(q)];
            if (w != 0.0) {
                out.circuit.add(Gate::rz(q, AngleSlot::bound(eta, -2.0 * w)));
            }
        }
    }
    return out;
}

AnsatzCircuit build_qaoa(const Observable& cost, int n_qubits, int layers) {
    if (layers < 1) throw std::invalid_argument("layers must be >= 1");
    if (n_qubits < 1) throw std::invalid_argument("need at least one qubit");
    if (cost.max_qubit() >= n_qubits) {
        throw std::invalid_argument("cost observable exceeds qubit count");
    }

    struct ZTerm {
        int qubit;
        double weight;
    };
    struct ZzTerm {
        int q0, q1;
        double weight;
    };
    std::vector<ZTerm> z_terms;
    std::vector<ZzTerm> zz_terms;
    for (const PauliString& term : cost.terms) {
        if (term.x_mask != 0) {
            throw std::invalid_argument("cost observable must be diagonal (Z/ZZ)");
        }
        const int weight_count = std::popcount(term.z_mask);
        if (weight_count == 1) {
            z_terms.push_back({std::countr_zero(term.z_mask), term.coefficient});
        } else if (weight_count == 2) {
            const int lo = std::countr_zero(term.z_mask);
            const int hi = 63 - std::countl_zero(term.z_mask);
            zz_terms.push_back({lo, hi, term.coefficient});
        } else {
            throw std::invalid_argument(
                "cost observable must contain only Z and ZZ terms");
        }
    }
    std::sort(zz_terms.begin(), zz_terms.end(), [](const ZzTerm& a, const ZzTerm& b) {
        return std::pair{a.q0, a.q1} < std::pair{b.q0, b.q1};
    });
    std::sort(z_terms.begin(), z_terms.end(),
              [](const ZTerm& a, const ZTerm& b) { return a.qubit < b.qubit; });

    AnsatzCircuit out;
    out.layout.n_params = 2 * layers;
    out.circuit = Circuit(n_qubits, out.layout.n_params, InitialState::AllPlus);

    for (int layer = 0; layer < layers; ++layer) {
        const int gamma = 2 * layer;
        const int beta = 2 * layer + 1;
        out.layout.labels.push_back({ParamRole::Gamma, layer, -1});
        out.layout.labels.push_back({ParamRole::Beta, layer, -1});
        for (const ZzTerm& t : zz_terms) {
            out.circuit.add(
                Gate::zz(t.q0, t.q1, AngleSlot::bound(gamma, 2.0 * t.weight)));
        }
        for (const ZTerm& t : z_terms) {
            out.circuit.add(
                Gate::rz(t.qubit, AngleSlot::bound(gamma, 2.0 * t.weight)));
        }
        for (int q = 0; q < n_qubits; ++q) {
            out.circuit.add(Gate::rx(q, AngleSlot::bound(beta, 2.0)));
        }
    }
    return out;
}

PaperCost paper_cost_model(Algorithm alg, CostProblem problem, int n_qubits,
                           int n_edges, int layers) {
    const long nq = n_qubits;
    const long ne = n_edges;
    const long l = layers;
    PaperCost cost;
    if (alg == Algorithm::Qgoa) {
        cost.gates.singles = (problem == CostProblem::Portfolio)
                                 ? (2 * nq + ne) * l
                                 : 2 * nq * l;
        cost.gates.doubles = 2 * ne * l;
        cost.n_params = (2 * nq + 1) * l;
    } else {
        cost.gates.singles = 2 * nq * l + nq;
        cost.gates.doubles = ne * l;
        cost.n_params = 2 * l;
    }
    return cost;
}

}  // namespace qgopt
