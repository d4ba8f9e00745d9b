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

#include "qgopt/circuit.hpp"

#include <stdexcept>
#include <string>

namespace qgopt {

Circuit::Circuit(int n_qubits_, int n_params_, InitialState init)
    : n_qubits(n_qubits_), n_params(n_params_), initial_state(init) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("circuit qubit count out of range");
    }
    if (n_params < 0) {
        throw std::invalid_argument("circuit parameter count must be >= 0");
    }
}

void Circuit::add(const Gate& gate) {
    auto check = [&](int q) {
        if (q < 0 || q >= n_qubits) {
            throw std::invalid_argument("gate qubit " + std::to_string(q) +
                                        " out of range");
        }
    };
    check(gate.q0);
    if (is_two_qubit(gate.kind)) {
        check(gate.q1);
        if (gate.q0 == gate.q1) {
            throw std::invalid_argument("two-qubit gate needs distinct qubits");
        }
    }
    if (gate.slot.is_bound()) {
        if (!is_rotation(gate.kind)) {
            throw std::invalid_argument("only rotation gates may bind a parameter");
        }
        if (gate.slot.param_index >= n_params) {
            throw std::invalid_argument("bound parameter index " +
                                        std::to_string(gate.slot.param_index) +
                                        " exceeds n_params " +
                                        std::to_string(n_params));
        }
    }
    gates.push_back(gate);
}

StateVector prepare_initial_state(const Circuit& circuit) {
    return circuit.initial_state == InitialState::AllPlus
               ? init_plus(circuit.n_qubits)
               : StateVector(circuit.n_qubits);
}

StateVector run_circuit(const Circuit& circuit,
                        std::span<const double> params) {
    if (static_cast<int>(params.size()) != circuit.n_params) {
        throw std::invalid_argument(
            "expected " + std::to_string(circuit.n_params) + " parameters, got " +
            std::to_string(params.size()));
    }
    StateVector state = prepare_initial_state(circuit);
    for (const Gate& gate : circuit.gates) {
        apply_gate(state, gate, gate.slot.resolve(params));
    }
    return state;
}

GateCounts count_gates(const Circuit& circuit) {
    GateCounts counts;
    if (circuit.initial_state == InitialState::AllPlus) {
        counts.singles += circuit.n_qubits;
    }
    for (const Gate& gate : circuit.gates) {
        if (is_two_qubit(gate.kind)) {
            ++counts.doubles;
        } else {
            ++counts.singles;
        }
    }
    return counts;
}

}  // namespace qgopt
