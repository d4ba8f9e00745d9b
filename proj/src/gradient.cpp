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

#include "qgopt/gradient.hpp"

#include <stdexcept>

namespace qgopt {

namespace {

PauliString generator_of(const Gate& gate) {
    switch (gate.kind) {
        case GateKind::RX: return PauliString::x(gate.q0);
        case GateKind::RY: return PauliString::y(gate.q0);
        case GateKind::RZ: return PauliString::z(gate.q0);
        case GateKind::XX: return PauliString::xx(gate.q0, gate.q1);
        case GateKind::YY: return PauliString::yy(gate.q0, gate.q1);
        case GateKind::ZZ: return PauliString::zz(gate.q0, gate.q1);
        case GateKind::H:
        case GateKind::X:
            break;
    }
    throw std::logic_error("gate has no rotation generator");
}

// Our gate set is self-inverse under angle negation (H and X are their own
// inverses and ignore the angle).
void unapply_gate(StateVector& state, const Gate& gate, double angle) {
    apply_gate(state, gate, is_rotation(gate.kind) ? -angle : angle);
}

}  // namespace

std::pair<double, std::vector<double>> adjoint_value_and_gradient(
    const Circuit& circuit, const Observable& obs,
    std::span<const double> params) {
    if (static_cast<int>(params.size()) != circuit.n_params) {
        throw std::invalid_argument("parameter count mismatch");
    }

    std::vector<double> angles(circuit.gates.size());
    StateVector ket = prepare_initial_state(circuit);
    for (std::size_t k = 0; k < circuit.gates.size(); ++k) {
        angles[k] = circuit.gates[k].slot.resolve(params);
        apply_gate(ket, circuit.gates[k], angles[k]);
    }

    const double value = expectation(ket, obs);
    std::vector<double> grad(params.size(), 0.0);
    if (circuit.gates.empty() || circuit.n_params == 0) {
        return {value, grad};
    }

    StateVector bra = apply_observable(obs, ket);
    StateVector scratch;
    // Walking the gate list backwards with ket_k = U_k...U_1|init> and
    // bra_k = (U_{k+1}...U_N)^dag M |psi>, each bound gate contributes
    //   d<M>/d(angle_k) = Im <bra_k | G_k | ket_k>.
    for (std::size_t k = circuit.gates.size(); k-- > 0;) {
        const Gate& gate = circuit.gates[k];
        if (gate.slot.is_bound()) {
            apply_pauli(generator_of(gate), ket, scratch);
            const double d_angle = inner_product(bra, scratch).imag();
            grad[static_cast<std::size_t>(gate.slot.param_index)] +=
                gate.slot.value * d_angle;
        }
        unapply_gate(ket, gate, angles[k]);
        unapply_gate(bra, gate, angles[k]);
    }
    return {value, grad};
}

std::vector<double> adjoint_gradient(const Circuit& circuit,
                                     const Observable& obs,
                                     std::span<const double> params) {
    return adjoint_value_and_gradient(circuit, obs, params).second;
}

std::vector<double> finite_diff_gradient(const Circuit& circuit,
                                         const Observable& obs,
                                         std::span<const double> params,
                                         double eps) {
    if (static_cast<int>(params.size()) != circuit.n_params) {
        throw std::invalid_argument("parameter count mismatch");
    }
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");

    std::vector<double> shifted(params.begin(), params.end());
    std::vector<double> grad(params.size(), 0.0);
    for (std::size_t j = 0; j < shifted.size(); ++j) {
        const double saved = shifted[j];
        shifted[j] = saved + eps;
        const double up = expectation(run_circuit(circuit, shifted), obs);
        shifted[j] = saved - eps;
        const double down = expectation(run_circuit(circuit, shifted), obs);
        shifted[j] = saved;
        grad[j] = (up - down) / (2.0 * eps);
    }
    return grad;
}

}  // namespace qgopt
