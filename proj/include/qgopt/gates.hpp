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

#include <span>

#include "qgopt/state_vector.hpp"

namespace qgopt {

// Rotation gates implement exp(-i*(angle/2)*G) with G the one- or two-qubit
// Pauli generator (RY -> Y, XX -> X(x)X, ...). H and X take no angle.
enum class GateKind { RX, RY, RZ, H, X, XX, YY, ZZ };

bool is_two_qubit(GateKind kind);
bool is_rotation(GateKind kind);

/// Angle source for a gate: a fixed value, or scale * params[param_index].
struct AngleSlot {
    int param_index = -1;  // -1 means fixed
    double value = 0.0;    // fixed angle, or scale when bound

    static AngleSlot fixed(double angle) { return {-1, angle}; }
    static AngleSlot bound(int param_index, double scale) {
        return {param_index, scale};
    }

    bool is_bound() const { return param_index >= 0; }
    double resolve(std::span<const double> params) const {
        return is_bound() ? value * params[static_cast<std::size_t>(param_index)]
                          : value;
    }
};

struct Gate {
    GateKind kind = GateKind::RY;
    int q0 = 0;
    int q1 = -1;  // second qubit for XX/YY/ZZ
    AngleSlot slot = AngleSlot::fixed(0.0);

    static Gate rx(int q, AngleSlot s) { return {GateKind::RX, q, -1, s}; }
    static Gate ry(int q, AngleSlot s) { return {GateKind::RY, q, -1, s}; }
    static Gate rz(int q, AngleSlot s) { return {GateKind::RZ, q, -1, s}; }
    static Gate h(int q) { return {GateKind::H, q, -1, AngleSlot::fixed(0.0)}; }
    static Gate x(int q) { return {GateKind::X, q, -1, AngleSlot::fixed(0.0)}; }
    static Gate xx(int a, int b, AngleSlot s) { return {GateKind::XX, a, b, s}; }
    static Gate yy(int a, int b, AngleSlot s) { return {GateKind::YY, a, b, s}; }
    static Gate zz(int a, int b, AngleSlot s) { return {GateKind::ZZ, a, b, s}; }
};

/// Applies the gate with the given resolved angle in place. Norm is preserved
/// to ~1e-15; qubit indices are validated against the state.
void apply_gate(StateVector& state, const Gate& gate, double angle);

}  // namespace qgopt
