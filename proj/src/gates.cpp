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

#include "qgopt/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace qgopt {

bool is_two_qubit(GateKind kind) {
    return kind == GateKind::XX || kind == GateKind::YY || kind == GateKind::ZZ;
}

bool is_rotation(GateKind kind) {
    return kind != GateKind::H && kind != GateKind::X;
}

namespace {

void apply_single(StateVector& state, int q, cdouble u00, cdouble u01,
                  cdouble u10, cdouble u11) {
    const std::uint64_t dim = state.dim();
    const std::uint64_t qbit = std::uint64_t{1} << q;
    auto& amps = state.amplitudes;
    for (std::uint64_t k = 0; k < dim; ++k) {
        if (k & qbit) continue;
        const cdouble a0 = amps[k];
        const cdouble a1 = amps[k | qbit];
        amps[k] = u00 * a0 + u01 * a1;
        amps[k | qbit] = u10 * a0 + u11 * a1;
    }
}

// exp(-i*(angle/2)*P(x)P) for P in {X, Y}: both kinds couple k with
// k ^ (bit q0 | bit q1); YY picks up a -1 on pairs whose two bits agree.
void apply_pair_flip(StateVector& state, int q0, int q1, double angle,
                     bool is_yy) {
    const std::uint64_t dim = state.dim();
    const std::uint64_t m0 = std::uint64_t{1} << q0;
    const std::uint64_t m1 = std::uint64_t{1} << q1;
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    const cdouble mis(0.0, -s);
    auto& amps = state.amplitudes;
    for (std::uint64_t k = 0; k < dim; ++k) {
        if (k & m1) continue;  // visit each pair through its q1=0 member
        const std::uint64_t p = k ^ (m0 | m1);
        double f = 1.0;
        if (is_yy) {
            const bool b0 = (k & m0) != 0;
            f = b0 == false ? -1.0 : 1.0;  // bits of k at (q0, q1) = (b0, 0)
        }
        const cdouble ak = amps[k];
        const cdouble ap = amps[p];
        amps[k] = c * ak + mis * f * ap;
        amps[p] = c * ap + mis * f * ak;
    }
}

void apply_zz(StateVector& state, int q0, int q1, double angle) {
    const std::uint64_t dim = state.dim();
    const std::uint64_t m0 = std::uint64_t{1} << q0;
    const std::uint64_t m1 = std::uint64_t{1} << q1;
    const cdouble phase_same = std::polar(1.0, -angle / 2.0);
    const cdouble phase_diff = std::polar(1.0, angle / 2.0);
    auto& amps = state.amplitudes;
    for (std::uint64_t k = 0; k < dim; ++k) {
        const bool same = ((k & m0) != 0) == ((k & m1) != 0);
        amps[k] *= same ? phase_same : phase_diff;
    }
}

void check_qubit(const StateVector& state, int q) {
    if (q < 0 || q >= state.n_qubits) {
        throw std::invalid_argument("qubit index " + std::to_string(q) +
                                    " out of range for " +
                                    std::to_string(state.n_qubits) + " qubits");
    }
}

}  // namespace

void apply_gate(StateVector& state, const Gate& gate, double angle) {
    if (!std::isfinite(angle)) {
        throw std::invalid_argument("gate angle must be finite");
    }
    check_qubit(state, gate.q0);
    if (is_two_qubit(gate.kind)) {
        check_qubit(state, gate.q1);
        if (gate.q0 == gate.q1) {
            throw std::invalid_argument("two-qubit gate needs distinct qubits");
        }
    }

    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    constexpr double inv_sqrt2 = 0.70710678118654752440;

    switch (gate.kind) {
        case GateKind::RX:
            apply_single(state, gate.q0, c, cdouble(0, -s), cdouble(0, -s), c);
            break;
        case GateKind::RY:
            apply_single(state, gate.q0, c, -s, s, c);
            break;
        case GateKind::RZ:
            apply_single(state, gate.q0, std::polar(1.0, -angle / 2.0), 0.0,
                         0.0, std::polar(1.0, angle / 2.0));
            break;
        case GateKind::H:
            apply_single(state, gate.q0, inv_sqrt2, inv_sqrt2, inv_sqrt2,
                         -inv_sqrt2);
            break;
        case GateKind::X:
            apply_single(state, gate.q0, 0.0, 1.0, 1.0, 0.0);
            break;
        case GateKind::XX:
            apply_pair_flip(state, gate.q0, gate.q1, angle, false);
            break;
        case GateKind::YY:
            apply_pair_flip(state, gate.q0, gate.q1, angle, true);
            break;
        case GateKind::ZZ:
            apply_zz(state, gate.q0, gate.q1, angle);
            break;
    }
}

}  // namespace qgopt
