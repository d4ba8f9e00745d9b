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

#include "qgopt/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qgopt {

namespace {

constexpr double kImagResidueLimit = 1e-10;

std::uint64_t qubit_bit(int q) {
    if (q < 0 || q >= 64) {
        throw std::invalid_argument("pauli qubit index out of range");
    }
    return std::uint64_t{1} << q;
}

// i^k for k in 0..3.
cdouble imag_power(int k) {
    switch (k & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

}  // namespace

PauliString PauliString::from_ops(
    std::initializer_list<std::pair<int, PauliOp>> ops, double coefficient) {
    PauliString term;
    term.coefficient = coefficient;
    for (const auto& [q, op] : ops) {
        const std::uint64_t bit = qubit_bit(q);
        if ((term.x_mask | term.z_mask) & bit) {
            throw std::invalid_argument("duplicate qubit in pauli string");
        }
        if (op == PauliOp::X || op == PauliOp::Y) term.x_mask |= bit;
        if (op == PauliOp::Z || op == PauliOp::Y) term.z_mask |= bit;
    }
    return term;
}

PauliString PauliString::x(int q, double c) {
    return from_ops({{q, PauliOp::X}}, c);
}
PauliString PauliString::y(int q, double c) {
    return from_ops({{q, PauliOp::Y}}, c);
}
PauliString PauliString::z(int q, double c) {
    return from_ops({{q, PauliOp::Z}}, c);
}
PauliString PauliString::xx(int a, int b, double c) {
    return from_ops({{a, PauliOp::X}, {b, PauliOp::X}}, c);
}
PauliString PauliString::yy(int a, int b, double c) {
    return from_ops({{a, PauliOp::Y}, {b, PauliOp::Y}}, c);
}
PauliString PauliString::zz(int a, int b, double c) {
    return from_ops({{a, PauliOp::Z}, {b, PauliOp::Z}}, c);
}
PauliString PauliString::identity(double c) { return from_ops({}, c); }

PauliOp PauliString::op_at(int q) const {
    const std::uint64_t bit = qubit_bit(q);
    const bool x = (x_mask & bit) != 0;
    const bool z = (z_mask & bit) != 0;
    if (x && z) return PauliOp::Y;
    if (x) return PauliOp::X;
    if (z) return PauliOp::Z;
    return PauliOp::I;
}

int PauliString::max_qubit() const {
    const std::uint64_t support = x_mask | z_mask;
    if (support == 0) return -1;
    return 63 - std::countl_zero(support);
}

bool commutes(const PauliString& a, const PauliString& b) {
    const int anti = std::popcount(a.x_mask & b.z_mask) +
                     std::popcount(a.z_mask & b.x_mask);
    return (anti & 1) == 0;
}

void Observable::add_term(const PauliString& term) {
    for (PauliString& existing : terms) {
        if (existing.same_ops(term)) {
            existing.coefficient += term.coefficient;
            return;
        }
    }
    terms.push_back(term);
}

int Observable::max_qubit() const {
    int top = -1;
    for (const PauliString& term : terms) {
        top = std::max(top, term.max_qubit());
    }
    return top;
}

const PauliString* Observable::find(const PauliString& like) const {
    for (const PauliString& term : terms) {
        if (term.same_ops(like)) return &term;
    }
    return nullptr;
}

Observable make_observable(std::vector<PauliString> terms, double constant) {
    Observable obs;
    obs.constant = constant;
    for (const PauliString& term : terms) obs.add_term(term);
    return obs;
}

// P|b> = phase(b) |b ^ x_mask> with
// phase(b) = i^{#Y} * (-1)^{popcount(b & z_mask)}.
void apply_pauli(const PauliString& term, const StateVector& in,
                 StateVector& out) {
    out.n_qubits = in.n_qubits;
    out.amplitudes.assign(in.dim(), cdouble{});
    const std::uint64_t flip = term.x_mask;
    const cdouble base =
        term.coefficient * imag_power(std::popcount(term.x_mask & term.z_mask));
    for (std::uint64_t j = 0; j < in.dim(); ++j) {
        const std::uint64_t b = j ^ flip;
        const double sign =
            (std::popcount(b & term.z_mask) & 1) ? -1.0 : 1.0;
        out.amplitudes[j] = base * sign * in.amplitudes[b];
    }
}

StateVector apply_observable(const Observable& obs, const StateVector& psi) {
    if (obs.max_qubit() >= psi.n_qubits) {
        throw std::invalid_argument(
            "observable acts on more qubits than the state");
    }
    StateVector out;
    out.n_qubits = psi.n_qubits;
    out.amplitudes.assign(psi.dim(), cdouble{});
    if (obs.constant != 0.0) {
        for (std::uint64_t k = 0; k < psi.dim(); ++k) {
            out.amplitudes[k] = obs.constant * psi.amplitudes[k];
        }
    }
    for (const PauliString& term : obs.terms) {
        const std::uint64_t flip = term.x_mask;
        const cdouble base =
            term.coefficient *
            imag_power(std::popcount(term.x_mask & term.z_mask));
        for (std::uint64_t j = 0; j < psi.dim(); ++j) {
            const std::uint64_t b = j ^ flip;
            const double sign =
                (std::popcount(b & term.z_mask) & 1) ? -1.0 : 1.0;
            out.amplitudes[j] += base * sign * psi.amplitudes[b];
        }
    }
    return out;
}

double expectation(const StateVector& psi, const Observable& obs) {
    if (obs.max_qubit() >= psi.n_qubits) {
        throw std::invalid_argument(
            "observable acts on more qubits than the state");
    }
    cdouble acc = 0.0;
    for (const PauliString& term : obs.terms) {
        const std::uint64_t flip = term.x_mask;
        const cdouble base =
            imag_power(std::popcount(term.x_mask & term.z_mask));
        cdouble term_acc = 0.0;
        for (std::uint64_t b = 0; b < psi.dim(); ++b) {
            const double sign =
                (std::popcount(b & term.z_mask) & 1) ? -1.0 : 1.0;
            term_acc +=
                std::conj(psi.amplitudes[b ^ flip]) * sign * psi.amplitudes[b];
        }
        acc += term.coefficient * base * term_acc;
    }
    if (std::abs(acc.imag()) > kImagResidueLimit) {
        throw std::runtime_error(
            "expectation has non-Hermitian imaginary residue " +
            std::to_string(acc.imag()));
    }
    return acc.real() + obs.constant;
}

}  // namespace qgopt
