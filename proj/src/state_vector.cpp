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

#include "qgopt/state_vector.hpp"

#include <cmath>
#include <stdexcept>

namespace qgopt {

namespace {

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in [1, " +
                                    std::to_string(kMaxQubits) + "], got " +
                                    std::to_string(n));
    }
}

}  // namespace

StateVector::StateVector(int n) : n_qubits(n) {
    check_qubit_count(n);
    amplitudes.assign(std::size_t{1} << n, cdouble{});
    amplitudes[0] = 1.0;
}

double StateVector::norm_sq() const {
    double total = 0.0;
    for (const cdouble& a : amplitudes) total += std::norm(a);
    return total;
}

StateVector init_basis(int n_qubits, const std::string& bits) {
    check_qubit_count(n_qubits);
    if (static_cast<int>(bits.size()) != n_qubits) {
        throw std::invalid_argument("bitstring length " +
                                    std::to_string(bits.size()) +
                                    " does not match qubit count " +
                                    std::to_string(n_qubits));
    }
    StateVector state(n_qubits);
    state.amplitudes[0] = 0.0;
    state.amplitudes[bitstring_to_index(bits)] = 1.0;
    return state;
}

StateVector init_plus(int n_qubits) {
    check_qubit_count(n_qubits);
    StateVector state(n_qubits);
    const double amp = std::pow(2.0, -0.5 * n_qubits);
    for (cdouble& a : state.amplitudes) a = amp;
    return state;
}

std::vector<double> probabilities(const StateVector& state) {
    std::vector<double> probs(state.dim());
    for (std::size_t k = 0; k < probs.size(); ++k) {
        probs[k] = std::norm(state.amplitudes[k]);
    }
    return probs;
}

std::string index_to_bitstring(std::uint64_t index, int n_qubits) {
    std::string bits(static_cast<std::size_t>(n_qubits), '0');
    for (int q = 0; q < n_qubits; ++q) {
        if ((index >> q) & 1) bits[static_cast<std::size_t>(n_qubits - 1 - q)] = '1';
    }
    return bits;
}

std::uint64_t bitstring_to_index(const std::string& bits) {
    std::uint64_t index = 0;
    const int n = static_cast<int>(bits.size());
    for (int pos = 0; pos < n; ++pos) {
        const char c = bits[static_cast<std::size_t>(pos)];
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bitstring may contain only '0'/'1'");
        }
        if (c == '1') index |= std::uint64_t{1} << (n - 1 - pos);
    }
    return index;
}

cdouble inner_product(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("inner product of mismatched dimensions");
    }
    cdouble acc = 0.0;
    for (std::size_t k = 0; k < a.dim(); ++k) {
        acc += std::conj(a.amplitudes[k]) * b.amplitudes[k];
    }
    return acc;
}

}  // namespace qgopt
