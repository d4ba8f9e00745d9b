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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qgopt {

using cdouble = std::complex<double>;

inline constexpr int kMaxQubits = 24;

/// Dense statevector over n qubits.
///
/// Basis index bit k corresponds to qubit k, with qubit 0 as the least
/// significant bit. Bitstrings are printed with the highest qubit first,
/// so index 2 on two qubits reads "10".
struct StateVector {
    int n_qubits = 0;
    std::vector<cdouble> amplitudes;

    StateVector() = default;

    /// Allocates an n-qubit register in |0...0>.
    explicit StateVector(int n);

    std::size_t dim() const { return amplitudes.size(); }
    double norm_sq() const;
};

/// Basis state from a bitstring of length n (highest qubit first).
StateVector init_basis(int n_qubits, const std::string& bits);

/// Uniform superposition |+>^n, every amplitude 2^(-n/2).
StateVector init_plus(int n_qubits);

/// p_x = |amplitude_x|^2, indexed by basis index.
std::vector<double> probabilities(const StateVector& state);

std::string index_to_bitstring(std::uint64_t index, int n_qubits);
std::uint64_t bitstring_to_index(const std::string& bits);

/// <a|b>.
cdouble inner_product(const StateVector& a, const StateVector& b);

}  // namespace qgopt
