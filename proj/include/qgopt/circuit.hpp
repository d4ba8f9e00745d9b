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
#include <vector>

#include "qgopt/gates.hpp"

namespace qgopt {

enum class InitialState { AllZero, AllPlus };

/// Ordered gate list with a fixed number of free parameters. Gates with a
/// bound angle slot resolve to scale * params[index] at run time; one
/// parameter may feed many gates with different scales.
struct Circuit {
    int n_qubits = 0;
    int n_params = 0;
    InitialState initial_state = InitialState::AllZero;
    std::vector<Gate> gates;

    Circuit() = default;
    Circuit(int n_qubits, int n_params,
            InitialState init = InitialState::AllZero);

    /// Appends after validating qubit indices, parameter indices, and that
    /// only rotation gates carry bound slots.
    void add(const Gate& gate);
};

StateVector prepare_initial_state(const Circuit& circuit);

/// Prepares the initial state and applies all gates in order. params must
/// have exactly n_params entries.
StateVector run_circuit(const Circuit& circuit, std::span<const double> params);

struct GateCounts {
    long singles = 0;
    long doubles = 0;

    bool operator==(const GateCounts&) const = default;
};

/// Literal traversal count by gate arity. An AllPlus initial state counts as
/// n_qubits single-qubit gates (the preparation Hadamards).
GateCounts count_gates(const Circuit& circuit);

enum class ParamRole { ThetaY, ThetaZ, Eta, Gamma, Beta };

struct ParamLabel {
    ParamRole role;
    int layer = 0;
    int qubit = -1;  // -1 for per-layer parameters

    bool operator==(const ParamLabel&) const = default;
};

struct ParamLayout {
    int n_params = 0;
    std::vector<ParamLabel> labels;
};

}  // namespace qgopt
