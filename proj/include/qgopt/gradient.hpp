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

#include "qgopt/circuit.hpp"
#include "qgopt/pauli.hpp"

namespace qgopt {

/// Exact gradient of <obs> by reverse sweep: one forward pass, then each
/// gate is peeled off while accumulating Im<bra|G|ket> per bound slot,
/// chain-ruled through the slot scale. Parameters shared across gates sum
/// their per-gate contributions.
std::vector<double> adjoint_gradient(const Circuit& circuit,
                                     const Observable& obs,
                                     std::span<const double> params);

/// Same sweep, also returning the expectation value of the forward state.
std::pair<double, std::vector<double>> adjoint_value_and_gradient(
    const Circuit& circuit, const Observable& obs,
    std::span<const double> params);

/// Central differences (f(p + eps e_j) - f(p - eps e_j)) / (2 eps).
/// Validation oracle for the adjoint path.
std::vector<double> finite_diff_gradient(const Circuit& circuit,
                                         const Observable& obs,
                                         std::span<const double> params,
                                         double eps);

}  // namespace qgopt
