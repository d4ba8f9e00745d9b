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

#include "qgopt/dense.hpp"
#include "qgopt/graph.hpp"
#include "qgopt/pauli.hpp"

namespace qgopt {

/// XY-form graph Hamiltonian:
///   sum_{(i,j)} E_ij (X_i X_j + Y_i Y_j)  -  sum_i E_ii Z_i.
Observable build_ht_observable(const GraphInstance& graph);

/// Projector-form graph Hamiltonian as a dense matrix:
///   sum_{(i,j)} E_ij (|1><0|_i (x) |0><1|_j + h.c.)  +  sum_i E_ii |1><1|_i.
/// Equals (XY form)/2 + (sum_i E_ii / 2) * I. Verification only; n <= 10.
DenseMatrix build_projector_matrix(const GraphInstance& graph, int n_qubits);

}  // namespace qgopt
