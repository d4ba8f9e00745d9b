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

#include <cstddef>
#include <vector>

#include "qgopt/pauli.hpp"

namespace qgopt {

// Dense matrices exist for verification only; operations reject n_qubits > 10.
inline constexpr int kMaxDenseQubits = 10;

struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<cdouble> data;  // row-major

    static DenseMatrix zero(std::size_t dim);
    static DenseMatrix identity(std::size_t dim);

    cdouble& at(std::size_t r, std::size_t c) { return data[r * dim + c]; }
    const cdouble& at(std::size_t r, std::size_t c) const {
        return data[r * dim + c];
    }
};

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// Kronecker expansion of the observable over n qubits; Hermitian to ~1e-12.
DenseMatrix observable_matrix(const Observable& obs, int n_qubits);

StateVector matvec(const DenseMatrix& m, const StateVector& v);

}  // namespace qgopt
