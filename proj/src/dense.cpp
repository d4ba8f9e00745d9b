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

#include "qgopt/dense.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qgopt {

namespace {

cdouble imag_power(int k) {
    switch (k & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

void check_dense_qubits(int n) {
    if (n < 1 || n > kMaxDenseQubits) {
        throw std::invalid_argument(
            "dense oracle supports 1.." + std::to_string(kMaxDenseQubits) +
            " qubits, got " + std::to_string(n));
    }
}

}  // namespace

DenseMatrix DenseMatrix::zero(std::size_t dim) {
    return {dim, std::vector<cdouble>(dim * dim, cdouble{})};
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix m = zero(dim);
    for (std::size_t k = 0; k < dim; ++k) m.at(k, k) = 1.0;
    return m;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dim != b.dim) {
        throw std::invalid_argument("matmul dimension mismatch");
    }
    DenseMatrix out = DenseMatrix::zero(a.dim);
    for (std::size_t r = 0; r < a.dim; ++r) {
        for (std::size_t k = 0; k < a.dim; ++k) {
            const cdouble ark = a.at(r, k);
            if (ark == cdouble{}) continue;
            for (std::size_t c = 0; c < a.dim; ++c) {
                out.at(r, c) += ark * b.at(k, c);
            }
        }
    }
    return out;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dim != b.dim) {
        throw std::invalid_argument("matrix comparison dimension mismatch");
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < a.data.size(); ++k) {
        worst = std::max(worst, std::abs(a.data[k] - b.data[k]));
    }
    return worst;
}

DenseMatrix observable_matrix(const Observable& obs, int n_qubits) {
    check_dense_qubits(n_qubits);
    if (obs.max_qubit() >= n_qubits) {
        throw std::invalid_argument("observable exceeds requested qubit count");
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    DenseMatrix m = DenseMatrix::zero(dim);
    for (std::size_t b = 0; b < dim; ++b) m.at(b, b) = obs.constant;
    for (const PauliString& term : obs.terms) {
        const std::uint64_t flip = term.x_mask;
        const cdouble base =
            term.coefficient *
            imag_power(std::popcount(term.x_mask & term.z_mask));
        for (std::uint64_t b = 0; b < dim; ++b) {
            const double sign =
                (std::popcount(b & term.z_mask) & 1) ? -1.0 : 1.0;
            m.at(b ^ flip, b) += base * sign;
        }
    }
    return m;
}

StateVector matvec(const DenseMatrix& m, const StateVector& v) {
    if (m.dim != v.dim()) {
        throw std::invalid_argument("matvec dimension mismatch");
    }
    StateVector out;
    out.n_qubits = v.n_qubits;
    out.amplitudes.assign(m.dim, cdouble{});
    for (std::size_t r = 0; r < m.dim; ++r) {
        cdouble acc = 0.0;
        for (std::size_t c = 0; c < m.dim; ++c) {
            acc += m.at(r, c) * v.amplitudes[c];
        }
        out.amplitudes[r] = acc;
    }
    return out;
}

}  // namespace qgopt
