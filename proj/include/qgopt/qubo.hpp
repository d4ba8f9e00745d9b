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

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qgopt/graph.hpp"
#include "qgopt/pauli.hpp"

namespace qgopt {

/// Bijection between binary variable values and Pauli-Z eigenvalues.
///
/// ZeroIsPlusOne substitutes x_i = (Z_i + 1)/2, OneIsPlusOne substitutes
/// x_i = (1 - Z_i)/2. Since Z|b> = (-1)^b |b> in the computational basis,
/// OneIsPlusOne encodes an assignment x in the basis state with the same
/// bits, while ZeroIsPlusOne encodes it with all bits complemented.
enum class SpinConvention { ZeroIsPlusOne, OneIsPlusOne };

/// Basis index of the state encoding the given variable assignment.
/// Self-inverse, so it also decodes basis indices back to assignments.
std::uint64_t assignment_to_basis(std::uint64_t assignment, int n,
                                  SpinConvention conv);

enum class ProblemKind { Generic, Portfolio, Mvc };

/// Binary quadratic objective
///   l(x) = sum_i (diag_i + linear_i) x_i
///        + sum_{i<j} 2 * quad_ij x_i x_j  +  constant,
/// where quad stores the symmetric coefficient matrix once per unordered
/// pair; the factor 2 folds in both (i,j) and (j,i) of the double sum.
struct QuboInstance {
    int n = 0;
    std::vector<double> diag;
    std::vector<double> linear;
    std::map<std::pair<int, int>, double> quad;  // keys i < j
    double constant = 0.0;

    ProblemKind kind = ProblemKind::Generic;
    double lambda = 0.5;  // Portfolio trade-off
    double b = 1.0;       // Mvc vertex penalty
    std::uint64_t seed = 0;

    QuboInstance() = default;
    explicit QuboInstance(int n_vars);

    void set_quad(int i, int j, double value);
    double objective(std::uint64_t assignment) const;

    bool operator==(const QuboInstance&) const = default;
};

/// Diagonal observable compiled from a QUBO. For every assignment x,
///   <enc(x)| observable |enc(x)> + offset == objective(x),
/// with enc the basis encoding of the recorded convention.
struct CompiledObservable {
    Observable observable;
    double offset = 0.0;
    SpinConvention convention = SpinConvention::ZeroIsPlusOne;

    /// The observable with the offset folded into its constant, so circuit
    /// expectations equal the classical objective directly.
    Observable with_offset() const;
};

CompiledObservable qubo_to_observable(const QuboInstance& instance,
                                      SpinConvention conv);

/// Mean-variance portfolio objective
///   l(x) = lambda x^T V x - (1 - lambda) mu^T x
/// compiled with the ZeroIsPlusOne substitution. V must be symmetric and
/// lambda must lie in [0, 1].
CompiledObservable portfolio_observable(
    const std::vector<std::vector<double>>& covariance,
    const std::vector<double>& returns, double lambda);

/// Vertex-cover objective
///   l(x) = sum_{(i,j) in E} (1 - x_i)(1 - x_j) + b sum_i x_i
/// compiled with the OneIsPlusOne substitution; per-edge constants land in
/// the offset. Only the edge set of the graph is used.
CompiledObservable mvc_observable(const GraphInstance& graph, double b);

/// Convention used by the harness for each problem kind.
SpinConvention convention_for(ProblemKind kind);

}  // namespace qgopt
