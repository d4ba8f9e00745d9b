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

#include "qgopt/qubo.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qgopt {

std::uint64_t assignment_to_basis(std::uint64_t assignment, int n,
                                  SpinConvention conv) {
    if (conv == SpinConvention::OneIsPlusOne) return assignment;
    const std::uint64_t all = (n >= 64) ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << n) - 1;
    return assignment ^ all;
}

QuboInstance::QuboInstance(int n_vars) : n(n_vars) {
    if (n < 1) {
        throw std::invalid_argument("instance needs at least one variable");
    }
    diag.assign(static_cast<std::size_t>(n), 0.0);
    linear.assign(static_cast<std::size_t>(n), 0.0);
}

void QuboInstance::set_quad(int i, int j, double value) {
    if (i == j || i < 0 || j < 0 || i >= n || j >= n) {
        throw std::invalid_argument("quadratic pair out of range");
    }
    const auto key = std::minmax(i, j);
    quad[{key.first, key.second}] = value;
}

double QuboInstance::objective(std::uint64_t assignment) const {
    double value = constant;
    for (int i = 0; i < n; ++i) {
        if ((assignment >> i) & 1) {
            value += diag[static_cast<std::size_t>(i)] +
                     linear[static_cast<std::size_t>(i)];
        }
    }
    for (const auto& [pair, w] : quad) {
        if (((assignment >> pair.first) & 1) &&
            ((assignment >> pair.second) & 1)) {
            value += 2.0 * w;
        }
    }
    return value;
}

Observable CompiledObservable::with_offset() const {
    Observable shifted = observable;
    shifted.constant += offset;
    return shifted;
}

// Substituting x_i = (1 + s Z_i)/2 (s = +1 for ZeroIsPlusOne, -1 for
// OneIsPlusOne) into the objective. A pair with stored weight w contributes
// the full 2w x_i x_j, i.e. (w/2)(1 + s Z_i + s Z_j + Z_i Z_j). Terms are
// emitted only for nonzero source coefficients; merged cancellations keep
// their zero-coefficient term.
CompiledObservable qubo_to_observable(const QuboInstance& instance,
                                      SpinConvention conv) {
    if (instance.n < 1 ||
        instance.diag.size() != static_cast<std::size_t>(instance.n) ||
        instance.linear.size() != static_cast<std::size_t>(instance.n)) {
        throw std::invalid_argument("malformed instance");
    }
    const double s = (conv == SpinConvention::ZeroIsPlusOne) ? 1.0 : -1.0;

    CompiledObservable compiled;
    compiled.convention = conv;
    compiled.offset = instance.constant;

    for (int i = 0; i < instance.n; ++i) {
        const double c = instance.diag[static_cast<std::size_t>(i)] +
                         instance.linear[static_cast<std::size_t>(i)];
        if (c == 0.0) continue;
        compiled.observable.add_term(PauliString::z(i, s * c / 2.0));
        compiled.offset += c / 2.0;
    }
    for (const auto& [pair, w] : instance.quad) {
        if (w == 0.0) continue;
        compiled.observable.add_term(
            PauliString::zz(pair.first, pair.second, w / 2.0));
        compiled.observable.add_term(PauliString::z(pair.first, s * w / 2.0));
        compiled.observable.add_term(PauliString::z(pair.second, s * w / 2.0));
        compiled.offset += w / 2.0;
    }
    return compiled;
}

CompiledObservable portfolio_observable(
    const std::vector<std::vector<double>>& covariance,
    const std::vector<double>& returns, double lambda) {
    const std::size_t n = covariance.size();
    if (n == 0 || returns.size() != n) {
        throw std::invalid_argument("covariance and returns sizes must match");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (covariance[i].size() != n) {
            throw std::invalid_argument("covariance must be square");
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (covariance[i][j] != covariance[j][i]) {
                throw std::invalid_argument("covariance must be symmetric");
            }
        }
    }
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw std::invalid_argument("lambda must lie in [0, 1]");
    }

    CompiledObservable compiled;
    compiled.convention = SpinConvention::ZeroIsPlusOne;
    for (std::size_t i = 0; i < n; ++i) {
        const double c = lambda * covariance[i][i] - (1.0 - lambda) * returns[i];
        if (c != 0.0) {
            compiled.observable.add_term(
                PauliString::z(static_cast<int>(i), c / 2.0));
            compiled.offset += c / 2.0;
        }
        // x^T V x counts each off-diagonal pair twice.
        for (std::size_t j = i + 1; j < n; ++j) {
            const double t = 2.0 * lambda * covariance[i][j];
            if (t == 0.0) continue;
            compiled.observable.add_term(PauliString::zz(
                static_cast<int>(i), static_cast<int>(j), t / 4.0));
            compiled.observable.add_term(
                PauliString::z(static_cast<int>(i), t / 4.0));
            compiled.observable.add_term(
                PauliString::z(static_cast<int>(j), t / 4.0));
            compiled.offset += t / 4.0;
        }
    }
    return compiled;
}

CompiledObservable mvc_observable(const GraphInstance& graph, double b) {
    CompiledObservable compiled;
    compiled.convention = SpinConvention::OneIsPlusOne;
    // (1 - x_i)(1 - x_j) = (1 + Z_i + Z_j + Z_i Z_j)/4 under x = (1 - Z)/2.
    for (const auto& [edge, weight] : graph.edges) {
        (void)weight;  // edge presence only
        compiled.observable.add_term(PauliString::z(edge.first, 0.25));
        compiled.observable.add_term(PauliString::z(edge.second, 0.25));
        compiled.observable.add_term(
            PauliString::zz(edge.first, edge.second, 0.25));
        compiled.offset += 0.25;
    }
    for (int v = 0; v < graph.n; ++v) {
        compiled.observable.add_term(PauliString::z(v, -b / 2.0));
        compiled.offset += b / 2.0;
    }
    return compiled;
}

SpinConvention convention_for(ProblemKind kind) {
    return kind == ProblemKind::Mvc ? SpinConvention::OneIsPlusOne
                                    : SpinConvention::ZeroIsPlusOne;
}

}  // namespace qgopt
