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
#include <optional>
#include <vector>

#include "qgopt/circuit.hpp"
#include "qgopt/gradient.hpp"
#include "qgopt/pauli.hpp"

namespace qgopt {

struct AdamConfig {
    double learning_rate = 0.05;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    int max_iters = 500;
    double tol = 1e-6;  // loss-spread threshold over the trailing window
    int window = 25;
    std::uint64_t seed = 0;
};

struct OptTrace {
    std::vector<double> losses;      // loss at the parameters of iteration t
    std::vector<double> grad_norms;  // l2 norm
    std::vector<double> final_params;
    std::optional<int> converged_at;  // iterations run when converged

    int iterations() const { return static_cast<int>(losses.size()); }
};

enum class GradientEngine { Adjoint, FiniteDiff };

/// Uniform(-pi, pi) per parameter, deterministic per seed.
std::vector<double> init_params(const ParamLayout& layout, std::uint64_t seed);

/// ADAM with bias correction. Stops at max_iters, or earlier once the spread
/// of the trailing `window` losses falls below tol (checked before the
/// update, so a flat objective converges exactly at iteration `window`).
/// Non-finite losses or gradients abort with the iteration index.
OptTrace adam_minimize(const Circuit& circuit, const Observable& obs,
                       std::vector<double> init, const AdamConfig& cfg,
                       GradientEngine engine = GradientEngine::Adjoint);

}  // namespace qgopt
