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

#include "qgopt/adam.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qgopt/rng.hpp"

namespace qgopt {

namespace {

constexpr double kFiniteDiffEps = 1e-5;

bool all_finite(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(),
                       [](double x) { return std::isfinite(x); });
}

// Spread (max - min) of the trailing `window` entries.
double trailing_spread(const std::vector<double>& losses, int window) {
    const std::size_t start = losses.size() - static_cast<std::size_t>(window);
    double lo = losses[start];
    double hi = losses[start];
    for (std::size_t i = start + 1; i < losses.size(); ++i) {
        lo = std::min(lo, losses[i]);
        hi = std::max(hi, losses[i]);
    }
    return hi - lo;
}

}  // namespace

std::vector<double> init_params(const ParamLayout& layout, std::uint64_t seed) {
    SeededRng rng(seed);
    std::vector<double> params(static_cast<std::size_t>(layout.n_params));
    for (double& p : params) p = rng.angle();
    return params;
}

OptTrace adam_minimize(const Circuit& circuit, const Observable& obs,
                       std::vector<double> init, const AdamConfig& cfg,
                       GradientEngine engine) {
    if (static_cast<int>(init.size()) != circuit.n_params) {
        throw std::invalid_argument("initial parameter count mismatch");
    }
    if (!(cfg.learning_rate > 0.0)) {
        throw std::invalid_argument("learning rate must be positive");
    }
    if (cfg.window < 1) throw std::invalid_argument("window must be >= 1");
    if (cfg.max_iters < 0) throw std::invalid_argument("max_iters must be >= 0");

    OptTrace trace;
    std::vector<double> params = std::move(init);
    std::vector<double> m(params.size(), 0.0);
    std::vector<double> v(params.size(), 0.0);

    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        double loss;
        std::vector<double> grad;
        if (engine == GradientEngine::Adjoint) {
            std::tie(loss, grad) =
                adjoint_value_and_gradient(circuit, obs, params);
        } else {
            loss = expectation(run_circuit(circuit, params), obs);
            grad = finite_diff_gradient(circuit, obs, params, kFiniteDiffEps);
        }
        if (!std::isfinite(loss) || !all_finite(grad)) {
            throw std::runtime_error(
                "non-finite loss or gradient at iteration " +
                std::to_string(iter));
        }

        double norm_sq = 0.0;
        for (double g : grad) norm_sq += g * g;
        trace.losses.push_back(loss);
        trace.grad_norms.push_back(std::sqrt(norm_sq));

        if (static_cast<int>(trace.losses.size()) >= cfg.window &&
            trailing_spread(trace.losses, cfg.window) < cfg.tol) {
            trace.converged_at = static_cast<int>(trace.losses.size());
            break;
        }

        const double bc1 = 1.0 - std::pow(cfg.beta1, iter + 1);
        const double bc2 = 1.0 - std::pow(cfg.beta2, iter + 1);
        for (std::size_t j = 0; j < params.size(); ++j) {
            m[j] = cfg.beta1 * m[j] + (1.0 - cfg.beta1) * grad[j];
            v[j] = cfg.beta2 * v[j] + (1.0 - cfg.beta2) * grad[j] * grad[j];
            const double m_hat = m[j] / bc1;
            const double v_hat = v[j] / bc2;
            params[j] -= cfg.learning_rate * m_hat /
                         (std::sqrt(v_hat) + cfg.epsilon);
        }
    }

    trace.final_params = std::move(params);
    return trace;
}

}  // namespace qgopt
