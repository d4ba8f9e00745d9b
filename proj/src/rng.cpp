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

#include "qgopt/rng.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace qgopt {

double SeededRng::angle() {
    return uniform(-std::numbers::pi, std::numbers::pi);
}

std::vector<std::pair<int, int>> sample_edge_pairs(int n, int k,
                                                   SeededRng& rng) {
    if (n < 1) throw std::invalid_argument("need at least one vertex");
    const std::size_t total =
        static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    if (k < 0 || static_cast<std::size_t>(k) > total) {
        throw std::invalid_argument("edge count exceeds n(n-1)/2");
    }
    std::vector<std::pair<int, int>> pool;
    pool.reserve(total);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) pool.emplace_back(i, j);
    }
    // Partial Fisher-Yates: the first k slots end up a uniform sample.
    for (int slot = 0; slot < k; ++slot) {
        const std::size_t pick =
            slot + static_cast<std::size_t>(rng.below(pool.size() - slot));
        std::swap(pool[static_cast<std::size_t>(slot)], pool[pick]);
    }
    pool.resize(static_cast<std::size_t>(k));
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace qgopt
