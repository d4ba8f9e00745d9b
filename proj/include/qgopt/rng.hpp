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
#include <random>
#include <utility>
#include <vector>

namespace qgopt {

/// Seeded generator with hand-rolled distributions, so identical seeds give
/// identical streams on every platform (std distributions do not guarantee
/// that).
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in the open interval (0, 1), 53-bit resolution.
    double uniform01() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    /// Uniform in (-pi, pi).
    double angle();

    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  private:
    std::mt19937_64 engine_;
};

/// k distinct unordered pairs (i < j) over n vertices, drawn uniformly
/// without replacement and returned sorted.
std::vector<std::pair<int, int>> sample_edge_pairs(int n, int k,
                                                   SeededRng& rng);

}  // namespace qgopt
