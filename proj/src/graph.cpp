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

#include "qgopt/graph.hpp"

#include <stdexcept>
#include <string>

namespace qgopt {

GraphInstance::GraphInstance(int n_vertices) : n(n_vertices) {
    if (n < 1) {
        throw std::invalid_argument("graph needs at least one vertex");
    }
    vertex_weights.assign(static_cast<std::size_t>(n), 0.0);
}

void GraphInstance::add_edge(int i, int j, double weight) {
    if (i == j) {
        throw std::invalid_argument("self-loops belong in vertex_weights");
    }
    if (i < 0 || j < 0 || i >= n || j >= n) {
        throw std::invalid_argument("edge endpoint out of range");
    }
    if (weight == 0.0) {
        throw std::invalid_argument("edge weight must be nonzero");
    }
    const auto key = std::minmax(i, j);
    if (!edges.emplace(std::pair{key.first, key.second}, weight).second) {
        throw std::invalid_argument("duplicate edge (" + std::to_string(i) +
                                    ", " + std::to_string(j) + ")");
    }
}

double GraphInstance::vertex_weight_sum() const {
    double total = 0.0;
    for (double w : vertex_weights) total += w;
    return total;
}

}  // namespace qgopt
