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

#include <map>
#include <utility>
#include <vector>

namespace qgopt {

/// Weighted simple graph. Edge keys are strictly ordered pairs (i < j) with
/// nonzero weights; self-weights live in vertex_weights, never as edges.
struct GraphInstance {
    int n = 0;
    std::map<std::pair<int, int>, double> edges;
    std::vector<double> vertex_weights;

    GraphInstance() = default;
    explicit GraphInstance(int n_vertices);

    void add_edge(int i, int j, double weight);
    int edge_count() const { return static_cast<int>(edges.size()); }
    double vertex_weight_sum() const;
};

}  // namespace qgopt
