// Copyright 2026 The ZZZY Authors
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

#ifndef ZZZY_BLOSSOM_H
#define ZZZY_BLOSSOM_H

#include <cstdint>
#include <span>
#include <vector>

namespace zzzy {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  int64_t weight = 0;
};

/// Maximum-weight matching on a general graph (Edmonds' blossom algorithm with
/// dual variables, O(V^3)). With `max_cardinality` the result maximizes weight
/// among maximum-cardinality matchings. Returns mate[v], or -1 if unmatched.
std::vector<int> max_weight_matching(int num_vertices, std::span<const WeightedEdge> edges,
                                     bool max_cardinality);

/// Minimum-cost perfect matching; `weight` is read as a cost. Throws
/// std::invalid_argument if the graph has no perfect matching.
std::vector<int> min_cost_perfect_matching(int num_vertices, std::span<const WeightedEdge> edges);

}  // namespace zzzy

#endif  // ZZZY_BLOSSOM_H
