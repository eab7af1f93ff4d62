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

#ifndef ZZZY_MATCHING_H
#define ZZZY_MATCHING_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace zzzy {

/// Path and matching costs in fixed point: one unit of qubit weight is
/// kCostScale. Integer costs make ties such as 0.9 + 1.1 == 1.0 + 1.0 exact.
using Cost = int64_t;
inline constexpr Cost kCostScale = 1'000'000;

Cost to_cost(double weight);
double from_cost(Cost cost);

/// Matching instance for one decoding pass: k highlighted ancillas, each with
/// its own virtual boundary copy. In the expanded graph nodes 0..k-1 are the
/// ancillas and k..2k-1 their boundary copies; ancilla i connects to every
/// other ancilla and to boundary copy k+i only, boundary copies connect to each
/// other at zero cost.
class MatchingProblem {
 public:
  MatchingProblem() = default;
  explicit MatchingProblem(std::size_t num_ancillas);

  std::size_t num_ancillas() const { return k_; }
  std::size_t node_count() const { return 2 * k_; }

  void set_pair_cost(std::size_t i, std::size_t j, Cost cost);
  void set_boundary_cost(std::size_t i, Cost cost) { boundary_[i] = cost; }
  Cost pair_cost(std::size_t i, std::size_t j) const { return pair_[i * k_ + j]; }
  Cost boundary_cost(std::size_t i) const { return boundary_[i]; }

  /// Cost of edge (u, v) in the expanded graph, or nullopt if absent.
  std::optional<Cost> edge_cost(std::size_t u, std::size_t v) const;

 private:
  std::size_t k_ = 0;
  std::vector<Cost> pair_;
  std::vector<Cost> boundary_;
};

inline constexpr int kBoundary = -1;

/// partner[i] is the ancilla matched with i, or kBoundary.
struct Pairing {
  std::vector<int> partner;
  Cost cost = 0;
};

/// Largest instance solved by the exact subset dynamic program. Bigger
/// instances go to the blossom solver.
inline constexpr std::size_t kMaxDpAncillas = 16;

/// Exact minimum-weight perfect matching of the expanded graph. Up to
/// kMaxDpAncillas ancillas the result is the lexicographically smallest
/// optimal pairing (partners compared in ancilla order, boundary ranked last);
/// beyond that ties are resolved by the blossom solver, deterministically.
Pairing mwpm(const MatchingProblem& problem);

/// Same optimum through the general blossom solver on the expanded graph.
Pairing mwpm_blossom(const MatchingProblem& problem);

}  // namespace zzzy

#endif  // ZZZY_MATCHING_H
