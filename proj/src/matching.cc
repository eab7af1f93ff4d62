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

#include "zzzy/matching.h"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "zzzy/blossom.h"

namespace zzzy {

Cost to_cost(double weight) { return static_cast<Cost>(std::llround(weight * kCostScale)); }

double from_cost(Cost cost) { return static_cast<double>(cost) / kCostScale; }

MatchingProblem::MatchingProblem(std::size_t num_ancillas)
    : k_(num_ancillas), pair_(num_ancillas * num_ancillas, 0), boundary_(num_ancillas, 0) {}

void MatchingProblem::set_pair_cost(std::size_t i, std::size_t j, Cost cost) {
  pair_[i * k_ + j] = cost;
  pair_[j * k_ + i] = cost;
}

std::optional<Cost> MatchingProblem::edge_cost(std::size_t u, std::size_t v) const {
  if (u == v || u >= node_count() || v >= node_count()) {
    return std::nullopt;
  }
  if (u > v) {
    std::swap(u, v);
  }
  if (v < k_) {
    return pair_cost(u, v);
  }
  if (u >= k_) {
    return Cost{0};
  }
  if (v == u + k_) {
    return boundary_[u];
  }
  return std::nullopt;
}

namespace {

Pairing mwpm_dp(const MatchingProblem& problem) {
  const std::size_t k = problem.num_ancillas();
  const std::size_t states = std::size_t{1} << k;
  constexpr Cost kUnset = std::numeric_limits<Cost>::max();
  std::vector<Cost> best(states, kUnset);
  std::vector<int8_t> choice(states, kBoundary);
  best[0] = 0;
  for (std::size_t mask = 1; mask < states; ++mask) {
    const int a = std::countr_zero(mask);
    const std::size_t rest = mask & (mask - 1);
    Cost chosen = kUnset;
    int partner = kBoundary;
    for (std::size_t others = rest; others != 0; others &= others - 1) {
      const int b = std::countr_zero(others);
      const Cost c = problem.pair_cost(a, b) + best[rest & ~(std::size_t{1} << b)];
      if (c < chosen) {
        chosen = c;
        partner = b;
      }
    }
    const Cost via_boundary = problem.boundary_cost(a) + best[rest];
    if (via_boundary < chosen) {
      chosen = via_boundary;
      partner = kBoundary;
    }
    best[mask] = chosen;
    choice[mask] = static_cast<int8_t>(partner);
  }

  Pairing out;
  out.partner.assign(k, kBoundary);
  out.cost = best[states - 1];
  std::size_t mask = states - 1;
  while (mask != 0) {
    const int a = std::countr_zero(mask);
    const int b = choice[mask];
    mask &= ~(std::size_t{1} << a);
    if (b != kBoundary) {
      out.partner[a] = b;
      out.partner[b] = a;
      mask &= ~(std::size_t{1} << b);
    }
  }
  return out;
}

}  // namespace

Pairing mwpm_blossom(const MatchingProblem& problem) {
  const std::size_t k = problem.num_ancillas();
  std::vector<WeightedEdge> edges;
  for (std::size_t u = 0; u < 2 * k; ++u) {
    for (std::size_t v = u + 1; v < 2 * k; ++v) {
      if (auto c = problem.edge_cost(u, v)) {
        edges.push_back({static_cast<int>(u), static_cast<int>(v), *c});
      }
    }
  }
  const auto mate = min_cost_perfect_matching(static_cast<int>(2 * k), edges);
  Pairing out;
  out.partner.assign(k, kBoundary);
  for (std::size_t i = 0; i < k; ++i) {
    const auto m = static_cast<std::size_t>(mate[i]);
    if (m < k) {
      out.partner[i] = static_cast<int>(m);
      if (i < m) {
        out.cost += problem.pair_cost(i, m);
      }
    } else {
      out.cost += problem.boundary_cost(i);
    }
  }
  return out;
}

Pairing mwpm(const MatchingProblem& problem) {
  if (problem.num_ancillas() == 0) {
    return Pairing{};
  }
  if (problem.num_ancillas() <= kMaxDpAncillas) {
    return mwpm_dp(problem);
  }
  return mwpm_blossom(problem);
}

}  // namespace zzzy
