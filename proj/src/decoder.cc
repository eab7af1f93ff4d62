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

#include "zzzy/decoder.h"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "zzzy/channel.h"

namespace zzzy {

namespace {

constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;
// Jitter stays far below the 0.1 weight resolution even summed over many paths.
constexpr uint64_t kJitterRange = 16;

std::vector<Cost> dijkstra(const PassGraph& g, int source, auto&& weight) {
  const int boundary = g.boundary_node();
  std::vector<Cost> dist(static_cast<std::size_t>(g.num_nodes() + 1), kInf);
  using Item = std::pair<Cost, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[static_cast<std::size_t>(source)] = 0;
  heap.emplace(0, source);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[static_cast<std::size_t>(u)] || (u == boundary && u != source)) {
      continue;
    }
    for (const auto& inc : g.adjacent(u)) {
      const Cost nd = d + weight(inc.qubit);
      if (nd < dist[static_cast<std::size_t>(inc.neighbor)]) {
        dist[static_cast<std::size_t>(inc.neighbor)] = nd;
        heap.emplace(nd, inc.neighbor);
      }
    }
  }
  return dist;
}

// Walks back from `target` along tight edges, taking the smallest qubit index
// at every step. Requires strictly positive weights.
Path reconstruct(const PassGraph& g, const std::vector<Cost>& dist, int source, int target,
                 auto&& weight) {
  const int boundary = g.boundary_node();
  Path path;
  path.cost = dist[static_cast<std::size_t>(target)];
  if (path.cost >= kInf) {
    throw std::logic_error("matching graph is disconnected");
  }
  int v = target;
  while (v != source) {
    bool moved = false;
    for (const auto& inc : g.adjacent(v)) {
      const int u = inc.neighbor;
      if (u == boundary) {
        continue;
      }
      const Cost du = dist[static_cast<std::size_t>(u)];
      if (du < kInf && du + weight(inc.qubit) == dist[static_cast<std::size_t>(v)]) {
        path.qubits.push_back(inc.qubit);
        v = u;
        moved = true;
        break;
      }
    }
    if (!moved) {
      throw std::logic_error("shortest-path reconstruction failed");
    }
  }
  return path;
}

class SimplePathSearch {
 public:
  SimplePathSearch(const PassGraph& g, const std::vector<Cost>& cost, int source)
      : g_(g), cost_(cost), source_(source) {
    lower_ = dijkstra(g, source, [&](std::size_t q) { return std::max<Cost>(cost[q], 0); });
    for (const auto& e : g.edges()) {
      negative_total_ += std::min<Cost>(cost[e.qubit], 0);
    }
  }

  Path run(int target) {
    // Any simple path gives the starting bound; a positive surrogate weight
    // keeps the reconstruction acyclic.
    auto surrogate = [&](std::size_t q) { return std::max<Cost>(std::abs(cost_[q]), 1); };
    const auto dist = dijkstra(g_, source_, surrogate);
    const Path seed = reconstruct(g_, dist, source_, target, surrogate);
    best_ = 0;
    for (std::size_t q : seed.qubits) {
      best_ += cost_[q];
    }
    found_ = false;
    best_path_.clear();
    visited_.assign(static_cast<std::size_t>(g_.num_nodes() + 1), 0);
    visited_[static_cast<std::size_t>(g_.boundary_node())] = 1;
    visited_[static_cast<std::size_t>(target)] = 1;
    stack_.clear();
    dfs(target, 0, negative_total_);
    return Path{best_, best_path_};
  }

 private:
  void dfs(int v, Cost acc, Cost negative_left) {
    if (v == source_) {
      if ((!found_ && acc <= best_) || acc < best_) {
        best_ = acc;
        best_path_ = stack_;
        found_ = true;
      }
      return;
    }
    for (const auto& inc : g_.adjacent(v)) {
      const int u = inc.neighbor;
      if (visited_[static_cast<std::size_t>(u)] || lower_[static_cast<std::size_t>(u)] >= kInf) {
        continue;
      }
      const Cost w = cost_[inc.qubit];
      const Cost next_acc = acc + w;
      const Cost next_negative = negative_left - std::min<Cost>(w, 0);
      const Cost bound = next_acc + lower_[static_cast<std::size_t>(u)] + next_negative;
      if (found_ ? bound >= best_ : bound > best_) {
        continue;
      }
      visited_[static_cast<std::size_t>(u)] = 1;
      stack_.push_back(inc.qubit);
      dfs(u, next_acc, next_negative);
      stack_.pop_back();
      visited_[static_cast<std::size_t>(u)] = 0;
    }
  }

  const PassGraph& g_;
  const std::vector<Cost>& cost_;
  int source_;
  std::vector<Cost> lower_;
  Cost negative_total_ = 0;
  Cost best_ = 0;
  bool found_ = false;
  std::vector<std::size_t> best_path_;
  std::vector<std::size_t> stack_;
  std::vector<char> visited_;
};

DecoderOptions without_weight_update() {
  DecoderOptions options;
  options.update_weights = false;
  return options;
}

bool has_non_positive(const PassGraph& g, const std::vector<Cost>& cost) {
  for (const auto& e : g.edges()) {
    if (cost[e.qubit] <= 0) {
      return true;
    }
  }
  return false;
}

std::string row_name(const StabilizerCode& code, std::size_t row) {
  return "A" + std::to_string(code.label(row));
}

std::string format_weight(double w) {
  std::ostringstream out;
  out << w;
  return out.str();
}

}  // namespace

std::pair<WeightVector, std::size_t> update_weights_counted(const Syndrome& s, WeightVector q,
                                                           const StabilizerCode& code,
                                                           SharedQubitRule rule) {
  if (s.size() != code.num_generators() || q.q.size() != code.num_qubits()) {
    throw std::invalid_argument("update_weights: syndrome or weight length mismatch");
  }
  std::size_t steps = 0;
  std::vector<char> on(code.num_qubits(), 0);
  std::vector<char> off(code.num_qubits(), 0);
  for (std::size_t i = 0; i < code.n_zy(); ++i) {
    ++steps;
    (s[i] ? on : off)[code.h(i)] = 1;
  }
  auto split = [&](std::size_t j) { return on[j] && off[j]; };
  for (std::size_t i = 0; i < code.n_zy(); ++i) {
    const std::size_t j = code.h(i);
    if (split(j)) {
      q.q[j] = rule == SharedQubitRule::kNeutral ? 1.0 : kActivatedWeight;
    } else {
      q.q[j] = on[j] ? kActivatedWeight : kDeactivatedWeight;
    }
  }
  for (std::size_t i = 0; i < code.n_zy(); ++i) {
    const std::size_t j = code.h(i);
    if (!s[i] || (rule == SharedQubitRule::kNeutral && split(j))) {
      continue;
    }
    bool isolated = true;
    for (std::size_t x : code.g(j)) {
      ++steps;
      if (s[x]) {
        isolated = false;
      }
    }
    if (isolated) {
      q.q[j] = kIsolatedWeight;
    }
  }
  return {std::move(q), steps};
}

WeightVector update_weights(const Syndrome& s, WeightVector q, const StabilizerCode& code,
                            SharedQubitRule rule) {
  return update_weights_counted(s, std::move(q), code, rule).first;
}

PassGraph::PassGraph(const StabilizerCode& code, DecodingPass pass) : pass_(pass) {
  const std::size_t n = code.num_qubits();
  const std::size_t r = code.num_generators();
  node_of_row_.assign(r, -1);
  for (std::size_t row = 0; row < r; ++row) {
    if (code.in_x_pass(row) == (pass == DecodingPass::kX)) {
      node_of_row_[row] = static_cast<int>(rows_.size());
      rows_.push_back(row);
    }
  }
  adjacency_.assign(rows_.size() + 1, {});
  errors_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    errors_[j] = pass == DecodingPass::kX ? code.x_pass_error(j) : code.z_pass_error(j);
    const auto e = PauliOperator::single(n, j, errors_[j]);
    std::vector<int> ends;
    for (std::size_t row : rows_) {
      if (!commutes(code.generator(row), e)) {
        ends.push_back(node_of_row_[row]);
      }
    }
    if (ends.empty() || ends.size() > 2) {
      throw std::invalid_argument("qubit " + std::to_string(j + 1) +
                                  " does not form a matching-graph edge");
    }
    Edge edge{ends[0], ends.size() == 2 ? ends[1] : boundary_node(), j};
    edges_.push_back(edge);
    adjacency_[static_cast<std::size_t>(edge.u)].push_back({edge.v, j});
    adjacency_[static_cast<std::size_t>(edge.v)].push_back({edge.u, j});
  }
}

Path shortest_path(const PassGraph& graph, const std::vector<Cost>& cost, int source, int target) {
  if (source == target) {
    return Path{};
  }
  if (has_non_positive(graph, cost)) {
    return SimplePathSearch(graph, cost, source).run(target);
  }
  auto weight = [&](std::size_t q) { return cost[q]; };
  return reconstruct(graph, dijkstra(graph, source, weight), source, target, weight);
}

DistanceTable compute_distance(const PassGraph& graph, const Syndrome& s,
                               const std::vector<Cost>& cost) {
  DistanceTable table;
  std::vector<int> nodes;
  for (int v = 0; v < graph.num_nodes(); ++v) {
    if (s[graph.row(v)]) {
      nodes.push_back(v);
      table.rows.push_back(graph.row(v));
    }
  }
  const std::size_t k = nodes.size();
  table.problem = MatchingProblem(k);
  table.pair_paths.assign(k * k, {});
  table.boundary_paths.assign(k, {});
  if (k == 0) {
    return table;
  }
  table.exact_search = has_non_positive(graph, cost);
  auto store_pair = [&](std::size_t i, std::size_t j, Path p) {
    table.problem.set_pair_cost(i, j, p.cost);
    table.pair_paths[j * k + i] = p.qubits;
    table.pair_paths[i * k + j] = std::move(p.qubits);
  };
  if (table.exact_search) {
    for (std::size_t i = 0; i < k; ++i) {
      SimplePathSearch search(graph, cost, nodes[i]);
      for (std::size_t j = i + 1; j < k; ++j) {
        store_pair(i, j, search.run(nodes[j]));
      }
      Path b = search.run(graph.boundary_node());
      table.problem.set_boundary_cost(i, b.cost);
      table.boundary_paths[i] = std::move(b.qubits);
    }
  } else {
    auto weight = [&](std::size_t q) { return cost[q]; };
    for (std::size_t i = 0; i < k; ++i) {
      const auto dist = dijkstra(graph, nodes[i], weight);
      for (std::size_t j = i + 1; j < k; ++j) {
        store_pair(i, j, reconstruct(graph, dist, nodes[i], nodes[j], weight));
      }
      Path b = reconstruct(graph, dist, nodes[i], graph.boundary_node(), weight);
      table.problem.set_boundary_cost(i, b.cost);
      table.boundary_paths[i] = std::move(b.qubits);
    }
  }
  return table;
}

DistanceTable compute_distance(const Syndrome& s, const WeightVector& q, const StabilizerCode& code,
                               DecodingPass pass) {
  if (s.size() != code.num_generators() || q.q.size() != code.num_qubits()) {
    throw std::invalid_argument("compute_distance: syndrome or weight length mismatch");
  }
  std::vector<Cost> cost(q.q.size());
  std::transform(q.q.begin(), q.q.end(), cost.begin(), to_cost);
  return compute_distance(PassGraph(code, pass), s, cost);
}

Decoder::Decoder(StabilizerCode code, DecoderOptions options)
    : code_(std::move(code)),
      options_(options),
      x_graph_(code_, DecodingPass::kX),
      z_graph_(code_, DecodingPass::kZ) {}

std::vector<Cost> Decoder::pass_costs(const std::vector<double>& weights,
                                      std::optional<uint64_t> seed, uint64_t salt) const {
  std::vector<Cost> cost(weights.size());
  std::transform(weights.begin(), weights.end(), cost.begin(), to_cost);
  if (seed) {
    CounterRng rng(*seed, salt);
    for (auto& c : cost) {
      c += static_cast<Cost>(rng.next() % kJitterRange);
    }
  }
  return cost;
}

PassTrace Decoder::run_pass(const PassGraph& graph, const Syndrome& s,
                            const std::vector<Cost>& cost) const {
  PassTrace trace{compute_distance(graph, s, cost), Pairing{}, PauliOperator(code_.num_qubits())};
  trace.pairing = mwpm(trace.distances.problem);
  const std::size_t k = trace.distances.rows.size();
  auto apply = [&](const std::vector<std::size_t>& qubits) {
    for (std::size_t q : qubits) {
      trace.correction.apply(q, graph.error(q));
    }
  };
  for (std::size_t i = 0; i < k; ++i) {
    const int partner = trace.pairing.partner[i];
    if (partner == kBoundary) {
      apply(trace.distances.boundary_paths[i]);
    } else if (static_cast<std::size_t>(partner) > i) {
      apply(trace.distances.pair_paths[i * k + static_cast<std::size_t>(partner)]);
    }
  }
  return trace;
}

DecodeResult Decoder::decode(const Syndrome& s) const { return decode(s, options_.tie_break_seed); }

DecodeResult Decoder::decode(const Syndrome& s, std::optional<uint64_t> tie_break_seed) const {
  if (s.size() != code_.num_generators()) {
    throw std::invalid_argument("decode: syndrome length does not match the code");
  }
  auto weights = WeightVector::ones(code_.num_qubits());
  if (!options_.update_weights || code_.n_zy() == 0) {
    return decode_with(s, std::move(weights), tie_break_seed);
  }
  weights = update_weights(s, std::move(weights), code_, options_.shared_qubit);
  const bool touched = std::any_of(weights.q.begin(), weights.q.end(),
                                   [](double w) { return w != 1.0; });
  auto result = decode_with(s, std::move(weights), tie_break_seed);
  if (options_.guard_weight_update && touched) {
    auto plain = decode_with(s, WeightVector::ones(code_.num_qubits()), tie_break_seed);
    if (result.e_hat.weight() >= plain.e_hat.weight() + 2) {
      plain.weight_update_discarded = true;
      return plain;
    }
  }
  return result;
}

DecodeResult Decoder::decode_with(const Syndrome& s, WeightVector weights,
                                  std::optional<uint64_t> tie_break_seed) const {
  DecodeResult result;
  result.weights = std::move(weights);
  result.x_pass = run_pass(x_graph_, s, pass_costs(result.weights.q, tie_break_seed, 1));

  result.z_pass_syndrome = s;
  for (std::size_t row = 0; row < code_.x_pass_begin(); ++row) {
    if (!commutes(code_.generator(row), result.x_pass.correction)) {
      result.z_pass_syndrome.bits.flip(row);
      result.flipped_rows.push_back(row);
    }
  }
  const auto uniform = WeightVector::ones(code_.num_qubits());
  result.z_pass =
      run_pass(z_graph_, result.z_pass_syndrome, pass_costs(uniform.q, tie_break_seed, 2));
  result.e_hat = compose(result.x_pass.correction, result.z_pass.correction);
  return result;
}

PauliOperator Decoder::correct(const Syndrome& s) const { return correct(s, options_.tie_break_seed); }

PauliOperator Decoder::correct(const Syndrome& s, std::optional<uint64_t> tie_break_seed) const {
  if (s.bits.none()) {
    return PauliOperator(code_.num_qubits());
  }
  return decode(s, tie_break_seed).e_hat;
}

DecodeResult zzzy_decode(const Syndrome& s, const StabilizerCode& code) {
  return Decoder(code).decode(s);
}

DecodeResult surface_decode(const Syndrome& s, const StabilizerCode& code) {
  return Decoder(code, without_weight_update()).decode(s);
}

DecodeResult xzzx_decode(const Syndrome& s, const StabilizerCode& code) {
  if (code.family() != CodeFamily::kXzzx) {
    throw std::invalid_argument("xzzx_decode requires an XZZX code");
  }
  return Decoder(code, without_weight_update()).decode(s);
}

std::string_view residual_class_name(ResidualClass c) {
  switch (c) {
    case ResidualClass::kNoError:
      return "no_error";
    case ResidualClass::kLogicalX:
      return "logical_X";
    case ResidualClass::kLogicalZ:
      return "logical_Z";
    case ResidualClass::kLogicalY:
      return "logical_Y";
    case ResidualClass::kSyndromeMismatch:
      return "syndrome_mismatch";
  }
  return "unknown";
}

ResidualClass residual_class(const PauliOperator& e, const PauliOperator& e_hat,
                             const StabilizerCode& code) {
  const PauliOperator residual = compose(e, e_hat);
  if (!syndrome(code, residual).bits.none()) {
    return ResidualClass::kSyndromeMismatch;
  }
  const bool flips_x = !commutes(residual, code.logical_x());
  const bool flips_z = !commutes(residual, code.logical_z());
  if (flips_x && flips_z) {
    return ResidualClass::kLogicalY;
  }
  if (flips_x) {
    return ResidualClass::kLogicalZ;
  }
  if (flips_z) {
    return ResidualClass::kLogicalX;
  }
  return ResidualClass::kNoError;
}

ResidualClass residual_class(const PauliOperator& e, const DecodeResult& r,
                             const StabilizerCode& code) {
  return residual_class(e, r.e_hat, code);
}

std::string format_trace(const StabilizerCode& code, const DecodeResult& r) {
  std::ostringstream out;
  auto describe_pass = [&](const char* name, const PassTrace& pass) {
    out << name << " pass: switched on";
    if (pass.distances.rows.empty()) {
      out << " none";
    }
    for (std::size_t row : pass.distances.rows) {
      out << ' ' << row_name(code, row);
    }
    out << '\n';
    const std::size_t k = pass.distances.rows.size();
    for (std::size_t i = 0; i < k; ++i) {
      const int partner = pass.pairing.partner[i];
      const std::vector<std::size_t>* path = nullptr;
      out << "  " << row_name(code, pass.distances.rows[i]) << " -- ";
      if (partner == kBoundary) {
        out << "boundary";
        path = &pass.distances.boundary_paths[i];
        out << " cost " << pass.distances.boundary_distance(i);
      } else if (static_cast<std::size_t>(partner) > i) {
        out << row_name(code, pass.distances.rows[static_cast<std::size_t>(partner)]);
        path = &pass.distances.pair_paths[i * k + static_cast<std::size_t>(partner)];
        out << " cost " << pass.distances.distance(i, static_cast<std::size_t>(partner));
      } else {
        out << row_name(code, pass.distances.rows[static_cast<std::size_t>(partner)])
            << " (see above)\n";
        continue;
      }
      out << " via";
      for (std::size_t q : *path) {
        out << " D" << q + 1;
      }
      out << '\n';
    }
    out << "  correction: " << pass.correction.str() << '\n';
  };

  out << "weights:";
  bool any = false;
  for (std::size_t j = 0; j < r.weights.q.size(); ++j) {
    if (r.weights.q[j] != 1.0) {
      out << " q(" << j + 1 << ") = " << format_weight(r.weights.q[j]) << ';';
      any = true;
    }
  }
  out << (any ? " others 1\n" : " all 1\n");
  if (r.weight_update_discarded) {
    out << "weight update discarded: weighted correction was 2+ qubits heavier\n";
  }
  describe_pass("X", r.x_pass);
  out << "flip:";
  if (r.flipped_rows.empty()) {
    out << " none";
  }
  for (std::size_t row : r.flipped_rows) {
    out << ' ' << row_name(code, row) << " -> " << (r.z_pass_syndrome[row] ? 1 : 0);
  }
  out << '\n';
  describe_pass("Z", r.z_pass);
  out << "e_hat: " << r.e_hat.str() << '\n';
  return out.str();
}

}  // namespace zzzy
