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

#ifndef ZZZY_DECODER_H
#define ZZZY_DECODER_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zzzy/code.h"
#include "zzzy/matching.h"
#include "zzzy/pauli.h"

namespace zzzy {

/// Per-qubit edge weights of the matching graph.
struct WeightVector {
  std::vector<double> q;

  static WeightVector ones(std::size_t num_qubits) {
    return WeightVector{std::vector<double>(num_qubits, 1.0)};
  }
  double operator[](std::size_t j) const { return q[j]; }
};

inline constexpr double kActivatedWeight = 0.9;
inline constexpr double kDeactivatedWeight = 1.1;
inline constexpr double kIsolatedWeight = -0.1;

/// Treatment of a Y-qubit measured by two mixed rows (interior designated
/// qubits) when exactly one of them is switched on. A Z error on that qubit
/// would light both, so the split state carries no evidence for it.
enum class SharedQubitRule {
  /// Weight 0.9 and eligible for isolation, as for a single switched-on row.
  kActivationWins,
  /// Weight 1.0 and never isolated.
  kNeutral,
};

/// Pre-processing of the ZZZY decoder.
///
/// Phase 1 sets q(h(i)) to 0.9 for every switched-on mixed row i and to 1.1
/// for every switched-off one; `rule` settles a qubit Y-measured by one row
/// that is on and one that is off. Phase 2 sets q(h(i)) to -0.1 for every
/// switched-on mixed row whose g(h(i)) rows are all off.
WeightVector update_weights(const Syndrome& s, WeightVector q, const StabilizerCode& code,
                            SharedQubitRule rule = SharedQubitRule::kNeutral);

/// As update_weights, also returning the number of elementary steps taken:
/// one per mixed row plus one per g-list entry checked for switched-on rows.
std::pair<WeightVector, std::size_t> update_weights_counted(
    const Syndrome& s, WeightVector q, const StabilizerCode& code,
    SharedQubitRule rule = SharedQubitRule::kNeutral);

enum class DecodingPass {
  kX,  // the last n_x rows; corrects Z errors on surface and ZZZY codes
  kZ,  // all other rows
};

/// Matching graph of one decoding pass. Nodes are the rows of the pass plus a
/// single boundary node; each data qubit is one edge, joining the rows that
/// detect the pass's single-qubit error on it.
class PassGraph {
 public:
  struct Edge {
    int u = 0;
    int v = 0;  // boundary_node() for boundary edges
    std::size_t qubit = 0;
  };
  struct Incidence {
    int neighbor = 0;
    std::size_t qubit = 0;
  };

  PassGraph(const StabilizerCode& code, DecodingPass pass);

  DecodingPass pass() const { return pass_; }
  int num_nodes() const { return static_cast<int>(rows_.size()); }
  int boundary_node() const { return num_nodes(); }
  std::size_t row(int node) const { return rows_[static_cast<std::size_t>(node)]; }
  /// Node of a generator row, or -1 if the row belongs to the other pass.
  int node_of_row(std::size_t row) const { return node_of_row_[row]; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Incident edges of `node` (boundary included), sorted by qubit index.
  const std::vector<Incidence>& adjacent(int node) const {
    return adjacency_[static_cast<std::size_t>(node)];
  }
  /// Single-qubit error the edge of `qubit` stands for.
  Pauli error(std::size_t qubit) const { return errors_[qubit]; }
  std::size_t num_qubits() const { return errors_.size(); }

 private:
  DecodingPass pass_;
  std::vector<std::size_t> rows_;
  std::vector<int> node_of_row_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<Pauli> errors_;
};

struct Path {
  Cost cost = 0;
  std::vector<std::size_t> qubits;  // from the target back to the source
};

/// Minimum-cost simple path from `source` to `target` that does not pass
/// through the boundary node (which may be the target). `cost[j]` is the
/// fixed-point weight of qubit j. Among optimal paths the one whose qubit
/// sequence, read from the target, is lexicographically smallest is returned.
/// Non-positive weights are handled by exact branch and bound; otherwise
/// Dijkstra is used.
Path shortest_path(const PassGraph& graph, const std::vector<Cost>& cost, int source, int target);

/// Shortest-path costs between the switched-on rows of one pass and to the
/// boundary, with the paths realizing them.
struct DistanceTable {
  std::vector<std::size_t> rows;  // highlighted rows, ascending
  MatchingProblem problem;
  std::vector<std::vector<std::size_t>> pair_paths;  // k * k, symmetric
  std::vector<std::vector<std::size_t>> boundary_paths;
  bool exact_search = false;  // some weight was non-positive

  double distance(std::size_t i, std::size_t j) const { return from_cost(problem.pair_cost(i, j)); }
  double boundary_distance(std::size_t i) const { return from_cost(problem.boundary_cost(i)); }
};

DistanceTable compute_distance(const PassGraph& graph, const Syndrome& s,
                               const std::vector<Cost>& cost);
DistanceTable compute_distance(const Syndrome& s, const WeightVector& q, const StabilizerCode& code,
                               DecodingPass pass);

struct PassTrace {
  DistanceTable distances;
  Pairing pairing;
  PauliOperator correction;
};

struct DecodeResult {
  PauliOperator e_hat;
  WeightVector weights;                // X-pass weights after pre-processing
  Syndrome z_pass_syndrome;            // syndrome after the inter-pass flip
  std::vector<std::size_t> flipped_rows;
  bool weight_update_discarded = false;  // see DecoderOptions::guard_weight_update
  PassTrace x_pass;
  PassTrace z_pass;
};

struct DecoderOptions {
  /// Run update_weights before the X pass (only has an effect on codes with
  /// mixed rows).
  bool update_weights = true;
  SharedQubitRule shared_qubit = SharedQubitRule::kNeutral;
  /// The weight update only ever needs to trade a correction for one that is
  /// at most a single qubit heavier. If the weighted decode comes out heavier
  /// than the uniform-weight decode by two or more qubits, the pre-processing
  /// was misled (for example by a Y error lighting a mixed row) and the
  /// uniform-weight result is returned instead.
  bool guard_weight_update = true;
  /// When set, qubit weights get a seeded sub-resolution jitter so that ties
  /// are broken at random instead of lexicographically.
  std::optional<uint64_t> tie_break_seed;
};

/// Two-pass matching decoder: X pass with pre-processed weights, flip of the
/// remaining rows that anticommute with the X-pass correction, Z pass with
/// uniform weights. Immutable after construction and safe to share between
/// threads.
class Decoder {
 public:
  explicit Decoder(StabilizerCode code, DecoderOptions options = {});

  const StabilizerCode& code() const { return code_; }
  const DecoderOptions& options() const { return options_; }
  const PassGraph& graph(DecodingPass pass) const {
    return pass == DecodingPass::kX ? x_graph_ : z_graph_;
  }

  DecodeResult decode(const Syndrome& s) const;
  DecodeResult decode(const Syndrome& s, std::optional<uint64_t> tie_break_seed) const;
  /// Only the correction; skips trace bookkeeping.
  PauliOperator correct(const Syndrome& s) const;
  PauliOperator correct(const Syndrome& s, std::optional<uint64_t> tie_break_seed) const;

 private:
  std::vector<Cost> pass_costs(const std::vector<double>& weights,
                               std::optional<uint64_t> seed, uint64_t salt) const;
  DecodeResult decode_with(const Syndrome& s, WeightVector weights,
                           std::optional<uint64_t> tie_break_seed) const;
  PassTrace run_pass(const PassGraph& graph, const Syndrome& s,
                     const std::vector<Cost>& cost) const;

  StabilizerCode code_;
  DecoderOptions options_;
  PassGraph x_graph_;
  PassGraph z_graph_;
};

DecodeResult zzzy_decode(const Syndrome& s, const StabilizerCode& code);
DecodeResult surface_decode(const Syndrome& s, const StabilizerCode& code);
DecodeResult xzzx_decode(const Syndrome& s, const StabilizerCode& code);

enum class ResidualClass { kNoError, kLogicalX, kLogicalZ, kLogicalY, kSyndromeMismatch };

std::string_view residual_class_name(ResidualClass c);

ResidualClass residual_class(const PauliOperator& e, const PauliOperator& e_hat,
                             const StabilizerCode& code);
ResidualClass residual_class(const PauliOperator& e, const DecodeResult& r,
                             const StabilizerCode& code);

/// Human-readable account of a decode: weights, both matchings, the flip.
std::string format_trace(const StabilizerCode& code, const DecodeResult& r);

}  // namespace zzzy

#endif  // ZZZY_DECODER_H
