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

#ifndef ZZZY_CODE_H
#define ZZZY_CODE_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "zzzy/pauli.h"

namespace zzzy {

enum class CodeFamily { kSurface, kZzzy, kZzzyDual, kXzzx };

std::string_view family_name(CodeFamily family);
/// Accepts "surface", "zzzy", "zzzy-dual" and "xzzx".
CodeFamily parse_family(std::string_view name);

/// Position of a data qubit on the non-rotated planar lattice. Full rows hold
/// d qubits, half rows hold d - 1 and sit between consecutive full rows.
struct QubitSite {
  bool full_row = true;
  int row = 0;  // full-row index R in [0, d) or half-row index in [0, d - 1)
  int col = 0;
};

/// Position of a generator's ancilla. Vertex ancillas sit on full rows between
/// columns col and col + 1; plaquette ancillas sit on half rows above full-row
/// column col.
struct AncillaSite {
  bool vertex = true;
  int row = 0;
  int col = 0;
};

/// A planar [[n, 1, d]] stabilizer code together with the lattice metadata the
/// matching decoders need.
///
/// Generator rows are ordered in three blocks: the n_zy mixed rows (exactly one
/// Y factor each), the remaining rows of the second decoding pass, and the n_x
/// rows of the first decoding pass last. For surface and ZZZY codes the first
/// pass is the X generators. Within a block rows follow lattice order, which is
/// also the order of the 1-based labels G1, G2, ... used in text output.
class StabilizerCode {
 public:
  struct Parts {
    CodeFamily family = CodeFamily::kSurface;
    int distance = 3;
    std::vector<PauliOperator> generators;
    std::vector<std::size_t> labels;  // 1-based lattice label per row
    std::vector<AncillaSite> ancillas;
    std::size_t n_zy = 0;
    std::size_t n_x = 0;
    PauliOperator logical_z;
    PauliOperator logical_x;
    std::vector<QubitSite> sites;
    std::vector<Pauli> x_pass_error;  // single-qubit error detected by the last n_x rows
    std::vector<Pauli> z_pass_error;  // single-qubit error detected by the other rows
  };

  explicit StabilizerCode(Parts parts);

  CodeFamily family() const { return parts_.family; }
  int distance() const { return parts_.distance; }
  int t() const { return (parts_.distance - 1) / 2; }
  std::size_t num_qubits() const { return parts_.sites.size(); }
  std::size_t num_generators() const { return parts_.generators.size(); }
  std::size_t n_zy() const { return parts_.n_zy; }
  std::size_t n_x() const { return parts_.n_x; }

  const std::vector<PauliOperator>& generators() const { return parts_.generators; }
  const PauliOperator& generator(std::size_t row) const { return parts_.generators[row]; }
  std::size_t label(std::size_t row) const { return parts_.labels[row]; }
  /// Row holding lattice label `label`. Throws std::out_of_range.
  std::size_t row_of_label(std::size_t label) const;
  const AncillaSite& ancilla(std::size_t row) const { return parts_.ancillas[row]; }

  /// First row of the X-pass block.
  std::size_t x_pass_begin() const { return num_generators() - parts_.n_x; }
  bool in_x_pass(std::size_t row) const { return row >= x_pass_begin(); }

  const PauliOperator& logical_z() const { return parts_.logical_z; }
  const PauliOperator& logical_x() const { return parts_.logical_x; }

  const std::vector<QubitSite>& sites() const { return parts_.sites; }
  Pauli x_pass_error(std::size_t qubit) const { return parts_.x_pass_error[qubit]; }
  Pauli z_pass_error(std::size_t qubit) const { return parts_.z_pass_error[qubit]; }

  /// Qubit under Y measurement of mixed row `row` (row < n_zy).
  std::size_t h(std::size_t row) const { return h_map_[row]; }
  /// X-pass rows assigned to the full rows directly above and below `qubit`.
  const std::vector<std::size_t>& g(std::size_t qubit) const { return g_map_[qubit]; }

  /// Copy with one generator row replaced; metadata is kept as is.
  StabilizerCode with_generator(std::size_t row, PauliOperator op) const;

  /// "[[n,k,d]] family=..." header followed by "G<label>: <factors>" lines in
  /// label order.
  std::string dump() const;

  const Parts& parts() const { return parts_; }

 private:
  Parts parts_;
  std::vector<std::size_t> h_map_;
  std::vector<std::vector<std::size_t>> g_map_;
  std::vector<std::size_t> row_of_label_;
};

/// Qubit index of full-row site (row, col) for distance d.
std::size_t full_row_qubit(int d, int row, int col);
/// Qubit index of half-row site (row, col) for distance d.
std::size_t half_row_qubit(int d, int row, int col);
/// True for the full-row qubits whose Z measurements become Y in ZZZY codes.
bool is_y_designated(int d, int full_row, int col);

/// Throw std::invalid_argument unless d is odd and >= 3.
StabilizerCode build_surface(int d);
StabilizerCode build_zzzy(int d);
StabilizerCode build_zzzy_dual(int d);
StabilizerCode build_xzzx(int d);
StabilizerCode build_code(CodeFamily family, int d);

Syndrome syndrome(const StabilizerCode& code, const PauliOperator& e);

/// Rank over GF(2) of the rows as 2n-bit vectors.
std::size_t symplectic_rank(const std::vector<PauliOperator>& rows);

/// Checks the structural invariants of a code. Never throws; an empty result
/// means the code is valid.
std::vector<std::string> validate(const StabilizerCode& code);

}  // namespace zzzy

#endif  // ZZZY_CODE_H
