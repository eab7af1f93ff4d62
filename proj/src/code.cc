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

#include "zzzy/code.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zzzy {

namespace {

void check_distance(int d) {
  if (d < 3 || d % 2 == 0) {
    throw std::invalid_argument("distance must be odd and >= 3, got " + std::to_string(d));
  }
}

Pauli swap_xz(Pauli p) {
  switch (p) {
    case Pauli::X:
      return Pauli::Z;
    case Pauli::Z:
      return Pauli::X;
    default:
      return p;
  }
}

PauliOperator swap_xz(const PauliOperator& op, const std::vector<bool>& mask) {
  PauliOperator out(op.num_qubits());
  for (std::size_t j = 0; j < op.num_qubits(); ++j) {
    out.set(j, mask[j] ? swap_xz(op.at(j)) : op.at(j));
  }
  return out;
}

struct LatticeGenerator {
  PauliOperator op;
  AncillaSite site;
  std::size_t label;
};

// Generators of the planar surface code in lattice (row-major) order.
std::vector<LatticeGenerator> surface_lattice(int d) {
  const std::size_t n = static_cast<std::size_t>(d * d + (d - 1) * (d - 1));
  std::vector<LatticeGenerator> out;
  std::size_t label = 1;
  for (int line = 0; line < 2 * d - 1; ++line) {
    if (line % 2 == 0) {
      const int row = line / 2;
      for (int c = 0; c + 1 < d; ++c) {
        PauliOperator op(n);
        op.set(full_row_qubit(d, row, c), Pauli::X);
        op.set(full_row_qubit(d, row, c + 1), Pauli::X);
        if (row > 0) {
          op.set(half_row_qubit(d, row - 1, c), Pauli::X);
        }
        if (row < d - 1) {
          op.set(half_row_qubit(d, row, c), Pauli::X);
        }
        out.push_back({std::move(op), AncillaSite{true, row, c}, label++});
      }
    } else {
      const int row = line / 2;
      for (int c = 0; c < d; ++c) {
        PauliOperator op(n);
        op.set(full_row_qubit(d, row, c), Pauli::Z);
        op.set(full_row_qubit(d, row + 1, c), Pauli::Z);
        if (c > 0) {
          op.set(half_row_qubit(d, row, c - 1), Pauli::Z);
        }
        if (c < d - 1) {
          op.set(half_row_qubit(d, row, c), Pauli::Z);
        }
        out.push_back({std::move(op), AncillaSite{false, row, c}, label++});
      }
    }
  }
  return out;
}

std::vector<QubitSite> lattice_sites(int d) {
  std::vector<QubitSite> sites;
  for (int line = 0; line < 2 * d - 1; ++line) {
    const bool full = line % 2 == 0;
    const int width = full ? d : d - 1;
    for (int c = 0; c < width; ++c) {
      sites.push_back(QubitSite{full, line / 2, c});
    }
  }
  return sites;
}

// Orders generators as [mixed | other second-pass | first pass] and fills the
// row-indexed metadata.
void assemble(StabilizerCode::Parts& parts, std::vector<LatticeGenerator> gens,
              const std::vector<bool>& mixed) {
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (!gens[k].site.vertex && mixed[k]) {
      order.push_back(k);
    }
  }
  parts.n_zy = order.size();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (!gens[k].site.vertex && !mixed[k]) {
      order.push_back(k);
    }
  }
  parts.n_x = 0;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].site.vertex) {
      order.push_back(k);
      ++parts.n_x;
    }
  }
  for (std::size_t k : order) {
    parts.generators.push_back(std::move(gens[k].op));
    parts.ancillas.push_back(gens[k].site);
    parts.labels.push_back(gens[k].label);
  }
}

StabilizerCode::Parts surface_parts(int d) {
  check_distance(d);
  StabilizerCode::Parts parts;
  parts.family = CodeFamily::kSurface;
  parts.distance = d;
  parts.sites = lattice_sites(d);
  const std::size_t n = parts.sites.size();
  auto gens = surface_lattice(d);
  assemble(parts, std::move(gens), std::vector<bool>(n - 1, false));
  parts.logical_z = PauliOperator(n);
  parts.logical_x = PauliOperator(n);
  for (int c = 0; c < d; ++c) {
    parts.logical_z.set(full_row_qubit(d, 0, c), Pauli::Z);
  }
  for (int r = 0; r < d; ++r) {
    parts.logical_x.set(full_row_qubit(d, r, 0), Pauli::X);
  }
  parts.x_pass_error.assign(n, Pauli::Z);
  parts.z_pass_error.assign(n, Pauli::X);
  return parts;
}

StabilizerCode::Parts zzzy_parts(int d) {
  check_distance(d);
  StabilizerCode::Parts parts;
  parts.family = CodeFamily::kZzzy;
  parts.distance = d;
  parts.sites = lattice_sites(d);
  const std::size_t n = parts.sites.size();
  auto gens = surface_lattice(d);
  std::vector<bool> mixed(gens.size(), false);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].site.vertex) {
      continue;
    }
    const int row = gens[k].site.row;
    const int col = gens[k].site.col;
    int substitutions = 0;
    for (int full : {row, row + 1}) {
      if (is_y_designated(d, full, col)) {
        gens[k].op.set(full_row_qubit(d, full, col), Pauli::Y);
        ++substitutions;
      }
    }
    if (substitutions > 1) {
      throw std::logic_error("plaquette acquired two Y measurements");
    }
    mixed[k] = substitutions == 1;
  }
  assemble(parts, std::move(gens), mixed);
  parts.logical_z = PauliOperator(n);
  parts.logical_x = PauliOperator(n);
  for (int c = 0; c < d; ++c) {
    parts.logical_z.set(full_row_qubit(d, 0, c), is_y_designated(d, 0, c) ? Pauli::Y : Pauli::Z);
  }
  for (int r = 0; r < d; ++r) {
    parts.logical_x.set(full_row_qubit(d, r, 0), Pauli::X);
  }
  parts.x_pass_error.assign(n, Pauli::Z);
  parts.z_pass_error.assign(n, Pauli::X);
  return parts;
}

}  // namespace

std::string_view family_name(CodeFamily family) {
  switch (family) {
    case CodeFamily::kSurface:
      return "surface";
    case CodeFamily::kZzzy:
      return "zzzy";
    case CodeFamily::kZzzyDual:
      return "zzzy-dual";
    case CodeFamily::kXzzx:
      return "xzzx";
  }
  return "unknown";
}

CodeFamily parse_family(std::string_view name) {
  for (auto f : {CodeFamily::kSurface, CodeFamily::kZzzy, CodeFamily::kZzzyDual, CodeFamily::kXzzx}) {
    if (family_name(f) == name) {
      return f;
    }
  }
  throw std::invalid_argument("unknown code family '" + std::string(name) + "'");
}

std::size_t full_row_qubit(int d, int row, int col) {
  return static_cast<std::size_t>(row * (2 * d - 1) + col);
}

std::size_t half_row_qubit(int d, int row, int col) {
  return static_cast<std::size_t>(row * (2 * d - 1) + d + col);
}

bool is_y_designated(int d, int full_row, int col) {
  if (full_row % 2 == 0) {
    return col == 0 || col == d - 1;
  }
  return col == 1 || col == d - 2;
}

StabilizerCode::StabilizerCode(Parts parts) : parts_(std::move(parts)) {
  const std::size_t n = parts_.sites.size();
  const std::size_t r = parts_.generators.size();
  if (parts_.labels.size() != r || parts_.ancillas.size() != r ||
      parts_.x_pass_error.size() != n || parts_.z_pass_error.size() != n ||
      parts_.n_zy + parts_.n_x > r) {
    throw std::invalid_argument("inconsistent StabilizerCode parts");
  }
  for (const auto& g : parts_.generators) {
    if (g.num_qubits() != n) {
      throw std::invalid_argument("generator length differs from qubit count");
    }
  }

  row_of_label_.assign(r + 1, r);
  for (std::size_t row = 0; row < r; ++row) {
    if (parts_.labels[row] == 0 || parts_.labels[row] > r) {
      throw std::invalid_argument("generator labels must be 1..r");
    }
    row_of_label_[parts_.labels[row]] = row;
  }

  h_map_.assign(parts_.n_zy, n);
  for (std::size_t row = 0; row < parts_.n_zy; ++row) {
    for (std::size_t j = 0; j < n; ++j) {
      if (parts_.generators[row].at(j) == Pauli::Y) {
        h_map_[row] = j;
        break;
      }
    }
  }

  g_map_.assign(n, {});
  for (std::size_t j = 0; j < n; ++j) {
    const QubitSite& s = parts_.sites[j];
    if (!s.full_row) {
      continue;
    }
    for (std::size_t row = x_pass_begin(); row < r; ++row) {
      const AncillaSite& a = parts_.ancillas[row];
      if (a.vertex && (a.row == s.row - 1 || a.row == s.row + 1)) {
        g_map_[j].push_back(row);
      }
    }
  }
}

std::size_t StabilizerCode::row_of_label(std::size_t label) const {
  if (label == 0 || label >= row_of_label_.size()) {
    throw std::out_of_range("no generator with label " + std::to_string(label));
  }
  return row_of_label_[label];
}

StabilizerCode StabilizerCode::with_generator(std::size_t row, PauliOperator op) const {
  Parts copy = parts_;
  copy.generators.at(row) = std::move(op);
  return StabilizerCode(std::move(copy));
}

std::string StabilizerCode::dump() const {
  std::ostringstream out;
  out << "[[" << num_qubits() << ",1," << distance() << "]] family=" << family_name(family())
      << '\n';
  for (std::size_t label = 1; label <= num_generators(); ++label) {
    out << 'G' << label << ": " << generator(row_of_label(label)).str() << '\n';
  }
  return out.str();
}

StabilizerCode build_surface(int d) { return StabilizerCode(surface_parts(d)); }

StabilizerCode build_zzzy(int d) { return StabilizerCode(zzzy_parts(d)); }

StabilizerCode build_zzzy_dual(int d) {
  StabilizerCode::Parts parts = zzzy_parts(d);
  const std::vector<bool> all(parts.sites.size(), true);
  parts.family = CodeFamily::kZzzyDual;
  for (auto& g : parts.generators) {
    g = swap_xz(g, all);
  }
  PauliOperator lz = swap_xz(parts.logical_x, all);
  PauliOperator lx = swap_xz(parts.logical_z, all);
  parts.logical_z = std::move(lz);
  parts.logical_x = std::move(lx);
  parts.x_pass_error.assign(parts.sites.size(), Pauli::X);
  parts.z_pass_error.assign(parts.sites.size(), Pauli::Z);
  return StabilizerCode(std::move(parts));
}

StabilizerCode build_xzzx(int d) {
  StabilizerCode::Parts parts = surface_parts(d);
  parts.family = CodeFamily::kXzzx;
  std::vector<bool> half(parts.sites.size());
  for (std::size_t j = 0; j < parts.sites.size(); ++j) {
    half[j] = !parts.sites[j].full_row;
  }
  for (auto& g : parts.generators) {
    g = swap_xz(g, half);
  }
  parts.logical_z = swap_xz(parts.logical_z, half);
  parts.logical_x = swap_xz(parts.logical_x, half);
  for (std::size_t j = 0; j < parts.sites.size(); ++j) {
    parts.x_pass_error[j] = half[j] ? Pauli::X : Pauli::Z;
    parts.z_pass_error[j] = half[j] ? Pauli::Z : Pauli::X;
  }
  return StabilizerCode(std::move(parts));
}

StabilizerCode build_code(CodeFamily family, int d) {
  switch (family) {
    case CodeFamily::kSurface:
      return build_surface(d);
    case CodeFamily::kZzzy:
      return build_zzzy(d);
    case CodeFamily::kZzzyDual:
      return build_zzzy_dual(d);
    case CodeFamily::kXzzx:
      return build_xzzx(d);
  }
  throw std::invalid_argument("unknown code family");
}

Syndrome syndrome(const StabilizerCode& code, const PauliOperator& e) {
  if (e.num_qubits() != code.num_qubits()) {
    throw std::invalid_argument("syndrome: error length " + std::to_string(e.num_qubits()) +
                                " does not match code length " +
                                std::to_string(code.num_qubits()));
  }
  Syndrome s{BitVector(code.num_generators())};
  for (std::size_t row = 0; row < code.num_generators(); ++row) {
    if (!commutes(code.generator(row), e)) {
      s.bits.set(row, true);
    }
  }
  return s;
}

std::size_t symplectic_rank(const std::vector<PauliOperator>& rows) {
  if (rows.empty()) {
    return 0;
  }
  const std::size_t n = rows.front().num_qubits();
  std::vector<BitVector> m;
  m.reserve(rows.size());
  for (const auto& op : rows) {
    BitVector v(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      v.set(j, op.z_part().get(j));
      v.set(j + n, op.x_part().get(j));
    }
    m.push_back(std::move(v));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 2 * n && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && !m[pivot].get(col)) {
      ++pivot;
    }
    if (pivot == m.size()) {
      continue;
    }
    std::swap(m[rank], m[pivot]);
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k != rank && m[k].get(col)) {
        m[k] ^= m[rank];
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::string> validate(const StabilizerCode& code) {
  std::vector<std::string> violations;
  const std::size_t n = code.num_qubits();
  const std::size_t r = code.num_generators();
  const int d = code.distance();
  auto label = [&](std::size_t row) { return "G" + std::to_string(code.label(row)); };

  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a + 1; b < r; ++b) {
      if (!commutes(code.generator(a), code.generator(b))) {
        violations.push_back(label(a) + " and " + label(b) + " anticommute");
      }
    }
  }
  for (std::size_t row = 0; row < r; ++row) {
    if (!commutes(code.generator(row), code.logical_z())) {
      violations.push_back("logical_z anticommutes with " + label(row));
    }
    if (!commutes(code.generator(row), code.logical_x())) {
      violations.push_back("logical_x anticommutes with " + label(row));
    }
  }
  if (commutes(code.logical_z(), code.logical_x())) {
    violations.push_back("logical_z and logical_x commute");
  }

  std::vector<PauliOperator> rows = code.generators();
  const std::size_t rank = symplectic_rank(rows);
  if (rank != n - 1) {
    violations.push_back("generator rank " + std::to_string(rank) + " != n - 1 = " +
                         std::to_string(n - 1));
  }
  rows.push_back(code.logical_z());
  rows.push_back(code.logical_x());
  if (symplectic_rank(rows) != rank + 2) {
    violations.push_back("logical representatives lie in the span of the generators");
  }

  std::size_t y_factors = 0;
  for (std::size_t row = 0; row < r; ++row) {
    std::size_t ys = 0;
    for (std::size_t j = 0; j < n; ++j) {
      ys += code.generator(row).at(j) == Pauli::Y ? 1 : 0;
    }
    y_factors += ys;
    if (row < code.n_zy() && ys != 1) {
      violations.push_back("mixed row " + label(row) + " has " + std::to_string(ys) + " Y factors");
    }
    if (row >= code.n_zy() && ys != 0) {
      violations.push_back("row " + label(row) + " outside the mixed block has Y factors");
    }
  }
  if (code.family() == CodeFamily::kZzzy || code.family() == CodeFamily::kZzzyDual) {
    const std::size_t expected = d == 3 ? 6u : static_cast<std::size_t>(4 * (d - 1));
    if (y_factors != expected) {
      violations.push_back("expected " + std::to_string(expected) + " Y substitutions, found " +
                           std::to_string(y_factors));
    }
    for (std::size_t row = 0; row < code.n_zy(); ++row) {
      const std::size_t q = code.h(row);
      if (q >= n) {
        violations.push_back("h(" + label(row) + ") undefined");
        continue;
      }
      const int qrow = code.sites()[q].row;
      const std::size_t expected_g =
          static_cast<std::size_t>((qrow == 0 || qrow == d - 1 ? 1 : 2) * (d - 1));
      if (code.g(q).size() != expected_g) {
        violations.push_back("g(" + std::to_string(q + 1) + ") has " +
                             std::to_string(code.g(q).size()) + " entries, expected " +
                             std::to_string(expected_g));
      }
      for (std::size_t x : code.g(q)) {
        if (std::abs(code.ancilla(x).row - qrow) != 1) {
          violations.push_back("g(" + std::to_string(q + 1) + ") contains non-adjacent " +
                               label(x));
        }
      }
    }
  }

  // Each single-qubit pass error must form a graph edge: one or two detecting
  // rows in its own pass and none in the other pure block.
  for (std::size_t j = 0; j < n; ++j) {
    const auto ex = PauliOperator::single(n, j, code.x_pass_error(j));
    const auto ez = PauliOperator::single(n, j, code.z_pass_error(j));
    std::size_t hits_x = 0;
    std::size_t hits_z = 0;
    for (std::size_t row = 0; row < r; ++row) {
      if (code.in_x_pass(row)) {
        hits_x += commutes(code.generator(row), ex) ? 0 : 1;
        if (!commutes(code.generator(row), ez)) {
          violations.push_back("z-pass error on qubit " + std::to_string(j + 1) +
                               " is detected by x-pass row " + label(row));
        }
      } else {
        hits_z += commutes(code.generator(row), ez) ? 0 : 1;
      }
    }
    if (hits_x < 1 || hits_x > 2 || hits_z < 1 || hits_z > 2) {
      violations.push_back("qubit " + std::to_string(j + 1) + " is not a matching-graph edge");
    }
  }

  if (d == 3 && violations.empty()) {
    // Distance check: no weight <= 2 Pauli is an undetectable logical.
    auto is_logical = [&](const PauliOperator& e) {
      if (!syndrome(code, e).bits.none()) {
        return false;
      }
      return !commutes(e, code.logical_z()) || !commutes(e, code.logical_x());
    };
    const Pauli kinds[3] = {Pauli::X, Pauli::Y, Pauli::Z};
    for (std::size_t a = 0; a < n; ++a) {
      for (Pauli pa : kinds) {
        PauliOperator e = PauliOperator::single(n, a, pa);
        if (is_logical(e)) {
          violations.push_back("weight-1 logical " + e.str());
        }
        for (std::size_t b = a + 1; b < n; ++b) {
          for (Pauli pb : kinds) {
            PauliOperator e2 = e;
            e2.set(b, pb);
            if (is_logical(e2)) {
              violations.push_back("weight-2 logical " + e2.str());
            }
          }
        }
      }
    }
  }
  return violations;
}

}  // namespace zzzy
