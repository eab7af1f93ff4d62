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

#include <gtest/gtest.h>

#include <set>

#include "zzzy/code.h"

namespace zzzy {
namespace {

std::set<std::string> rendered(const StabilizerCode& code) {
  std::set<std::string> out;
  for (const auto& g : code.generators()) {
    out.insert(g.str());
  }
  return out;
}

std::size_t count_y_substitutions(const StabilizerCode& code) {
  std::size_t n = 0;
  for (const auto& g : code.generators()) {
    for (std::size_t j = 0; j < g.num_qubits(); ++j) {
      n += g.at(j) == Pauli::Y;
    }
  }
  return n;
}

PauliOperator swap_xz(const PauliOperator& op) { return PauliOperator(op.x_part(), op.z_part()); }

TEST(BuildSurface, Sizes) {
  const auto c3 = build_surface(3);
  EXPECT_EQ(c3.num_qubits(), 13u);
  EXPECT_EQ(c3.num_generators(), 12u);
  EXPECT_EQ(c3.n_x(), 6u);
  EXPECT_EQ(c3.n_zy(), 0u);
  EXPECT_EQ(build_surface(5).num_qubits(), 41u);
  EXPECT_EQ(build_surface(7).num_qubits(), 85u);
}

TEST(BuildSurface, RejectsBadDistance) {
  for (int d : {-1, 0, 1, 2, 4, 6}) {
    EXPECT_THROW(build_surface(d), std::invalid_argument) << d;
    EXPECT_THROW(build_zzzy(d), std::invalid_argument) << d;
    EXPECT_THROW(build_zzzy_dual(d), std::invalid_argument) << d;
    EXPECT_THROW(build_xzzx(d), std::invalid_argument) << d;
  }
}

TEST(BuildZzzy, ThirteenQubitGeneratorList) {
  const auto code = build_zzzy(3);
  const std::set<std::string> expected = {
      "X1 X2 X4",       "X2 X3 X5",      "Y1 Z4 Z6",      "Z2 Z4 Z5 Y7",
      "Y3 Z5 Z8",       "X4 X6 X7 X9",   "X5 X7 X8 X10",  "Z6 Z9 Y11",
      "Y7 Z9 Z10 Z12",  "Z8 Z10 Y13",    "X9 X11 X12",    "X10 X12 X13"};
  EXPECT_EQ(rendered(code), expected);
  // Labels follow the lattice numbering.
  EXPECT_EQ(code.generator(code.row_of_label(3)).str(), "Y1 Z4 Z6");
  EXPECT_EQ(code.generator(code.row_of_label(4)).str(), "Z2 Z4 Z5 Y7");
  EXPECT_EQ(code.generator(code.row_of_label(5)).str(), "Y3 Z5 Z8");
  EXPECT_EQ(code.generator(code.row_of_label(8)).str(), "Z6 Z9 Y11");
  EXPECT_EQ(code.generator(code.row_of_label(9)).str(), "Y7 Z9 Z10 Z12");
  EXPECT_EQ(code.generator(code.row_of_label(10)).str(), "Z8 Z10 Y13");
}

TEST(BuildZzzy, YSubstitutionCounts) {
  const auto c3 = build_zzzy(3);
  EXPECT_EQ(count_y_substitutions(c3), 6u);
  EXPECT_EQ(c3.n_zy(), 6u);
  std::set<std::size_t> y_qubits;
  for (std::size_t row = 0; row < c3.n_zy(); ++row) {
    y_qubits.insert(c3.h(row) + 1);
  }
  EXPECT_EQ(y_qubits, (std::set<std::size_t>{1, 3, 7, 11, 13}));

  for (int d : {5, 7}) {
    const auto c = build_zzzy(d);
    EXPECT_EQ(count_y_substitutions(c), static_cast<std::size_t>(4 * (d - 1))) << d;
    EXPECT_EQ(c.n_zy(), static_cast<std::size_t>(4 * (d - 1))) << d;
  }
}

TEST(BuildZzzy, OneYPerMixedRowAndRowOrder) {
  for (int d : {3, 5, 7}) {
    const auto code = build_zzzy(d);
    for (std::size_t row = 0; row < code.num_generators(); ++row) {
      const auto& g = code.generator(row);
      std::size_t ys = 0, xs = 0, zs = 0;
      for (std::size_t j = 0; j < g.num_qubits(); ++j) {
        ys += g.at(j) == Pauli::Y;
        xs += g.at(j) == Pauli::X;
        zs += g.at(j) == Pauli::Z;
      }
      if (row < code.n_zy()) {
        EXPECT_EQ(ys, 1u);
        EXPECT_EQ(xs, 0u);
        EXPECT_EQ(g.at(code.h(row)), Pauli::Y);
      } else if (code.in_x_pass(row)) {
        EXPECT_EQ(ys + zs, 0u);
      } else {
        EXPECT_EQ(ys + xs, 0u);
      }
    }
  }
}

TEST(BuildZzzy, XGeneratorsMatchSurface) {
  for (int d : {3, 5, 7}) {
    const auto zzzy = build_zzzy(d);
    const auto surface = build_surface(d);
    ASSERT_EQ(zzzy.n_x(), surface.n_x());
    std::set<std::string> a, b;
    for (std::size_t i = 0; i < zzzy.n_x(); ++i) {
      a.insert(zzzy.generator(zzzy.x_pass_begin() + i).str());
      b.insert(surface.generator(surface.x_pass_begin() + i).str());
    }
    EXPECT_EQ(a, b);
  }
}

TEST(BuildZzzy, DesignatedColumnsDisjoint) {
  for (int d = 3; d <= 15; d += 2) {
    for (int col = 0; col < d; ++col) {
      EXPECT_FALSE(is_y_designated(d, 0, col) && is_y_designated(d, 1, col)) << d << " " << col;
    }
    EXPECT_TRUE(is_y_designated(d, 0, 0));
    EXPECT_TRUE(is_y_designated(d, 0, d - 1));
    EXPECT_TRUE(is_y_designated(d, 1, 1));
    EXPECT_TRUE(is_y_designated(d, 1, d - 2));
  }
}

TEST(BuildZzzy, GMapOfQubitThree) {
  const auto code = build_zzzy(3);
  const auto a5 = code.row_of_label(5);
  EXPECT_EQ(code.h(a5), 2u);
  std::set<std::size_t> labels;
  for (std::size_t row : code.g(code.h(a5))) {
    labels.insert(code.label(row));
  }
  EXPECT_EQ(labels, (std::set<std::size_t>{6, 7}));
}

TEST(BuildZzzy, GMapLengthsAndRoundTrip) {
  for (int d : {3, 5, 7}) {
    const auto code = build_zzzy(d);
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        const auto q = full_row_qubit(d, r, c);
        // Every X row of each neighbouring full row: d - 1 per neighbour.
        const std::size_t expected = static_cast<std::size_t>((r == 0 || r == d - 1) ? d - 1 : 2 * (d - 1));
        EXPECT_EQ(code.g(q).size(), expected) << d << " " << r << " " << c;
      }
    }
    for (std::size_t row = 0; row < code.n_zy(); ++row) {
      const auto q = code.h(row);
      const auto& site = code.sites()[q];
      ASSERT_TRUE(site.full_row);
      for (std::size_t x : code.g(q)) {
        ASSERT_TRUE(code.in_x_pass(x));
        // The X row's full-row qubits sit one full row away.
        int full_row = -1;
        const auto& gen = code.generator(x);
        for (std::size_t j = 0; j < gen.num_qubits(); ++j) {
          if (gen.at(j) != Pauli::I && code.sites()[j].full_row) {
            full_row = code.sites()[j].row;
          }
        }
        EXPECT_EQ(std::abs(full_row - site.row), 1);
      }
    }
  }
}

TEST(BuildZzzyDual, SwapsPauliRoles) {
  for (int d : {3, 5}) {
    const auto zzzy = build_zzzy(d);
    const auto dual = build_zzzy_dual(d);
    std::set<std::string> swapped;
    for (const auto& g : zzzy.generators()) {
      swapped.insert(swap_xz(g).str());
    }
    EXPECT_EQ(rendered(dual), swapped);
    EXPECT_TRUE(validate(dual).empty());
  }
}

TEST(BuildXzzx, MixedGenerators) {
  const auto code = build_xzzx(3);
  EXPECT_EQ(code.num_qubits(), 13u);
  EXPECT_EQ(code.n_zy(), 0u);
  EXPECT_TRUE(validate(code).empty());
  std::size_t bulk = 0;
  for (const auto& g : code.generators()) {
    if (g.weight() == 4) {
      ++bulk;
      std::size_t xs = 0, zs = 0;
      for (std::size_t j = 0; j < g.num_qubits(); ++j) {
        xs += g.at(j) == Pauli::X;
        zs += g.at(j) == Pauli::Z;
      }
      EXPECT_EQ(xs, 2u) << g.str();
      EXPECT_EQ(zs, 2u) << g.str();
    }
  }
  EXPECT_EQ(bulk, 4u);
}

TEST(BuildXzzx, ZErrorFlipsTheXMeasuringGenerators) {
  const auto code = build_xzzx(3);
  bool saw_bulk = false;
  for (std::size_t q = 0; q < code.num_qubits(); ++q) {
    const Syndrome s = syndrome(code, PauliOperator::single(13, q, Pauli::Z));
    std::size_t flipped = 0;
    for (std::size_t row = 0; row < code.num_generators(); ++row) {
      EXPECT_EQ(s[row], code.generator(row).at(q) == Pauli::X);
      flipped += s[row];
    }
    saw_bulk |= flipped == 2;
  }
  EXPECT_TRUE(saw_bulk);
}

TEST(Validate, BuiltCodesAreClean) {
  for (auto family : {CodeFamily::kSurface, CodeFamily::kZzzy, CodeFamily::kZzzyDual,
                      CodeFamily::kXzzx}) {
    for (int d : {3, 5, 7}) {
      const auto code = build_code(family, d);
      EXPECT_TRUE(validate(code).empty()) << family_name(family) << " d=" << d;
      EXPECT_EQ(symplectic_rank(code.generators()), code.num_qubits() - 1);
      EXPECT_FALSE(commutes(code.logical_x(), code.logical_z()));
    }
  }
}

TEST(Validate, ReportsFlippedBit) {
  const auto code = build_zzzy(3);
  PauliOperator g = code.generator(0);
  g.apply(1, Pauli::X);  // X on qubit 2 breaks commutation with Y1 Z4 Z6's neighbours
  const auto broken = code.with_generator(0, g);
  const auto report = validate(broken);
  ASSERT_FALSE(report.empty());
  bool commutation = false;
  for (const auto& v : report) {
    commutation |= v.find("commut") != std::string::npos;
  }
  EXPECT_TRUE(commutation);
}

TEST(Validate, NoLowWeightLogicalOnZzzyThree) {
  const auto code = build_zzzy(3);
  const std::size_t n = code.num_qubits();
  const Pauli kinds[] = {Pauli::X, Pauli::Y, Pauli::Z};
  for (std::size_t a = 0; a < n; ++a) {
    for (Pauli pa : kinds) {
      const auto e1 = PauliOperator::single(n, a, pa);
      EXPECT_FALSE(syndrome(code, e1).bits.none());
      for (std::size_t b = a + 1; b < n; ++b) {
        for (Pauli pb : kinds) {
          auto e2 = e1;
          e2.set(b, pb);
          EXPECT_FALSE(syndrome(code, e2).bits.none()) << e2.str();
        }
      }
    }
  }
}

TEST(Dump, HeaderAndLines) {
  const std::string dump = build_zzzy(3).dump();
  EXPECT_EQ(dump.substr(0, dump.find('\n')), "[[13,1,3]] family=zzzy");
  EXPECT_NE(dump.find("G3: Y1 Z4 Z6\n"), std::string::npos);
  EXPECT_EQ(std::count(dump.begin(), dump.end(), '\n'), 13);
}

}  // namespace
}  // namespace zzzy
