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

#include <random>

#include "zzzy/code.h"
#include "zzzy/pauli.h"

namespace zzzy {
namespace {

PauliOperator P(const char* text, std::size_t n = 13) { return PauliOperator::parse(text, n); }

PauliOperator random_pauli(std::size_t n, std::mt19937_64& rng) {
  PauliOperator op(n);
  for (std::size_t j = 0; j < n; ++j) {
    op.set(j, static_cast<Pauli>(rng() % 4));
  }
  return op;
}

TEST(Commutes, Z1AnticommutesWithG3) {
  const auto code = build_zzzy(3);
  EXPECT_EQ(code.generator(code.row_of_label(3)).str(), "Y1 Z4 Z6");
  EXPECT_FALSE(commutes(P("Z1"), P("Y1 Z4 Z6")));
}

TEST(Commutes, IdentityCommutesWithEverything) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    EXPECT_TRUE(commutes(PauliOperator(13), random_pauli(13, rng)));
  }
}

TEST(Commutes, Z6Z8AndY7AgreeOnEveryGenerator) {
  const auto code = build_zzzy(3);
  ASSERT_EQ(code.num_generators(), 12u);
  for (const auto& g : code.generators()) {
    EXPECT_EQ(commutes(P("Z6 Z8"), g), commutes(P("Y7"), g)) << g.str();
  }
}

TEST(Commutes, LengthMismatchThrows) {
  EXPECT_THROW(commutes(PauliOperator(3), PauliOperator(4)), std::invalid_argument);
  EXPECT_THROW(compose(PauliOperator(3), PauliOperator(4)), std::invalid_argument);
}

TEST(Compose, Examples) {
  EXPECT_TRUE(compose(P("Z1"), P("Z1")).is_identity());
  EXPECT_EQ(compose(P("Z7"), P("X7")), P("Y7"));
  EXPECT_EQ(compose(P("Z6 Z8"), P("Y7")).weight(), 3u);
}

TEST(PauliClass, Examples) {
  EXPECT_EQ(pauli_class(P("Z1 X2 Y3")), (PauliClass{1, 1, 1}));
  EXPECT_EQ(pauli_class(P("Z6 Z8")), (PauliClass{2, 0, 0}));
  EXPECT_EQ(pauli_class(P("Y7")), (PauliClass{0, 0, 1}));
}

TEST(Syndrome, Z1LightsA1AndA3) {
  const auto code = build_zzzy(3);
  const Syndrome s = syndrome(code, P("Z1"));
  for (std::size_t row = 0; row < code.num_generators(); ++row) {
    const std::size_t label = code.label(row);
    EXPECT_EQ(s[row], label == 1 || label == 3) << "A" << label;
  }
  EXPECT_EQ(code.generator(code.row_of_label(1)).str(), "X1 X2 X4");
}

TEST(Syndrome, IdentityIsZero) {
  for (auto family : {CodeFamily::kSurface, CodeFamily::kZzzy, CodeFamily::kZzzyDual,
                      CodeFamily::kXzzx}) {
    const auto code = build_code(family, 5);
    EXPECT_TRUE(syndrome(code, PauliOperator(code.num_qubits())).bits.none());
  }
}

TEST(Syndrome, Z6Z8MatchesY7) {
  const auto code = build_zzzy(3);
  EXPECT_EQ(syndrome(code, P("Z6 Z8")), syndrome(code, P("Y7")));
}

TEST(Syndrome, LengthMismatchThrows) {
  EXPECT_THROW(syndrome(build_zzzy(3), PauliOperator(12)), std::invalid_argument);
}

TEST(Render, SortedFactorsAndIdentity) {
  EXPECT_EQ(P("Y7 Z1 Z4").str(), "Z1 Z4 Y7");
  EXPECT_EQ(PauliOperator(13).str(), "I");
  EXPECT_THROW(P("Z14"), std::invalid_argument);
  EXPECT_THROW(P("Q1"), std::invalid_argument);
}

// Properties over random operators.

TEST(PauliProperty, CommutesIsSymmetric) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_pauli(41, rng);
    const auto b = random_pauli(41, rng);
    EXPECT_EQ(commutes(a, b), commutes(b, a));
  }
}

TEST(PauliProperty, SyndromeIsLinear) {
  std::mt19937_64 rng(12);
  const auto code = build_zzzy(5);
  for (int i = 0; i < 500; ++i) {
    const auto a = random_pauli(code.num_qubits(), rng);
    const auto b = random_pauli(code.num_qubits(), rng);
    BitVector expected = syndrome(code, a).bits;
    expected ^= syndrome(code, b).bits;
    EXPECT_EQ(syndrome(code, compose(a, b)).bits, expected);
  }
}

TEST(PauliProperty, StabilizerElementsHaveZeroSyndrome) {
  std::mt19937_64 rng(13);
  for (auto family : {CodeFamily::kSurface, CodeFamily::kZzzy, CodeFamily::kZzzyDual,
                      CodeFamily::kXzzx}) {
    const auto code = build_code(family, 5);
    for (int i = 0; i < 200; ++i) {
      PauliOperator s(code.num_qubits());
      for (const auto& g : code.generators()) {
        if (rng() & 1) {
          s = compose(s, g);
        }
      }
      EXPECT_TRUE(syndrome(code, s).bits.none());
    }
  }
}

TEST(PauliProperty, ClassSumsToWeight) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 1000; ++i) {
    const auto e = random_pauli(85, rng);
    const auto c = pauli_class(e);
    EXPECT_EQ(c.num_z + c.num_x + c.num_y, e.weight());
  }
}

TEST(PauliProperty, RenderParseRoundTrip) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 500; ++i) {
    const auto e = random_pauli(41, rng);
    EXPECT_EQ(PauliOperator::parse(e.str(), 41), e);
  }
}

}  // namespace
}  // namespace zzzy
