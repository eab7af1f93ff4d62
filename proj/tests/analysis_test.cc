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

#include <algorithm>
#include <random>
#include <set>

#include "zzzy/analysis.h"
#include "zzzy/channel.h"
#include "zzzy/code.h"
#include "zzzy/decoder.h"

namespace zzzy {
namespace {

const FractionTable& zzzy3_table() {
  static const FractionTable table = enumerate_fractions(Decoder(build_zzzy(3)), 2);
  return table;
}

TEST(EnumerateFractions, ZzzyThreeZZIsOneOverSeventyEight) {
  const auto& e = zzzy3_table().entry(2, 0);
  EXPECT_EQ(e.failures, 1u);
  EXPECT_EQ(e.patterns, 78u);
  ASSERT_EQ(e.failing.size(), 1u);
  EXPECT_EQ(e.failing[0].str(), "Z6 Z8");
  EXPECT_EQ(e.label(), "ZZ");
}

TEST(EnumerateFractions, ClassPatternCounts) {
  const auto& t = zzzy3_table();
  ASSERT_EQ(t.entries.size(), 6u);
  uint64_t total = 0;
  for (const auto& e : t.entries) {
    EXPECT_EQ(e.patterns, class_pattern_count(13, 2, e.num_z, e.num_x));
    EXPECT_FALSE(e.sampled);
    EXPECT_GE(e.fraction(), 0.0);
    EXPECT_LE(e.fraction(), 1.0);
    total += e.patterns;
  }
  EXPECT_EQ(total, 9u * 78);
  EXPECT_EQ(t.entry(1, 1).patterns, 156u);
  // Layout order: X count descending, then Z count descending.
  std::vector<std::string> labels;
  for (const auto& e : t.entries) {
    labels.push_back(e.label());
  }
  EXPECT_EQ(labels, (std::vector<std::string>{"XX", "XZ", "XY", "ZZ", "ZY", "YY"}));
}

TEST(EnumerateFractions, SurfaceThreeXZIsZero) {
  const auto t = enumerate_fractions(Decoder(build_surface(3)), 2);
  EXPECT_EQ(t.entry(1, 1).failures, 0u);
  EXPECT_EQ(t.entry(1, 1).patterns, 156u);
}

TEST(EnumerateFractions, ZzzyFiveZZZMatchesLemmaOne) {
  EnumerationOptions options;
  options.only_class = std::make_pair(3, 0);
  const auto t = enumerate_fractions(Decoder(build_zzzy(5)), 3, options);
  ASSERT_EQ(t.entries.size(), 1u);
  const auto& e = t.entries[0];
  EXPECT_EQ(e.patterns, 10660u);
  EXPECT_EQ(e.failures, lemma1_count(5, 2));
  EXPECT_EQ(e.failures, 5u);

  // Row-confined patterns avoiding both designated columns of the row.
  std::set<std::string> expected;
  for (int r = 0; r < 5; ++r) {
    PauliOperator op(41);
    for (int c = 0; c < 5; ++c) {
      if (!is_y_designated(5, r, c)) {
        op.set(full_row_qubit(5, r, c), Pauli::Z);
      }
    }
    ASSERT_EQ(op.weight(), 3u);
    expected.insert(op.str());
  }
  std::set<std::string> got;
  for (const auto& f : e.failing) {
    got.insert(f.str());
  }
  EXPECT_EQ(got, expected);
}

TEST(EnumerateFractions, AllZeroUpToT) {
  for (auto family : {CodeFamily::kSurface, CodeFamily::kZzzy, CodeFamily::kZzzyDual,
                      CodeFamily::kXzzx}) {
    for (int d : {3, 5}) {
      const Decoder decoder(build_code(family, d));
      for (int j = 1; j <= decoder.code().t(); ++j) {
        for (const auto& e : enumerate_fractions(decoder, j).entries) {
          EXPECT_EQ(e.failures, 0u) << family_name(family) << " d=" << d << " " << e.label();
        }
      }
    }
  }
}

TEST(EnumerateFractions, RejectsBadWeightAndClass) {
  const Decoder decoder(build_zzzy(3));
  EXPECT_THROW(enumerate_fractions(decoder, 0), std::invalid_argument);
  EXPECT_THROW(enumerate_fractions(decoder, 3), std::invalid_argument);
  EnumerationOptions options;
  options.only_class = std::make_pair(2, 1);
  EXPECT_THROW(enumerate_fractions(decoder, 2, options), std::invalid_argument);
}

TEST(EnumerateFractions, BudgetRefusalReportsSize) {
  EnumerationOptions options;
  options.budget = 100;
  try {
    enumerate_fractions(Decoder(build_zzzy(3)), 2, options);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.required(), 702u);
    EXPECT_EQ(e.budget(), 100u);
    EXPECT_NE(std::string(e.what()).find("702"), std::string::npos);
  }
}

TEST(EnumerateFractions, SamplingReportsIntervals) {
  EnumerationOptions options;
  options.budget = 100;
  options.allow_sampling = true;
  options.samples_per_class = 4000;
  const auto t = enumerate_fractions(Decoder(build_zzzy(3)), 2, options);
  EXPECT_FALSE(t.exhaustive());
  for (const auto& e : t.entries) {
    EXPECT_TRUE(e.sampled);
    EXPECT_EQ(e.patterns, 4000u);
    EXPECT_LE(e.ci_lo, e.fraction());
    EXPECT_GE(e.ci_hi, e.fraction());
    const double exact = zzzy3_table().fraction(e.num_z, e.num_x);
    EXPECT_LE(e.ci_lo - 0.02, exact) << e.label();
    EXPECT_GE(e.ci_hi + 0.02, exact) << e.label();
  }
}

TEST(EnumerateFractions, IndependentOfWorkerCount) {
  const Decoder decoder(build_zzzy(3));
  EnumerationOptions options;
  options.workers = 3;
  const auto parallel = enumerate_fractions(decoder, 2, options);
  const auto& serial = zzzy3_table();
  ASSERT_EQ(parallel.entries.size(), serial.entries.size());
  for (std::size_t k = 0; k < serial.entries.size(); ++k) {
    EXPECT_EQ(parallel.entries[k].failures, serial.entries[k].failures);
    EXPECT_EQ(parallel.entries[k].failing, serial.entries[k].failing);
  }
}

TEST(EnumerateFractions, DualMirrorsZzzy) {
  const auto dual = enumerate_fractions(Decoder(build_zzzy_dual(3)), 2);
  for (const auto& e : dual.entries) {
    EXPECT_EQ(e.failures, zzzy3_table().entry(e.num_x, e.num_z).failures) << e.label();
  }
}

TEST(Beta, PhaseFlipZzzyThree) {
  const double b = beta(zzzy3_table(), make_channel(0.001, kInfiniteAsymmetry));
  EXPECT_NEAR(b, 1.0 - 1.0 / 78, 1e-12);
  EXPECT_NEAR(b, 0.987, 5e-4);
}

TEST(Beta, AllZeroTableIsOne) {
  FractionTable t = zzzy3_table();
  for (auto& e : t.entries) {
    e.failures = 0;
  }
  EXPECT_DOUBLE_EQ(beta(t, make_channel(0.01, 3.0)), 1.0);
  EXPECT_DOUBLE_EQ(pl_approx(build_zzzy(3), make_channel(0.01, 3.0), t), 0.0);
}

TEST(Beta, SurfaceThreeDepolarizing) {
  const auto t = enumerate_fractions(Decoder(build_surface(3)), 2);
  EXPECT_NEAR(beta(t, make_channel(0.001, 1.0)), 0.763, 0.005);
}

TEST(Beta, RejectsZeroRateAndPartialTables) {
  EXPECT_THROW(beta(zzzy3_table(), make_channel(0.0, 1.0)), std::invalid_argument);
  EnumerationOptions options;
  options.only_class = std::make_pair(2, 0);
  const auto partial = enumerate_fractions(Decoder(build_zzzy(3)), 2, options);
  EXPECT_THROW(beta(partial, make_channel(0.01, 1.0)), std::invalid_argument);
}

TEST(Beta, BoundedAndMonotone) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    FractionTable t = zzzy3_table();
    for (auto& e : t.entries) {
      e.failures = rng() % (e.patterns + 1);
    }
    const double a = i % 5 == 0 ? kInfiniteAsymmetry : 0.1 + static_cast<double>(rng() % 1000);
    const auto ch = make_channel(1e-4 + 1e-3 * static_cast<double>(rng() % 100), a);
    const double b = beta(t, ch);
    EXPECT_GE(b, -1e-12);
    EXPECT_LE(b, 1.0 + 1e-12);
    auto& bump = t.entries[rng() % t.entries.size()];
    if (bump.failures < bump.patterns) {
      ++bump.failures;
    }
    EXPECT_LE(beta(t, ch), b + 1e-15);
  }
}

TEST(PlApprox, ZzzyThreePhaseFlip) {
  EXPECT_NEAR(pl_approx(build_zzzy(3), make_channel(0.001, kInfiniteAsymmetry), zzzy3_table()),
              1.0e-6, 1e-15);
}

TEST(Lemma1, ClosedForm) {
  EXPECT_EQ(lemma1_count(5, 2), 5u);
  EXPECT_DOUBLE_EQ(lemma1_fraction(5, 2, 41), 5.0 / 10660);
  EXPECT_EQ(lemma1_count(7, 3), 35u);
  EXPECT_DOUBLE_EQ(lemma1_fraction(7, 3, 85), 35.0 / 2024785);
  EXPECT_THROW(lemma1_count(3, 1), std::invalid_argument);
  EXPECT_THROW(lemma1_count(6, 2), std::invalid_argument);
}

TEST(WeightEnumerator, ZzzyThreeCoefficients) {
  const auto w = weight_enumerator(build_zzzy(3));
  ASSERT_EQ(w.coefficients.size(), 14u);
  const std::vector<uint64_t> expected = {0,   0,    0,    6,    24,   75,   240,
                                          648, 1440, 2538, 3216, 2634, 1224, 243};
  EXPECT_EQ(w.coefficients, expected);
  EXPECT_EQ(w.total(), 12288u);
  for (int c = 0; c < 3; ++c) {
    uint64_t sum = 0;
    for (auto v : w.by_coset[c]) {
      sum += v;
    }
    EXPECT_EQ(sum, 4096u);
  }
}

TEST(WeightEnumerator, InvariantUnderGeneratorReordering) {
  const auto code = build_zzzy(3);
  const auto reference = weight_enumerator(code).coefficients;
  std::mt19937_64 rng(22);
  for (int i = 0; i < 5; ++i) {
    auto gens = code.generators();
    std::shuffle(gens.begin(), gens.end(), rng);
    EXPECT_EQ(weight_enumerator(gens, code.logical_x(), code.logical_z()).coefficients,
              reference);
  }
}

TEST(WeightEnumerator, SurfaceThreeHasDistanceThree) {
  const auto w = weight_enumerator(build_surface(3));
  EXPECT_EQ(w.coefficients[1] + w.coefficients[2], 0u);
  EXPECT_GT(w.coefficients[3], 0u);
  EXPECT_EQ(w.total(), 12288u);
}

TEST(WeightEnumerator, RejectsOversizedCodes) {
  EXPECT_THROW(weight_enumerator(build_zzzy(5)), std::invalid_argument);
}

TEST(Wilson, ContainsEstimate) {
  for (uint64_t n : {1u, 10u, 1000u}) {
    for (uint64_t k = 0; k <= n; k += std::max<uint64_t>(1, n / 7)) {
      const auto [lo, hi] = wilson_interval(k, n);
      const double phat = static_cast<double>(k) / static_cast<double>(n);
      EXPECT_LE(lo, phat);
      EXPECT_GE(hi, phat);
      EXPECT_GE(lo, 0.0);
      EXPECT_LE(hi, 1.0);
    }
  }
  EXPECT_EQ(wilson_interval(0, 100).first, 0.0);
}

}  // namespace
}  // namespace zzzy
