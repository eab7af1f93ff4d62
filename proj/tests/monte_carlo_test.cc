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

#include <cmath>
#include <sstream>

#include "zzzy/channel.h"
#include "zzzy/monte_carlo.h"

namespace zzzy {
namespace {

void expect_same(const SimResult& a, const SimResult& b) {
  EXPECT_EQ(a.fail_x, b.fail_x);
  EXPECT_EQ(a.fail_y, b.fail_y);
  EXPECT_EQ(a.fail_z, b.fail_z);
  EXPECT_EQ(a.fail_mismatch, b.fail_mismatch);
  EXPECT_EQ(a.pl, b.pl);
  EXPECT_EQ(a.ci_lo, b.ci_lo);
  EXPECT_EQ(a.ci_hi, b.ci_hi);
}

TrialConfig config(CodeFamily family, int d, double p, double a, uint64_t trials) {
  TrialConfig cfg;
  cfg.family = family;
  cfg.distance = d;
  cfg.p = p;
  cfg.asymmetry = a;
  cfg.trials = trials;
  cfg.seed = 42;
  return cfg;
}

TEST(Run, RepeatableForSameSeed) {
  const auto cfg = config(CodeFamily::kZzzy, 3, 0.05, 10.0, 20000);
  const auto a = run(cfg);
  const auto b = run(cfg);
  expect_same(a, b);
  EXPECT_GT(a.failures(), 0u);
}

TEST(Run, ZeroRateNeverFails) {
  const auto r = run(config(CodeFamily::kZzzy, 5, 0.0, 1.0, 5000));
  EXPECT_EQ(r.failures(), 0u);
  EXPECT_EQ(r.pl, 0.0);
}

TEST(Run, IndependentOfWorkerCount) {
  for (auto family : {CodeFamily::kSurface, CodeFamily::kZzzy, CodeFamily::kXzzx}) {
    const auto cfg = config(family, 5, 0.04, 3.0, 6001);
    const auto one = run(cfg, 1);
    for (unsigned w : {2u, 3u, 8u}) {
      expect_same(one, run(cfg, w));
    }
  }
}

TEST(Run, ResultInvariants) {
  const auto r = run(config(CodeFamily::kZzzyDual, 3, 0.08, 1.0, 10000), 2);
  EXPECT_LE(r.failures(), r.trials());
  EXPECT_EQ(r.fail_mismatch, 0u);
  EXPECT_LE(r.ci_lo, r.pl);
  EXPECT_GE(r.ci_hi, r.pl);
  EXPECT_GE(r.wall_seconds, 0.0);
}

TEST(Run, PlainVariantDiffersOnlyOnMixedCodes) {
  auto cfg = config(CodeFamily::kSurface, 3, 0.05, 10.0, 20000);
  const auto standard = run(cfg);
  cfg.variant = DecoderVariant::kPlainMatching;
  expect_same(standard, run(cfg));
}

TEST(Validate, RejectsBadConfigs) {
  auto cfg = config(CodeFamily::kZzzy, 3, 0.01, 1.0, 0);
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  cfg.trials = 1;
  cfg.distance = 4;
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  cfg.distance = 3;
  cfg.p = 1.5;
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  EXPECT_THROW(parse_variant("fancy"), std::invalid_argument);
}

TEST(Sweep, SingleCellEqualsRun) {
  const auto cfg = config(CodeFamily::kZzzy, 3, 0.03, 100.0, 5000);
  const auto cells = sweep({cfg});
  ASSERT_EQ(cells.size(), 1u);
  expect_same(cells[0], run(cfg));
}

TEST(Sweep, DepolarizingZzzyComparableToSurface) {
  const auto zzzy = run(config(CodeFamily::kZzzy, 3, 0.001, 1.0, 2'000'000));
  const auto surface = run(config(CodeFamily::kSurface, 3, 0.001, 1.0, 2'000'000));
  EXPECT_LE(zzzy.ci_lo, surface.ci_hi);
  EXPECT_LE(surface.ci_lo, zzzy.ci_hi);
}

TEST(Csv, HeaderAndRoundTrip) {
  const auto results = sweep({config(CodeFamily::kZzzy, 3, 0.05, kInfiniteAsymmetry, 3000),
                              config(CodeFamily::kSurface, 5, 0.05, 2.5, 3000)});
  std::ostringstream out;
  write_csv(out, results, {"tool=test"});
  const std::string text = out.str();
  EXPECT_EQ(text.rfind("# tool=test\n" + std::string(kCsvHeader) + "\n", 0), 0u) << text;
  EXPECT_NE(text.find("zzzy,3,0.05,inf,3000,"), std::string::npos) << text;
  std::istringstream in(text);
  const auto rows = read_csv(in);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1].family, "surface");
  EXPECT_EQ(rows[1].distance, 5);
  EXPECT_EQ(rows[1].asymmetry, 2.5);
  EXPECT_EQ(rows[0].fail_z, results[0].fail_z);
  EXPECT_EQ(rows[0].pl, results[0].pl);
  EXPECT_TRUE(std::isinf(rows[0].asymmetry));
}

TEST(Csv, RejectsForeignHeader) {
  std::istringstream in("a,b,c\n1,2,3\n");
  EXPECT_THROW(read_csv(in), std::runtime_error);
}

}  // namespace
}  // namespace zzzy
