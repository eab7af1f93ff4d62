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

#ifndef ZZZY_ANALYSIS_H
#define ZZZY_ANALYSIS_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zzzy/channel.h"
#include "zzzy/code.h"
#include "zzzy/decoder.h"
#include "zzzy/pauli.h"

namespace zzzy {

/// Failure statistics of one error class: weight-j errors with num_z Z, num_x X
/// and num_y Y factors. Patterns are ordered Pauli-to-position assignments.
struct FractionEntry {
  int num_z = 0;
  int num_x = 0;
  int num_y = 0;
  uint64_t patterns = 0;  // patterns decoded (sample size when sampled)
  uint64_t failures = 0;
  bool sampled = false;
  double ci_lo = 0.0;  // Wilson 95% interval; equals the fraction when exhaustive
  double ci_hi = 0.0;
  /// First failing patterns in enumeration order, up to the recording limit.
  std::vector<PauliOperator> failing;

  double fraction() const {
    return patterns == 0 ? 0.0 : static_cast<double>(failures) / static_cast<double>(patterns);
  }
  /// "XZ", "ZZY", ...: X factors first, then Z, then Y.
  std::string label() const;
};

struct FractionTable {
  CodeFamily family = CodeFamily::kSurface;
  int distance = 0;
  int weight = 0;
  bool random_tie_break = false;
  /// Table order: X count descending, then Z count descending.
  std::vector<FractionEntry> entries;

  std::string code_id() const;
  const FractionEntry& entry(int num_z, int num_x) const;
  double fraction(int num_z, int num_x) const { return entry(num_z, num_x).fraction(); }
  bool exhaustive() const;
};

/// Number of ordered weight-j patterns in class (i, l): C(n,j) j!/(i! l! (j-i-l)!).
uint64_t class_pattern_count(std::size_t n, int j, int num_z, int num_x);

/// Thrown when exhaustive enumeration exceeds the budget and sampling is off.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(uint64_t required, uint64_t budget);
  uint64_t required() const { return required_; }
  uint64_t budget() const { return budget_; }

 private:
  uint64_t required_;
  uint64_t budget_;
};

struct EnumerationOptions {
  /// Largest number of decodes allowed in exhaustive mode.
  uint64_t budget = 1'000'000'000;
  /// Fall back to stratified sampling when the budget is exceeded.
  bool allow_sampling = false;
  /// Force sampling even when within budget.
  bool force_sampling = false;
  uint64_t samples_per_class = 10'000'000;
  uint64_t sampling_seed = 1;
  /// Per-pattern random tie-breaking; the pattern seed is derived from this
  /// value and the pattern's index.
  std::optional<uint64_t> tie_break_seed;
  /// Restrict to one class (num_z, num_x); all classes when unset.
  std::optional<std::pair<int, int>> only_class;
  unsigned workers = 1;
  std::size_t max_recorded_failures = 64;
};

/// Decodes every weight-j pattern (or a stratified sample per class) and
/// tallies the patterns whose residual is not a stabilizer.
/// Requires 1 <= j <= t + 1.
FractionTable enumerate_fractions(const Decoder& decoder, int j,
                                  const EnumerationOptions& options = {});

/// Exhaustive decode count for weight j (all classes, or one class).
uint64_t enumeration_size(const StabilizerCode& code, int j,
                          std::optional<std::pair<int, int>> only_class = std::nullopt);

/// Fraction of weight-j errors the decoder corrects, weighted by the channel:
/// 1 - p^-j sum class_weight(j,i,l) f(i,l). Rejects p = 0 and incomplete tables.
double beta(const FractionTable& table, const ChannelModel& channel);

/// Leading-order logical error rate (1 - beta_j) C(n, j) p^j with j the table
/// weight (normally t + 1). Meaningful for p << 1.
double pl_approx(const StabilizerCode& code, const ChannelModel& channel,
                 const FractionTable& table);

/// d C(d-2, t+1) / C(n, t+1): weight-(t+1) Z errors the ZZZY decoder misses.
/// Requires odd d > 3.
double lemma1_fraction(int d, int t, std::size_t n);
/// Numerator of lemma1_fraction as an exact count.
uint64_t lemma1_count(int d, int t);

/// Coefficients L_w of the undetectable-error weight enumerator, plus the
/// split by logical coset (X, Z and Y representatives).
struct WeightEnumerator {
  std::vector<uint64_t> coefficients;  // index w = 0..n
  std::vector<uint64_t> by_coset[3];   // X, Z, Y cosets

  uint64_t total() const;
};

inline constexpr std::size_t kMaxEnumeratorGenerators = 20;

/// Histogram of weights of S * L over the stabilizer group S and the three
/// nontrivial logical representatives L. Requires at most
/// kMaxEnumeratorGenerators generators.
WeightEnumerator weight_enumerator(const StabilizerCode& code);
WeightEnumerator weight_enumerator(const std::vector<PauliOperator>& generators,
                                   const PauliOperator& logical_x,
                                   const PauliOperator& logical_z);

/// Wilson score interval at 95% confidence.
std::pair<double, double> wilson_interval(uint64_t successes, uint64_t trials);

}  // namespace zzzy

#endif  // ZZZY_ANALYSIS_H
