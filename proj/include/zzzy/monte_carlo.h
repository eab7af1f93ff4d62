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

#ifndef ZZZY_MONTE_CARLO_H
#define ZZZY_MONTE_CARLO_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "zzzy/code.h"
#include "zzzy/decoder.h"

namespace zzzy {

enum class DecoderVariant {
  kStandard,       // update_weights on codes with mixed rows
  kPlainMatching,  // two uniform-weight passes only
  kUnguarded,      // update_weights without the fallback to uniform weights
};

std::string_view variant_name(DecoderVariant v);
DecoderVariant parse_variant(std::string_view name);

struct TrialConfig {
  CodeFamily family = CodeFamily::kZzzy;
  int distance = 3;
  double p = 0.001;
  double asymmetry = 1.0;
  uint64_t trials = 1;
  uint64_t seed = 1;
  DecoderVariant variant = DecoderVariant::kStandard;
};

/// Throws std::invalid_argument unless trials >= 1, d is odd >= 3 and the
/// channel parameters are valid.
void validate(const TrialConfig& cfg);

struct SimResult {
  TrialConfig config;
  uint64_t fail_x = 0;
  uint64_t fail_y = 0;
  uint64_t fail_z = 0;
  uint64_t fail_mismatch = 0;  // always zero for a correct decoder
  double pl = 0.0;
  double ci_lo = 0.0;  // Wilson 95%
  double ci_hi = 0.0;
  double wall_seconds = 0.0;

  uint64_t trials() const { return config.trials; }
  uint64_t failures() const { return fail_x + fail_y + fail_z + fail_mismatch; }
};

Decoder make_decoder(CodeFamily family, int distance, DecoderVariant variant);

/// Trial k draws its error from CounterRng(seed, k), so the result depends on
/// (cfg) only, never on `workers`.
SimResult run(const TrialConfig& cfg, unsigned workers = 1);
std::vector<SimResult> sweep(const std::vector<TrialConfig>& grid, unsigned workers = 1);

inline constexpr std::string_view kCsvHeader =
    "family,d,p,A,trials,fail_x,fail_y,fail_z,pl,ci_lo,ci_hi,seed";

/// Shortest text that parses back to the same double ("inf" for infinity).
std::string format_number(double x);

/// Comment lines (prefixed "# ") followed by the header and one row per result.
void write_csv(std::ostream& out, const std::vector<SimResult>& results,
               const std::vector<std::string>& comments = {});

/// One data row of a simulate CSV.
struct CsvRow {
  std::string family;
  int distance = 0;
  double p = 0.0;
  double asymmetry = 0.0;
  uint64_t trials = 0;
  uint64_t fail_x = 0;
  uint64_t fail_y = 0;
  uint64_t fail_z = 0;
  double pl = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  uint64_t seed = 0;
};

/// Parses a simulate CSV; '#' lines are skipped. Throws std::runtime_error on
/// a malformed header or row.
std::vector<CsvRow> read_csv(std::istream& in);

}  // namespace zzzy

#endif  // ZZZY_MONTE_CARLO_H
