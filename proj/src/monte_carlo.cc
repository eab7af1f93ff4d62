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

#include "zzzy/monte_carlo.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "zzzy/analysis.h"
#include "zzzy/channel.h"

namespace zzzy {

namespace {

struct WordsHash {
  std::size_t operator()(const std::vector<uint64_t>& w) const {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (uint64_t x : w) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// Decodes are pure functions of the syndrome, so memoizing them cannot change
// any result; it only spares repeated work on the frequent low-weight errors.
constexpr std::size_t kCacheLimit = std::size_t{1} << 18;

struct Counts {
  uint64_t x = 0;
  uint64_t y = 0;
  uint64_t z = 0;
  uint64_t mismatch = 0;
};

Counts run_block(const Decoder& decoder, const ChannelModel& channel, uint64_t seed,
                 uint64_t begin, uint64_t end) {
  const auto& code = decoder.code();
  const std::size_t n = code.num_qubits();
  std::unordered_map<std::vector<uint64_t>, PauliOperator, WordsHash> cache;
  Counts counts;
  for (uint64_t t = begin; t < end; ++t) {
    CounterRng rng(seed, t);
    const PauliOperator e = sample_error(channel, n, rng);
    if (e.is_identity()) {
      continue;
    }
    const Syndrome s = syndrome(code, e);
    PauliOperator e_hat;
    if (auto it = cache.find(s.bits.words()); it != cache.end()) {
      e_hat = it->second;
    } else {
      e_hat = decoder.correct(s);
      if (cache.size() < kCacheLimit) {
        cache.emplace(s.bits.words(), e_hat);
      }
    }
    switch (residual_class(e, e_hat, code)) {
      case ResidualClass::kNoError:
        break;
      case ResidualClass::kLogicalX:
        ++counts.x;
        break;
      case ResidualClass::kLogicalY:
        ++counts.y;
        break;
      case ResidualClass::kLogicalZ:
        ++counts.z;
        break;
      case ResidualClass::kSyndromeMismatch:
        ++counts.mismatch;
        break;
    }
  }
  return counts;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    out.push_back(field);
  }
  return out;
}

template <typename T>
T parse_field(const std::string& text, const char* name) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::runtime_error(std::string("bad ") + name + " field '" + text + "'");
  }
  return value;
}

double parse_double_field(const std::string& text, const char* name) {
  if (text == "inf") {
    return kInfiniteAsymmetry;
  }
  return parse_field<double>(text, name);
}

}  // namespace

std::string_view variant_name(DecoderVariant v) {
  switch (v) {
    case DecoderVariant::kStandard:
      return "standard";
    case DecoderVariant::kPlainMatching:
      return "plain";
    case DecoderVariant::kUnguarded:
      return "unguarded";
  }
  return "?";
}

DecoderVariant parse_variant(std::string_view name) {
  if (name == "standard") {
    return DecoderVariant::kStandard;
  }
  if (name == "plain") {
    return DecoderVariant::kPlainMatching;
  }
  if (name == "unguarded") {
    return DecoderVariant::kUnguarded;
  }
  throw std::invalid_argument("unknown decoder variant '" + std::string(name) +
                              "' (expected standard, plain or unguarded)");
}

void validate(const TrialConfig& cfg) {
  if (cfg.trials < 1) {
    throw std::invalid_argument("trials must be at least 1");
  }
  if (cfg.distance < 3 || cfg.distance % 2 == 0) {
    throw std::invalid_argument("distance must be odd and at least 3");
  }
  make_channel(cfg.p, cfg.asymmetry);
}

Decoder make_decoder(CodeFamily family, int distance, DecoderVariant variant) {
  DecoderOptions options;
  options.update_weights = variant != DecoderVariant::kPlainMatching;
  options.guard_weight_update = variant != DecoderVariant::kUnguarded;
  return Decoder(build_code(family, distance), options);
}

SimResult run(const TrialConfig& cfg, unsigned workers) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  const Decoder decoder = make_decoder(cfg.family, cfg.distance, cfg.variant);
  const ChannelModel channel = make_channel(cfg.p, cfg.asymmetry);

  workers = static_cast<unsigned>(std::clamp<uint64_t>(workers, 1, cfg.trials));
  std::vector<Counts> partial(workers);
  if (workers == 1) {
    partial[0] = run_block(decoder, channel, cfg.seed, 0, cfg.trials);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      const uint64_t begin = cfg.trials * w / workers;
      const uint64_t end = cfg.trials * (w + 1) / workers;
      threads.emplace_back([&, w, begin, end] {
        partial[w] = run_block(decoder, channel, cfg.seed, begin, end);
      });
    }
    for (auto& t : threads) {
      t.join();
    }
  }

  SimResult result;
  result.config = cfg;
  for (const Counts& c : partial) {
    result.fail_x += c.x;
    result.fail_y += c.y;
    result.fail_z += c.z;
    result.fail_mismatch += c.mismatch;
  }
  result.pl = static_cast<double>(result.failures()) / static_cast<double>(cfg.trials);
  std::tie(result.ci_lo, result.ci_hi) = wilson_interval(result.failures(), cfg.trials);
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<SimResult> sweep(const std::vector<TrialConfig>& grid, unsigned workers) {
  std::vector<SimResult> out;
  out.reserve(grid.size());
  for (const auto& cfg : grid) {
    out.push_back(run(cfg, workers));
  }
  return out;
}

std::string format_number(double x) {
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const std::vector<SimResult>& results,
               const std::vector<std::string>& comments) {
  for (const auto& c : comments) {
    out << "# " << c << '\n';
  }
  out << kCsvHeader << '\n';
  for (const auto& r : results) {
    const auto& c = r.config;
    out << family_name(c.family) << ',' << c.distance << ',' << format_number(c.p) << ','
        << format_number(c.asymmetry) << ',' << c.trials << ',' << r.fail_x << ',' << r.fail_y
        << ',' << r.fail_z << ',' << format_number(r.pl) << ',' << format_number(r.ci_lo) << ','
        << format_number(r.ci_hi) << ',' << c.seed << '\n';
  }
}

std::vector<CsvRow> read_csv(std::istream& in) {
  std::vector<CsvRow> rows;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty() || line[0] == '#') {
      continue;
    }
    if (!header_seen) {
      if (line != kCsvHeader) {
        throw std::runtime_error("unexpected CSV header '" + line + "'");
      }
      header_seen = true;
      continue;
    }
    const auto f = split_fields(line);
    if (f.size() != 12) {
      throw std::runtime_error("CSV row has " + std::to_string(f.size()) + " fields: " + line);
    }
    CsvRow row;
    row.family = f[0];
    row.distance = parse_field<int>(f[1], "d");
    row.p = parse_double_field(f[2], "p");
    row.asymmetry = parse_double_field(f[3], "A");
    row.trials = parse_field<uint64_t>(f[4], "trials");
    row.fail_x = parse_field<uint64_t>(f[5], "fail_x");
    row.fail_y = parse_field<uint64_t>(f[6], "fail_y");
    row.fail_z = parse_field<uint64_t>(f[7], "fail_z");
    row.pl = parse_double_field(f[8], "pl");
    row.ci_lo = parse_double_field(f[9], "ci_lo");
    row.ci_hi = parse_double_field(f[10], "ci_hi");
    row.seed = parse_field<uint64_t>(f[11], "seed");
    rows.push_back(std::move(row));
  }
  if (!header_seen) {
    throw std::runtime_error("CSV has no header");
  }
  return rows;
}

}  // namespace zzzy
