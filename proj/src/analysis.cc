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

#include "zzzy/analysis.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <thread>

namespace zzzy {

namespace {

uint64_t exact_binomial(uint64_t n, uint64_t k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  uint64_t out = 1;
  for (uint64_t m = 1; m <= k; ++m) {
    out = out * (n - k + m) / m;  // exact: out * (n-k+m) is divisible by m
  }
  return out;
}

uint64_t factorial(int k) {
  uint64_t out = 1;
  for (int m = 2; m <= k; ++m) {
    out *= static_cast<uint64_t>(m);
  }
  return out;
}

uint64_t ipow(uint64_t base, int exp) {
  uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    out *= base;
  }
  return out;
}

// Assignment digit d of a pattern: 0 = X, 1 = Z, 2 = Y.
constexpr std::array<Pauli, 3> kDigitPauli = {Pauli::X, Pauli::Z, Pauli::Y};

std::vector<std::vector<std::size_t>> combinations(std::size_t n, int j) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> c(static_cast<std::size_t>(j));
  for (int i = 0; i < j; ++i) {
    c[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
  }
  if (static_cast<std::size_t>(j) > n) {
    return out;
  }
  while (true) {
    out.push_back(c);
    int i = j - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - static_cast<std::size_t>(j - i)) {
      --i;
    }
    if (i < 0) {
      return out;
    }
    ++c[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < j; ++k) {
      c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k - 1)] + 1;
    }
  }
}

struct Failure {
  uint64_t index;
  PauliOperator pattern;
};

struct ClassTally {
  uint64_t patterns = 0;
  uint64_t failures = 0;
  std::vector<Failure> failing;
};

class Tallies {
 public:
  Tallies(int j, std::size_t limit) : j_(j), limit_(limit), cells_((j + 1) * (j + 1)) {}

  ClassTally& at(int num_z, int num_x) {
    return cells_[static_cast<std::size_t>(num_z * (j_ + 1) + num_x)];
  }

  void record(int num_z, int num_x, bool failed, uint64_t index, const PauliOperator& e) {
    ClassTally& cell = at(num_z, num_x);
    ++cell.patterns;
    if (failed) {
      ++cell.failures;
      if (cell.failing.size() < limit_) {
        cell.failing.push_back({index, e});
      }
    }
  }

  void merge(Tallies& other) {
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      cells_[c].patterns += other.cells_[c].patterns;
      cells_[c].failures += other.cells_[c].failures;
      auto& f = cells_[c].failing;
      f.insert(f.end(), std::make_move_iterator(other.cells_[c].failing.begin()),
               std::make_move_iterator(other.cells_[c].failing.end()));
      std::sort(f.begin(), f.end(),
                [](const Failure& a, const Failure& b) { return a.index < b.index; });
      if (f.size() > limit_) {
        f.resize(limit_);
      }
    }
  }

 private:
  int j_;
  std::size_t limit_;
  std::vector<ClassTally> cells_;
};

// Shared per-pattern work: syndrome by superposition, decode, classify.
class PatternDecoder {
 public:
  explicit PatternDecoder(const Decoder& decoder) : decoder_(decoder) {
    const auto& code = decoder.code();
    const std::size_t n = code.num_qubits();
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t d = 0; d < 3; ++d) {
        single_.push_back(syndrome(code, PauliOperator::single(n, q, kDigitPauli[d])));
      }
    }
  }

  // Returns true when the decoder fails on the pattern.
  bool fails(const std::vector<std::size_t>& qubits, const std::vector<int>& digits,
             std::optional<uint64_t> seed, PauliOperator& e) const {
    const auto& code = decoder_.code();
    e = PauliOperator(code.num_qubits());
    Syndrome s{BitVector(code.num_generators())};
    for (std::size_t k = 0; k < qubits.size(); ++k) {
      const auto d = static_cast<std::size_t>(digits[k]);
      e.set(qubits[k], kDigitPauli[d]);
      s.bits ^= single_[qubits[k] * 3 + d].bits;
    }
    const PauliOperator e_hat = decoder_.correct(s, seed);
    return residual_class(e, e_hat, code) != ResidualClass::kNoError;
  }

 private:
  const Decoder& decoder_;
  std::vector<Syndrome> single_;
};

std::vector<std::pair<int, int>> table_classes(int j) {
  std::vector<std::pair<int, int>> out;
  for (int num_x = j; num_x >= 0; --num_x) {
    for (int num_z = j - num_x; num_z >= 0; --num_z) {
      out.emplace_back(num_z, num_x);
    }
  }
  return out;
}

template <typename Work>
void run_partitioned(uint64_t total, unsigned workers, Work&& work) {
  workers = std::max(1u, workers);
  if (workers == 1 || total < 2) {
    work(0, uint64_t{0}, total);
    return;
  }
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    const uint64_t begin = total * w / workers;
    const uint64_t end = total * (w + 1) / workers;
    threads.emplace_back([&, w, begin, end] { work(w, begin, end); });
  }
  for (auto& t : threads) {
    t.join();
  }
}

FractionTable enumerate_exhaustive(const Decoder& decoder, int j,
                                   const EnumerationOptions& options) {
  const auto& code = decoder.code();
  const auto combos = combinations(code.num_qubits(), j);
  const uint64_t assignments = ipow(3, j);
  const unsigned workers = std::max(1u, options.workers);
  std::vector<Tallies> tallies(workers, Tallies(j, options.max_recorded_failures));
  const PatternDecoder pd(decoder);

  run_partitioned(combos.size(), workers, [&](unsigned w, uint64_t begin, uint64_t end) {
    Tallies& local = tallies[w];
    std::vector<int> digits(static_cast<std::size_t>(j));
    PauliOperator e;
    for (uint64_t c = begin; c < end; ++c) {
      for (uint64_t a = 0; a < assignments; ++a) {
        int counts[3] = {0, 0, 0};
        uint64_t rest = a;
        for (int k = 0; k < j; ++k) {
          digits[static_cast<std::size_t>(k)] = static_cast<int>(rest % 3);
          ++counts[rest % 3];
          rest /= 3;
        }
        if (options.only_class &&
            (counts[1] != options.only_class->first || counts[0] != options.only_class->second)) {
          continue;
        }
        const uint64_t index = c * assignments + a;
        std::optional<uint64_t> seed;
        if (options.tie_break_seed) {
          seed = CounterRng(*options.tie_break_seed, index).next();
        }
        const bool failed = pd.fails(combos[c], digits, seed, e);
        local.record(counts[1], counts[0], failed, index, e);
      }
    }
  });
  for (unsigned w = 1; w < workers; ++w) {
    tallies[0].merge(tallies[w]);
  }

  FractionTable table;
  table.family = code.family();
  table.distance = code.distance();
  table.weight = j;
  table.random_tie_break = options.tie_break_seed.has_value();
  for (auto [num_z, num_x] : table_classes(j)) {
    if (options.only_class && *options.only_class != std::make_pair(num_z, num_x)) {
      continue;
    }
    ClassTally& cell = tallies[0].at(num_z, num_x);
    FractionEntry entry;
    entry.num_z = num_z;
    entry.num_x = num_x;
    entry.num_y = j - num_z - num_x;
    entry.patterns = cell.patterns;
    entry.failures = cell.failures;
    entry.ci_lo = entry.ci_hi = entry.fraction();
    for (auto& f : cell.failing) {
      entry.failing.push_back(std::move(f.pattern));
    }
    table.entries.push_back(std::move(entry));
  }
  return table;
}

FractionTable enumerate_sampled(const Decoder& decoder, int j, const EnumerationOptions& options) {
  const auto& code = decoder.code();
  const std::size_t n = code.num_qubits();
  const unsigned workers = std::max(1u, options.workers);
  const PatternDecoder pd(decoder);

  FractionTable table;
  table.family = code.family();
  table.distance = code.distance();
  table.weight = j;
  table.random_tie_break = options.tie_break_seed.has_value();
  const auto classes = table_classes(j);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const auto [num_z, num_x] = classes[k];
    if (options.only_class && *options.only_class != classes[k]) {
      continue;
    }
    std::vector<Tallies> tallies(workers, Tallies(j, options.max_recorded_failures));
    const uint64_t stream_base = static_cast<uint64_t>(k) << 40;
    run_partitioned(options.samples_per_class, workers,
                    [&](unsigned w, uint64_t begin, uint64_t end) {
                      std::vector<std::size_t> qubits;
                      std::vector<int> digits;
                      std::vector<std::pair<std::size_t, int>> placed;
                      PauliOperator e;
                      for (uint64_t s = begin; s < end; ++s) {
                        CounterRng rng(options.sampling_seed, stream_base + s);
                        digits.assign(static_cast<std::size_t>(num_x), 0);
                        digits.insert(digits.end(), static_cast<std::size_t>(num_z), 1);
                        digits.insert(digits.end(), static_cast<std::size_t>(j - num_z - num_x), 2);
                        for (std::size_t m = digits.size(); m > 1; --m) {
                          std::swap(digits[m - 1], digits[rng.next() % m]);
                        }
                        qubits.clear();
                        while (qubits.size() < static_cast<std::size_t>(j)) {
                          const std::size_t q = rng.next() % n;
                          if (std::find(qubits.begin(), qubits.end(), q) == qubits.end()) {
                            qubits.push_back(q);
                          }
                        }
                        std::optional<uint64_t> seed;
                        if (options.tie_break_seed) {
                          seed = CounterRng(*options.tie_break_seed, stream_base + s).next();
                        }
                        const bool failed = pd.fails(qubits, digits, seed, e);
                        tallies[w].record(num_z, num_x, failed, s, e);
                      }
                    });
    for (unsigned w = 1; w < workers; ++w) {
      tallies[0].merge(tallies[w]);
    }
    ClassTally& cell = tallies[0].at(num_z, num_x);
    FractionEntry entry;
    entry.num_z = num_z;
    entry.num_x = num_x;
    entry.num_y = j - num_z - num_x;
    entry.patterns = cell.patterns;
    entry.failures = cell.failures;
    entry.sampled = true;
    std::tie(entry.ci_lo, entry.ci_hi) = wilson_interval(cell.failures, cell.patterns);
    for (auto& f : cell.failing) {
      entry.failing.push_back(std::move(f.pattern));
    }
    table.entries.push_back(std::move(entry));
  }
  return table;
}

}  // namespace

std::string FractionEntry::label() const {
  return std::string(static_cast<std::size_t>(num_x), 'X') +
         std::string(static_cast<std::size_t>(num_z), 'Z') +
         std::string(static_cast<std::size_t>(num_y), 'Y');
}

std::string FractionTable::code_id() const {
  return std::string(family_name(family)) + " d=" + std::to_string(distance);
}

const FractionEntry& FractionTable::entry(int num_z, int num_x) const {
  for (const auto& e : entries) {
    if (e.num_z == num_z && e.num_x == num_x) {
      return e;
    }
  }
  throw std::out_of_range("fraction table has no class with " + std::to_string(num_z) + " Z and " +
                          std::to_string(num_x) + " X factors");
}

bool FractionTable::exhaustive() const {
  return std::none_of(entries.begin(), entries.end(),
                      [](const FractionEntry& e) { return e.sampled; });
}

uint64_t class_pattern_count(std::size_t n, int j, int num_z, int num_x) {
  if (j < 0 || num_z < 0 || num_x < 0 || num_z + num_x > j) {
    throw std::invalid_argument("class_pattern_count: invalid class");
  }
  return exact_binomial(n, static_cast<uint64_t>(j)) * factorial(j) /
         (factorial(num_z) * factorial(num_x) * factorial(j - num_z - num_x));
}

BudgetExceeded::BudgetExceeded(uint64_t required, uint64_t budget)
    : std::runtime_error("exhaustive enumeration needs " + std::to_string(required) +
                         " decodes, budget is " + std::to_string(budget) +
                         "; raise the budget or enable sampling"),
      required_(required),
      budget_(budget) {}

uint64_t enumeration_size(const StabilizerCode& code, int j,
                          std::optional<std::pair<int, int>> only_class) {
  if (only_class) {
    return class_pattern_count(code.num_qubits(), j, only_class->first, only_class->second);
  }
  return ipow(3, j) * exact_binomial(code.num_qubits(), static_cast<uint64_t>(j));
}

FractionTable enumerate_fractions(const Decoder& decoder, int j, const EnumerationOptions& options) {
  const auto& code = decoder.code();
  if (j < 1 || j > code.t() + 1) {
    throw std::invalid_argument("enumerate_fractions: weight must lie in 1..t+1 (t = " +
                                std::to_string(code.t()) + ")");
  }
  if (options.only_class) {
    const auto [num_z, num_x] = *options.only_class;
    if (num_z < 0 || num_x < 0 || num_z + num_x > j) {
      throw std::invalid_argument("enumerate_fractions: invalid class restriction");
    }
  }
  const uint64_t size = enumeration_size(code, j, options.only_class);
  if (options.force_sampling) {
    return enumerate_sampled(decoder, j, options);
  }
  if (size > options.budget) {
    if (!options.allow_sampling) {
      throw BudgetExceeded(size, options.budget);
    }
    return enumerate_sampled(decoder, j, options);
  }
  return enumerate_exhaustive(decoder, j, options);
}

double beta(const FractionTable& table, const ChannelModel& channel) {
  if (channel.p() <= 0.0) {
    throw std::invalid_argument("beta: undefined for p = 0");
  }
  const int j = table.weight;
  if (table.entries.size() != table_classes(j).size()) {
    throw std::invalid_argument("beta: table does not cover every class of weight " +
                                std::to_string(j));
  }
  double missed = 0.0;
  for (const auto& e : table.entries) {
    missed += class_weight(channel, j, e.num_z, e.num_x) * e.fraction();
  }
  return 1.0 - missed / std::pow(channel.p(), j);
}

double pl_approx(const StabilizerCode& code, const ChannelModel& channel,
                 const FractionTable& table) {
  const int j = table.weight;
  // (1 - beta_j) p^j expanded, so that p = 0 needs no special case.
  double missed = 0.0;
  for (const auto& e : table.entries) {
    missed += class_weight(channel, j, e.num_z, e.num_x) * e.fraction();
  }
  return binomial(static_cast<int>(code.num_qubits()), j) * missed;
}

uint64_t lemma1_count(int d, int t) {
  if (d <= 3 || d % 2 == 0) {
    throw std::invalid_argument("lemma1: requires odd d > 3");
  }
  return static_cast<uint64_t>(d) *
         exact_binomial(static_cast<uint64_t>(d - 2), static_cast<uint64_t>(t + 1));
}

double lemma1_fraction(int d, int t, std::size_t n) {
  return static_cast<double>(lemma1_count(d, t)) /
         static_cast<double>(exact_binomial(n, static_cast<uint64_t>(t + 1)));
}

uint64_t WeightEnumerator::total() const {
  uint64_t out = 0;
  for (uint64_t c : coefficients) {
    out += c;
  }
  return out;
}

WeightEnumerator weight_enumerator(const std::vector<PauliOperator>& generators,
                                   const PauliOperator& logical_x,
                                   const PauliOperator& logical_z) {
  const std::size_t r = generators.size();
  if (r > kMaxEnumeratorGenerators) {
    throw std::invalid_argument("weight_enumerator: " + std::to_string(r) +
                                " generators exceed the limit of " +
                                std::to_string(kMaxEnumeratorGenerators));
  }
  const std::size_t n = logical_x.num_qubits();
  const PauliOperator reps[3] = {logical_x, logical_z, compose(logical_x, logical_z)};
  WeightEnumerator out;
  out.coefficients.assign(n + 1, 0);
  for (auto& c : out.by_coset) {
    c.assign(n + 1, 0);
  }
  // Gray-code walk over the stabilizer group: one multiplication per element.
  PauliOperator s(n);
  for (uint64_t step = 0; step < (uint64_t{1} << r); ++step) {
    if (step != 0) {
      s = compose(s, generators[static_cast<std::size_t>(std::countr_zero(step))]);
    }
    for (int c = 0; c < 3; ++c) {
      const std::size_t w = compose(s, reps[c]).weight();
      ++out.coefficients[w];
      ++out.by_coset[c][w];
    }
  }
  return out;
}

WeightEnumerator weight_enumerator(const StabilizerCode& code) {
  std::vector<PauliOperator> generators;
  for (std::size_t row = 0; row < code.num_generators(); ++row) {
    generators.push_back(code.generator(row));
  }
  return weight_enumerator(generators, code.logical_x(), code.logical_z());
}

std::pair<double, double> wilson_interval(uint64_t successes, uint64_t trials) {
  if (trials == 0) {
    return {0.0, 1.0};
  }
  constexpr double z = 1.959963984540054;
  const double nt = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / nt;
  const double denom = 1.0 + z * z / nt;
  const double center = (phat + z * z / (2.0 * nt)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / nt + z * z / (4.0 * nt * nt)) / denom;
  return {std::clamp(center - half, 0.0, phat), std::clamp(center + half, phat, 1.0)};
}

}  // namespace zzzy
