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

#include "zzzy/channel.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace zzzy {

namespace {

uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

ChannelModel make_channel(double p, double asymmetry) {
  if (!(p >= 0.0 && p < 1.0)) {
    throw std::invalid_argument("channel probability must lie in [0, 1)");
  }
  if (!(asymmetry > 0.0)) {
    throw std::invalid_argument("asymmetry must be positive");
  }
  ChannelModel ch;
  ch.p_ = p;
  ch.asymmetry_ = asymmetry;
  if (std::isinf(asymmetry)) {
    ch.p_z_ = p;
    ch.p_x_ = 0.0;
    ch.p_y_ = 0.0;
  } else {
    ch.p_z_ = asymmetry * p / (asymmetry + 2.0);
    ch.p_x_ = p / (asymmetry + 2.0);
    ch.p_y_ = ch.p_x_;
  }
  return ch;
}

ChannelModel make_channel_components(double p_x, double p_y, double p_z) {
  if (p_x < 0.0 || p_y < 0.0 || p_z < 0.0 || !(p_x + p_y + p_z < 1.0)) {
    throw std::invalid_argument("component probabilities must be >= 0 and sum below 1");
  }
  ChannelModel ch;
  ch.p_x_ = p_x;
  ch.p_y_ = p_y;
  ch.p_z_ = p_z;
  ch.p_ = p_x + p_y + p_z;
  const double rest = ch.p_ - p_z;
  ch.asymmetry_ = rest > 0.0 ? 2.0 * p_z / rest : kInfiniteAsymmetry;
  return ch;
}

double parse_asymmetry(const std::string& text) {
  std::string lower;
  for (char c : text) {
    lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (lower == "inf" || lower == "infinity" || lower == "+inf") {
    return kInfiniteAsymmetry;
  }
  std::size_t used = 0;
  const double value = std::stod(text, &used);
  if (used != text.size()) {
    throw std::invalid_argument("bad asymmetry value '" + text + "'");
  }
  return value;
}

std::string format_asymmetry(double asymmetry) {
  if (std::isinf(asymmetry)) {
    return "inf";
  }
  std::ostringstream out;
  out << asymmetry;
  return out.str();
}

CounterRng::CounterRng(uint64_t seed, uint64_t stream)
    : state_(mix64(seed ^ mix64(stream + 0x9e3779b97f4a7c15ULL))) {}

uint64_t CounterRng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix64(state_);
}

double CounterRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

PauliOperator sample_error(const ChannelModel& channel, std::size_t num_qubits, CounterRng& rng) {
  PauliOperator e(num_qubits);
  const double px = channel.p_x();
  const double pxy = px + channel.p_y();
  const double p = pxy + channel.p_z();
  for (std::size_t j = 0; j < num_qubits; ++j) {
    const double u = rng.uniform();
    if (u >= p) {
      continue;
    }
    e.set(j, u < px ? Pauli::X : (u < pxy ? Pauli::Y : Pauli::Z));
  }
  return e;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) {
    return 0.0;
  }
  k = std::min(k, n - k);
  double out = 1.0;
  for (int m = 1; m <= k; ++m) {
    out = out * static_cast<double>(n - k + m) / static_cast<double>(m);
  }
  return std::round(out);
}

double class_weight(const ChannelModel& channel, int j, int i, int l) {
  if (j < 0 || i < 0 || l < 0 || i > j || l > j - i) {
    throw std::invalid_argument("class_weight: need 0 <= i <= j and 0 <= l <= j - i");
  }
  return binomial(j, i) * std::pow(channel.p_z(), i) * binomial(j - i, l) *
         std::pow(channel.p_x(), l) * std::pow(channel.p_y(), j - i - l);
}

}  // namespace zzzy
