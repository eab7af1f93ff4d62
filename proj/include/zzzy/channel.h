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

#ifndef ZZZY_CHANNEL_H
#define ZZZY_CHANNEL_H

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>

#include "zzzy/pauli.h"

namespace zzzy {

inline constexpr double kInfiniteAsymmetry = std::numeric_limits<double>::infinity();

/// Independent, identically distributed Pauli channel.
///
/// Parametrized by the total error probability p and the asymmetry
/// A = 2 p_z / (p - p_z). The X and Y probabilities are split evenly, so
/// p_z = A p / (A + 2) and p_x = p_y = p / (A + 2). A = 1 is the depolarizing
/// channel and A = infinity the phase-flip channel.
class ChannelModel {
 public:
  double p() const { return p_; }
  /// Infinity for the phase-flip channel and for any channel with p_x = p_y = 0.
  double asymmetry() const { return asymmetry_; }
  double p_x() const { return p_x_; }
  double p_y() const { return p_y_; }
  double p_z() const { return p_z_; }

 private:
  friend ChannelModel make_channel(double p, double asymmetry);
  friend ChannelModel make_channel_components(double p_x, double p_y, double p_z);

  double p_ = 0.0;
  double asymmetry_ = 1.0;
  double p_x_ = 0.0;
  double p_y_ = 0.0;
  double p_z_ = 0.0;
};

/// Requires 0 <= p < 1 and A > 0 (A may be kInfiniteAsymmetry). Throws
/// std::invalid_argument otherwise.
ChannelModel make_channel(double p, double asymmetry);

/// Explicit per-Pauli probabilities, for channels outside the p_x = p_y family.
ChannelModel make_channel_components(double p_x, double p_y, double p_z);

/// Parses a float or "inf"/"infinity".
double parse_asymmetry(const std::string& text);
std::string format_asymmetry(double asymmetry);

/// Counter-based random stream: the state is a pure function of (seed, stream
/// index), so trial k sees the same numbers regardless of scheduling.
class CounterRng {
 public:
  CounterRng(uint64_t seed, uint64_t stream);

  uint64_t next();
  /// Uniform in [0, 1) with 53 bits of resolution.
  double uniform();

 private:
  uint64_t state_;
};

/// Each qubit independently gets X, Y, Z or identity with probabilities
/// p_x, p_y, p_z, 1 - p.
PauliOperator sample_error(const ChannelModel& channel, std::size_t num_qubits, CounterRng& rng);

/// Probability mass of weight-j errors with i Z factors and l X factors on a
/// fixed set of j qubits: C(j,i) p_z^i C(j-i,l) p_x^l p_y^(j-i-l).
/// Throws std::invalid_argument unless i <= j and l <= j - i.
double class_weight(const ChannelModel& channel, int j, int i, int l);

double binomial(int n, int k);

}  // namespace zzzy

#endif  // ZZZY_CHANNEL_H
