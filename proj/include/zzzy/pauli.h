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

#ifndef ZZZY_PAULI_H
#define ZZZY_PAULI_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zzzy {

/// Single-qubit Pauli factor. The encoding is (x_bit << 1) | z_bit.
enum class Pauli : uint8_t { I = 0, Z = 1, X = 2, Y = 3 };

char pauli_char(Pauli p);

/// Fixed-length bit vector packed into 64-bit words. Bits past size() are
/// always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value);
  void flip(std::size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

  std::size_t popcount() const;
  bool none() const;
  BitVector& operator^=(const BitVector& other);

  const std::vector<uint64_t>& words() const { return words_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<uint64_t> words_;
};

/// An n-qubit Pauli operator in binary symplectic form, phase dropped.
///
/// Qubit j carries Z when only z_part(j) is set, X when only x_part(j) is set
/// and Y when both are set. Indices are 0-based; text I/O is 1-based.
class PauliOperator {
 public:
  PauliOperator() = default;
  /// Identity on `num_qubits` qubits.
  explicit PauliOperator(std::size_t num_qubits);
  PauliOperator(BitVector z_part, BitVector x_part);

  /// Parses "Z2 Z3", "Y7", "X1 Z4 Y7" or "I". Factors on the same qubit are
  /// multiplied (phase dropped).
  static PauliOperator parse(std::string_view text, std::size_t num_qubits);
  static PauliOperator single(std::size_t num_qubits, std::size_t qubit, Pauli p);

  std::size_t num_qubits() const { return z_.size(); }
  const BitVector& z_part() const { return z_; }
  const BitVector& x_part() const { return x_; }

  Pauli at(std::size_t qubit) const;
  void set(std::size_t qubit, Pauli p);
  /// Multiplies `p` into position `qubit`.
  void apply(std::size_t qubit, Pauli p);

  std::size_t weight() const;
  bool is_identity() const { return z_.none() && x_.none(); }

  /// Qubits with a non-identity factor, ascending.
  std::vector<std::size_t> support() const;

  /// "Z1 Z4 Y7" or "I".
  std::string str() const;

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

 private:
  BitVector z_;
  BitVector x_;
};

/// Symplectic inner product is zero. Throws std::invalid_argument on length
/// mismatch.
bool commutes(const PauliOperator& a, const PauliOperator& b);

/// Phaseless product. Throws std::invalid_argument on length mismatch.
PauliOperator compose(const PauliOperator& a, const PauliOperator& b);

/// Counts of Z (i), X (l) and Y (m) factors.
struct PauliClass {
  std::size_t num_z = 0;
  std::size_t num_x = 0;
  std::size_t num_y = 0;

  friend bool operator==(const PauliClass&, const PauliClass&) = default;
};

PauliClass pauli_class(const PauliOperator& e);

/// Syndrome bits indexed by generator row.
struct Syndrome {
  BitVector bits;

  std::size_t size() const { return bits.size(); }
  bool operator[](std::size_t i) const { return bits.get(i); }

  friend bool operator==(const Syndrome&, const Syndrome&) = default;
};

}  // namespace zzzy

#endif  // ZZZY_PAULI_H
