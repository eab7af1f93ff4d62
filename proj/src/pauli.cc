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

#include "zzzy/pauli.h"

#include <bit>
#include <cctype>
#include <stdexcept>

namespace zzzy {

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I:
      return 'I';
    case Pauli::Z:
      return 'Z';
    case Pauli::X:
      return 'X';
    case Pauli::Y:
      return 'Y';
  }
  return '?';
}

BitVector::BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

void BitVector::set(std::size_t i, bool value) {
  const uint64_t mask = uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

std::size_t BitVector::popcount() const {
  std::size_t total = 0;
  for (uint64_t w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

bool BitVector::none() const {
  for (uint64_t w : words_) {
    if (w != 0) {
      return false;
    }
  }
  return true;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) {
    throw std::invalid_argument("BitVector length mismatch");
  }
  for (std::size_t k = 0; k < words_.size(); ++k) {
    words_[k] ^= other.words_[k];
  }
  return *this;
}

PauliOperator::PauliOperator(std::size_t num_qubits) : z_(num_qubits), x_(num_qubits) {}

PauliOperator::PauliOperator(BitVector z_part, BitVector x_part)
    : z_(std::move(z_part)), x_(std::move(x_part)) {
  if (z_.size() != x_.size()) {
    throw std::invalid_argument("z_part and x_part must have the same length");
  }
}

PauliOperator PauliOperator::single(std::size_t num_qubits, std::size_t qubit, Pauli p) {
  if (qubit >= num_qubits) {
    throw std::invalid_argument("qubit index out of range");
  }
  PauliOperator op(num_qubits);
  op.set(qubit, p);
  return op;
}

PauliOperator PauliOperator::parse(std::string_view text, std::size_t num_qubits) {
  PauliOperator op(num_qubits);
  std::size_t pos = 0;
  auto skip_separators = [&] {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',' ||
            text[pos] == '*')) {
      ++pos;
    }
  };
  skip_separators();
  while (pos < text.size()) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    Pauli p;
    switch (c) {
      case 'I':
        p = Pauli::I;
        break;
      case 'X':
        p = Pauli::X;
        break;
      case 'Y':
        p = Pauli::Y;
        break;
      case 'Z':
        p = Pauli::Z;
        break;
      default:
        throw std::invalid_argument("unexpected character in Pauli string: '" +
                                    std::string(1, text[pos]) + "'");
    }
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (start == pos) {
      if (p == Pauli::I) {
        skip_separators();
        continue;
      }
      throw std::invalid_argument("Pauli factor without a qubit index");
    }
    const std::size_t label = std::stoul(std::string(text.substr(start, pos - start)));
    if (label == 0 || label > num_qubits) {
      throw std::invalid_argument("qubit label " + std::to_string(label) + " outside 1.." +
                                  std::to_string(num_qubits));
    }
    op.apply(label - 1, p);
    skip_separators();
  }
  return op;
}

Pauli PauliOperator::at(std::size_t qubit) const {
  return static_cast<Pauli>((static_cast<unsigned>(x_.get(qubit)) << 1) |
                            static_cast<unsigned>(z_.get(qubit)));
}

void PauliOperator::set(std::size_t qubit, Pauli p) {
  const auto bits = static_cast<unsigned>(p);
  z_.set(qubit, bits & 1u);
  x_.set(qubit, bits & 2u);
}

void PauliOperator::apply(std::size_t qubit, Pauli p) {
  const auto bits = static_cast<unsigned>(p);
  if (bits & 1u) {
    z_.flip(qubit);
  }
  if (bits & 2u) {
    x_.flip(qubit);
  }
}

std::size_t PauliOperator::weight() const {
  std::size_t total = 0;
  const auto& zw = z_.words();
  const auto& xw = x_.words();
  for (std::size_t k = 0; k < zw.size(); ++k) {
    total += static_cast<std::size_t>(std::popcount(zw[k] | xw[k]));
  }
  return total;
}

std::vector<std::size_t> PauliOperator::support() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < num_qubits(); ++j) {
    if (z_.get(j) || x_.get(j)) {
      out.push_back(j);
    }
  }
  return out;
}

std::string PauliOperator::str() const {
  std::string out;
  for (std::size_t j : support()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += pauli_char(at(j));
    out += std::to_string(j + 1);
  }
  return out.empty() ? "I" : out;
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("commutes: operators act on different qubit counts");
  }
  const auto& az = a.z_part().words();
  const auto& ax = a.x_part().words();
  const auto& bz = b.z_part().words();
  const auto& bx = b.x_part().words();
  uint64_t parity = 0;
  for (std::size_t k = 0; k < az.size(); ++k) {
    parity ^= (az[k] & bx[k]) ^ (ax[k] & bz[k]);
  }
  return (std::popcount(parity) & 1) == 0;
}

PauliOperator compose(const PauliOperator& a, const PauliOperator& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("compose: operators act on different qubit counts");
  }
  BitVector z = a.z_part();
  BitVector x = a.x_part();
  z ^= b.z_part();
  x ^= b.x_part();
  return PauliOperator(std::move(z), std::move(x));
}

PauliClass pauli_class(const PauliOperator& e) {
  PauliClass c;
  for (std::size_t j = 0; j < e.num_qubits(); ++j) {
    switch (e.at(j)) {
      case Pauli::Z:
        ++c.num_z;
        break;
      case Pauli::X:
        ++c.num_x;
        break;
      case Pauli::Y:
        ++c.num_y;
        break;
      case Pauli::I:
        break;
    }
  }
  return c;
}

}  // namespace zzzy
