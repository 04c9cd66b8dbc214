// Copyright 2026 The stabtn authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STABTN_BITVEC_HPP_
#define STABTN_BITVEC_HPP_

#include <bit>
#include <cstdint>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace stabtn {

/// Fixed-length bit vector packed into 64-bit words. Rows of the tableau,
/// Pauli X/Z masks and basis indices are all stored in this form so that
/// per-row updates cost O(n/64).
class BitVec {
 public:
  BitVec() = default;

  explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static BitVec from_bits(std::initializer_list<int> bits) {
    BitVec v(bits.size());
    size_t i = 0;
    for (int b : bits) v.set(i++, b != 0);
    return v;
  }

  /// Single set bit at position q.
  static BitVec unit(size_t n, size_t q) {
    BitVec v(n);
    v.set(q, true);
    return v;
  }

  size_t size() const { return n_; }

  bool get(size_t i) const {
    check_index(i);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }

  void set(size_t i, bool value) {
    check_index(i);
    uint64_t mask = uint64_t{1} << (i & 63);
    if (value) {
      w_[i >> 6] |= mask;
    } else {
      w_[i >> 6] &= ~mask;
    }
  }

  void flip(size_t i) {
    check_index(i);
    w_[i >> 6] ^= uint64_t{1} << (i & 63);
  }

  BitVec& operator^=(const BitVec& o) {
    check_size(o);
    for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }

  BitVec& operator&=(const BitVec& o) {
    check_size(o);
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }

  BitVec& operator|=(const BitVec& o) {
    check_size(o);
    for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }

  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

  size_t popcount() const {
    size_t c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  /// Parity of popcount(a & b); the building block of the symplectic product.
  bool parity_and(const BitVec& o) const {
    check_size(o);
    uint64_t acc = 0;
    for (size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
    return std::popcount(acc) & 1;
  }

  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  /// Index of the lowest set bit; size() if no bit is set.
  size_t first_set() const {
    for (size_t k = 0; k < w_.size(); ++k) {
      if (w_[k]) return k * 64 + std::countr_zero(w_[k]);
    }
    return n_;
  }

  bool operator==(const BitVec& o) const = default;

  const std::vector<uint64_t>& words() const { return w_; }

  std::string str() const {
    std::string s;
    s.reserve(n_);
    for (size_t i = 0; i < n_; ++i) s.push_back(get(i) ? '1' : '0');
    return s;
  }

 private:
  void check_index(size_t i) const {
    if (i >= n_) throw std::out_of_range("BitVec: index " + std::to_string(i) + " out of range for length " + std::to_string(n_));
  }
  void check_size(const BitVec& o) const {
    if (n_ != o.n_) throw std::invalid_argument("BitVec: length mismatch (" + std::to_string(n_) + " vs " + std::to_string(o.n_) + ")");
  }

  size_t n_ = 0;
  std::vector<uint64_t> w_;
};

/// Exponent vector selecting a product of generators, e.g. d_1^{b_1}...d_n^{b_n}.
using BasisIndex = BitVec;

}  // namespace stabtn

#endif  // STABTN_BITVEC_HPP_
