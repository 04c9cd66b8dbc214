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

#ifndef STABTN_PAULI_HPP_
#define STABTN_PAULI_HPP_

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include "stabtn/bitvec.hpp"

namespace stabtn {

enum class Axis : uint8_t { X, Y, Z };

/// An n-qubit Pauli operator i^phase_exp * prod_q sigma_q, where sigma_q is
/// the canonical single-site Pauli selected by the bit pair (x_q, z_q):
/// (0,0) -> I, (1,0) -> X, (0,1) -> Z, (1,1) -> Y.
struct PauliString {
  BitVec x;
  BitVec z;
  uint8_t phase_exp = 0;  // power of i, mod 4

  PauliString() = default;
  PauliString(BitVec x_, BitVec z_, uint8_t phase = 0);

  static PauliString identity(size_t n);
  static PauliString single(size_t n, size_t q, Axis a);
  /// Parse a word over {I,X,Y,Z} with an optional "+","-","+i","-i" prefix,
  /// e.g. "-XIZY".
  static PauliString from_word(std::string_view word);

  size_t num_qubits() const { return x.size(); }
  bool is_identity() const { return x.none() && z.none(); }
  /// Hermitian iff the i-power is even.
  bool is_hermitian() const { return (phase_exp & 1) == 0; }
  std::complex<double> phase() const;
  size_t weight() const { return (x | z).popcount(); }

  bool operator==(const PauliString& o) const = default;

  std::string str() const;
};

/// Power of i picked up when multiplying the canonical single-site Paulis
/// sigma(x1,z1) * sigma(x2,z2). Returns a value in {-1, 0, 1}.
int g_phase(bool x1, bool z1, bool x2, bool z2);

/// True iff p and q commute as operators (symplectic inner product is even).
bool commutes(const PauliString& p, const PauliString& q);

/// Operator product p * q, phase included.
PauliString multiply(const PauliString& p, const PauliString& q);

/// Decomposition of a Pauli relative to a tableau basis:
/// P = alpha * d_1^{n_1}...d_n^{n_n} * s_1^{m_1}...s_n^{m_n},
/// with alpha = i^alpha_exp in {1, i, -1, -i}.
struct DecomposedPauli {
  uint8_t alpha_exp = 0;
  BasisIndex dbits;  // exponents of the destabilizer generators
  BasisIndex sbits;  // exponents of the stabilizer generators

  std::complex<double> alpha() const;
};

}  // namespace stabtn

#endif  // STABTN_PAULI_HPP_
