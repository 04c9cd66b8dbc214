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

#include "stabtn/pauli.hpp"

#include <stdexcept>

namespace stabtn {

namespace {
constexpr std::complex<double> kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
}

PauliString::PauliString(BitVec x_, BitVec z_, uint8_t phase)
    : x(std::move(x_)), z(std::move(z_)), phase_exp(phase & 3) {
  if (x.size() != z.size()) throw std::invalid_argument("PauliString: x and z must have equal length");
}

PauliString PauliString::identity(size_t n) { return PauliString(BitVec(n), BitVec(n), 0); }

PauliString PauliString::single(size_t n, size_t q, Axis a) {
  PauliString p = identity(n);
  if (a != Axis::Z) p.x.set(q, true);
  if (a != Axis::X) p.z.set(q, true);
  return p;
}

PauliString PauliString::from_word(std::string_view word) {
  uint8_t phase = 0;
  if (!word.empty() && (word.front() == '+' || word.front() == '-')) {
    if (word.front() == '-') phase = 2;
    word.remove_prefix(1);
    if (!word.empty() && (word.front() == 'i')) {
      phase = (phase + 1) & 3;
      word.remove_prefix(1);
    }
  }
  PauliString p = identity(word.size());
  for (size_t q = 0; q < word.size(); ++q) {
    switch (word[q]) {
      case 'I': case '_': break;
      case 'X': p.x.set(q, true); break;
      case 'Z': p.z.set(q, true); break;
      case 'Y': p.x.set(q, true); p.z.set(q, true); break;
      default:
        throw std::invalid_argument(std::string("PauliString: invalid character '") + word[q] + "' in Pauli word");
    }
  }
  p.phase_exp = phase;
  return p;
}

std::complex<double> PauliString::phase() const { return kIPowers[phase_exp & 3]; }

std::string PauliString::str() const {
  static const char* prefixes[4] = {"+", "+i", "-", "-i"};
  std::string s = prefixes[phase_exp & 3];
  for (size_t q = 0; q < num_qubits(); ++q) {
    bool xs = x.get(q), zs = z.get(q);
    s.push_back(xs ? (zs ? 'Y' : 'X') : (zs ? 'Z' : 'I'));
  }
  return s;
}

int g_phase(bool x1, bool z1, bool x2, bool z2) {
  if (!x1 && !z1) return 0;
  if (x1 && z1) return int(z2) - int(x2);
  if (x1) return int(z2) * (2 * int(x2) - 1);
  return int(x2) * (1 - 2 * int(z2));
}

bool commutes(const PauliString& p, const PauliString& q) {
  if (p.num_qubits() != q.num_qubits()) throw std::invalid_argument("commutes: length mismatch");
  return !(p.x.parity_and(q.z) ^ p.z.parity_and(q.x));
}

PauliString multiply(const PauliString& p, const PauliString& q) {
  if (p.num_qubits() != q.num_qubits()) throw std::invalid_argument("multiply: length mismatch");
  int phase = int(p.phase_exp) + int(q.phase_exp);
  for (size_t i = 0; i < p.num_qubits(); ++i) {
    phase += g_phase(p.x.get(i), p.z.get(i), q.x.get(i), q.z.get(i));
  }
  return PauliString(p.x ^ q.x, p.z ^ q.z, uint8_t(((phase % 4) + 4) % 4));
}

std::complex<double> DecomposedPauli::alpha() const { return kIPowers[alpha_exp & 3]; }

}  // namespace stabtn
