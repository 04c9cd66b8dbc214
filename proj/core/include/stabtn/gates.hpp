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

#ifndef STABTN_GATES_HPP_
#define STABTN_GATES_HPP_

#include <cmath>
#include <complex>

#include <Eigen/Dense>

namespace stabtn::gates {

using Eigen::Matrix2cd;
using Eigen::Matrix4cd;

inline const std::complex<double> I1{0.0, 1.0};

inline Matrix2cd identity2() { return Matrix2cd::Identity(); }

inline Matrix2cd x() {
  Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

inline Matrix2cd y() {
  Matrix2cd m;
  m << 0, -I1, I1, 0;
  return m;
}

inline Matrix2cd z() {
  Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

inline Matrix2cd h() {
  Matrix2cd m;
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

inline Matrix2cd s() {
  Matrix2cd m;
  m << 1, 0, 0, I1;
  return m;
}

inline Matrix2cd sdg() { return s().adjoint(); }

inline Matrix2cd t() {
  Matrix2cd m;
  m << 1, 0, 0, std::exp(I1 * (M_PI / 4));
  return m;
}

inline Matrix2cd proj0() {
  Matrix2cd m;
  m << 1, 0, 0, 0;
  return m;
}

inline Matrix2cd rx(double theta) {
  double c = std::cos(theta / 2), sn = std::sin(theta / 2);
  Matrix2cd m;
  m << c, -I1 * sn, -I1 * sn, c;
  return m;
}

inline Matrix2cd ry(double theta) {
  double c = std::cos(theta / 2), sn = std::sin(theta / 2);
  Matrix2cd m;
  m << c, -sn, sn, c;
  return m;
}

inline Matrix2cd rz(double theta) {
  Matrix2cd m;
  m << std::exp(-I1 * (theta / 2)), 0, 0, std::exp(I1 * (theta / 2));
  return m;
}

// Two-qubit matrices are indexed with the first operand as the high bit:
// row = (bit_a << 1) | bit_b.
inline Matrix4cd cnot() {
  Matrix4cd m = Matrix4cd::Zero();
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}

inline Matrix4cd cz() {
  Matrix4cd m = Matrix4cd::Identity();
  m(3, 3) = -1;
  return m;
}

inline Matrix4cd swap() {
  Matrix4cd m = Matrix4cd::Zero();
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
  return m;
}

/// Reindex a 4x4 operator so the roles of the two qubits are exchanged.
inline Matrix4cd exchange_operands(const Matrix4cd& m) {
  Matrix4cd p = Matrix4cd::Zero();
  p(0, 0) = p(1, 2) = p(2, 1) = p(3, 3) = 1;
  return p * m * p;
}

}  // namespace stabtn::gates

#endif  // STABTN_GATES_HPP_
