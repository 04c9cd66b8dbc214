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

#ifndef STABTN_ORACLE_HPP_
#define STABTN_ORACLE_HPP_

#include <complex>
#include <optional>
#include <random>

#include <Eigen/Dense>

#include "stabtn/pauli.hpp"
#include "stabtn/tableau.hpp"

// Brute-force statevector simulation. Slow and simple on purpose: this is the
// independent reference that every tensor-network code path is checked
// against. Amplitude indexing is little-endian (qubit 0 is the least
// significant bit of the index).
namespace stabtn::oracle {

inline constexpr size_t kMaxQubits = 20;

struct DenseState {
  size_t n = 0;
  Eigen::VectorXcd amps;

  static DenseState zero(size_t n);
  void normalize();
};

void apply_1q(DenseState& v, size_t q, const Eigen::Matrix2cd& m);
/// 4x4 gate with the first operand as the high bit of the matrix index.
void apply_2q(DenseState& v, size_t a, size_t b, const Eigen::Matrix4cd& m);
void apply_pauli(DenseState& v, const PauliString& p);

std::complex<double> expectation(const DenseState& v, const PauliString& p);

struct MeasureResult {
  int outcome;         // +1 or -1
  double probability;  // probability of the recorded outcome
};

/// Projective measurement of a Hermitian Pauli: (I + mP)/2 then renormalize.
/// Consumes one uniform draw from rng unless the outcome is forced.
MeasureResult measure_pauli(DenseState& v, const PauliString& p, std::optional<int> forced, std::mt19937_64& rng);

/// |<a|b>|, insensitive to global phase.
double fidelity_up_to_phase(const DenseState& a, const DenseState& b);
double fidelity_up_to_phase(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

/// Number of singular values above tol across the bipartition
/// {0..cut-1 | cut..n-1}.
size_t schmidt_rank(const DenseState& v, size_t cut, double tol = 1e-10);

/// Dense matrix of a Pauli operator (n <= 10).
Eigen::MatrixXcd pauli_matrix(const PauliString& p);

/// The stabilizer state fixed by the tableau's stabilizer rows, built with
/// projectors (I + s_i)/2 and phase-fixed so the first nonzero amplitude is
/// real positive. Guarded to n <= 12.
Eigen::VectorXcd stabilizer_state(const Tableau& t);

/// Max deviation |Gram - I| over the 2^n basis vectors d_i |psi_S> (n <= 5).
double gram_check(const Tableau& t);

}  // namespace stabtn::oracle

#endif  // STABTN_ORACLE_HPP_
