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

#ifndef STABTN_TABLEAU_HPP_
#define STABTN_TABLEAU_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "stabtn/pauli.hpp"

namespace stabtn {

/// Destabilizer/stabilizer tableau: 2n rows of (x, z, r). Rows 0..n-1 hold the
/// destabilizer generators d_i, rows n..2n-1 the stabilizer generators s_i.
/// Every row is Hermitian, so a single sign bit r (operator = (-1)^r * sigma)
/// is enough; conversions to PauliString use phase_exp = 2r.
class Tableau {
 public:
  /// Tableau of |0...0>: d_i = X_i, s_i = Z_i, all signs +.
  static Tableau identity(size_t n);

  size_t num_qubits() const { return n_; }
  size_t num_rows() const { return 2 * n_; }

  PauliString row(size_t i) const;
  PauliString destabilizer(size_t i) const { return row(check_qubit(i)); }
  PauliString stabilizer(size_t i) const { return row(n_ + check_qubit(i)); }
  bool row_sign(size_t i) const;

  /// Overwrite row i with a Hermitian Pauli (phase_exp must be even).
  void set_row(size_t i, const PauliString& p);

  /// row a := (row b) * (row a), sign bit from the mod-4 phase congruence.
  void rowsum(size_t a, size_t b);

  // Conjugation by Clifford gates; every row is updated in place.
  void apply_h(size_t q);
  void apply_s(size_t q);
  void apply_sdg(size_t q);
  void apply_x(size_t q);
  void apply_y(size_t q);
  void apply_z(size_t q);
  void apply_cnot(size_t control, size_t target);

  /// Rebuild alpha * d_1^{n_1}..d_n^{n_n} * s_1^{m_1}..s_n^{m_n} as an operator.
  PauliString compose(const DecomposedPauli& dec) const;

  /// Basis update for measuring the observable described by `obs`, with
  /// outcome m in {+1,-1} and pivot k = first set bit of obs.dbits. Every row
  /// anticommuting with the observable (stabilizers with dbit set,
  /// destabilizers with sbit set) other than the pivot pair is rowsum-ed with
  /// stabilizer row k, the old stabilizer k becomes destabilizer k, and
  /// stabilizer k is set to m * observable.
  void project_basis(const DecomposedPauli& obs, size_t k, int outcome);

  /// Commutation pattern of a valid tableau: d_i anticommutes with s_i and
  /// commutes with everything else; stabilizers commute pairwise.
  bool check_commutation_pattern() const;

  std::string str() const;

  bool operator==(const Tableau& o) const = default;

 private:
  explicit Tableau(size_t n);
  size_t check_qubit(size_t q) const;
  size_t check_row(size_t i) const;

  size_t n_ = 0;
  std::vector<BitVec> xs_;
  std::vector<BitVec> zs_;
  std::vector<uint8_t> rs_;
};

/// Rank over GF(2) of the 2n x 2n symplectic matrix formed by the rows.
size_t gf2_rank(const Tableau& t);

/// Tableau reached from identity by 4n^2 gates drawn uniformly from
/// {H, S, CNOT} on uniformly random qubits.
Tableau random_clifford(size_t n, std::mt19937_64& rng);

}  // namespace stabtn

#endif  // STABTN_TABLEAU_HPP_
