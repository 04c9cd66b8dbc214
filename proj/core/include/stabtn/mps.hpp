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

#ifndef STABTN_MPS_HPP_
#define STABTN_MPS_HPP_

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "stabtn/bitvec.hpp"

namespace stabtn {

/// Singular values below eps * (largest) are dropped after every two-site
/// update; chi_max, when set, additionally caps the kept rank.
struct TruncationPolicy {
  double eps = 1e-12;
  std::optional<size_t> chi_max;

  void validate() const;
};

struct OneQubitOp {
  size_t site;
  Eigen::Matrix2cd m;
};

/// Two-qubit operation; matrix indexed with qubit `a` as the high bit.
/// Non-adjacent operands are handled by routing `b` next to `a` with SWAPs.
struct TwoQubitOp {
  size_t a;
  size_t b;
  Eigen::Matrix4cd m;
};

using MpsOp = std::variant<OneQubitOp, TwoQubitOp>;

/// Amplitude vector |nu> as a chain of rank-3 tensors (left bond, physical,
/// right bond), kept in mixed-canonical form with a tracked orthogonality
/// center. Site k of the chain carries bit k of the basis index.
class MPSState {
 public:
  /// Product state e_idx with all bond dimensions 1.
  static MPSState basis_state(size_t n, const BasisIndex& idx);

  size_t num_sites() const { return n_; }
  /// Bond dimension between sites cut and cut+1.
  size_t bond_dim(size_t cut) const;
  size_t max_bond() const;

  /// High-water mark of max_bond() since the last reset, updated after every
  /// elementary operation (including routing SWAPs).
  size_t peak_bond() const { return peak_; }
  void reset_peak_bond() { peak_ = max_bond(); }

  void apply_1q(size_t site, const Eigen::Matrix2cd& m);
  void apply_2q(size_t a, size_t b, const Eigen::Matrix4cd& m, const TruncationPolicy& tp);
  void apply_op(const MpsOp& op, const TruncationPolicy& tp);

  /// <nu| prod_q (X^x Z^z)_q |nu>, contracted site by site in O(n chi^3).
  std::complex<double> expect_pauli(const BitVec& xbits, const BitVec& zbits) const;

  /// <this|other>.
  std::complex<double> inner(const MPSState& other) const;
  double norm() const;
  void normalize();

  /// Full amplitude vector; refuses n > 20.
  Eigen::VectorXcd to_dense() const;
  /// Number of amplitudes with magnitude above tol; refuses n > 20.
  size_t count_nonzero(double tol) const;

  /// Exact tensor-level equality (same shapes, bit-identical entries).
  bool equal_tensors(const MPSState& o) const;

  const Eigen::MatrixXcd& tensor(size_t site, int phys) const { return t_[site][phys]; }

  /// Per-site shapes plus flattened complex entries, as JSON.
  std::string dump_json() const;

 private:
  MPSState() = default;
  void move_center(size_t k);
  void apply_2q_adjacent(size_t left, const Eigen::Matrix4cd& m, const TruncationPolicy& tp);
  void swap_adjacent(size_t left, const TruncationPolicy& tp);
  void note_bond();
  size_t check_site(size_t q) const;

  size_t n_ = 0;
  std::vector<std::array<Eigen::MatrixXcd, 2>> t_;
  size_t center_ = 0;
  size_t peak_ = 1;
};

}  // namespace stabtn

#endif  // STABTN_MPS_HPP_
