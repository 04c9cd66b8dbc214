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

#include "stabtn/mps.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "stabtn/gates.hpp"

namespace stabtn {

namespace {

constexpr size_t kDenseLimit = 20;

// Thin QR: M = Q R with Q of shape (rows x r), R of shape (r x cols).
void thin_qr(const Eigen::MatrixXcd& m, Eigen::MatrixXcd& q, Eigen::MatrixXcd& r) {
  const Eigen::Index k = std::min(m.rows(), m.cols());
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
  q = qr.householderQ() * Eigen::MatrixXcd::Identity(m.rows(), k);
  r = qr.matrixQR().topLeftCorner(k, m.cols()).triangularView<Eigen::Upper>();
}

}  // namespace

void TruncationPolicy::validate() const {
  if (eps < 0) throw std::invalid_argument("TruncationPolicy: eps must be non-negative");
  if (chi_max && *chi_max < 1) throw std::invalid_argument("TruncationPolicy: chi_max must be at least 1");
}

MPSState MPSState::basis_state(size_t n, const BasisIndex& idx) {
  if (n == 0) throw std::invalid_argument("MPSState: site count must be at least 1");
  if (idx.size() != n) throw std::invalid_argument("MPSState::basis_state: index length mismatch");
  MPSState m;
  m.n_ = n;
  m.t_.resize(n);
  for (size_t k = 0; k < n; ++k) {
    m.t_[k][0] = Eigen::MatrixXcd::Zero(1, 1);
    m.t_[k][1] = Eigen::MatrixXcd::Zero(1, 1);
    m.t_[k][idx.get(k) ? 1 : 0](0, 0) = 1.0;
  }
  m.center_ = 0;
  m.peak_ = 1;
  return m;
}

size_t MPSState::check_site(size_t q) const {
  if (q >= n_) throw std::out_of_range("MPSState: site " + std::to_string(q) + " out of range");
  return q;
}

size_t MPSState::bond_dim(size_t cut) const {
  if (cut + 1 >= n_) throw std::out_of_range("MPSState::bond_dim: cut out of range");
  return size_t(t_[cut][0].cols());
}

size_t MPSState::max_bond() const {
  size_t chi = 1;
  for (size_t k = 0; k + 1 < n_; ++k) chi = std::max(chi, size_t(t_[k][0].cols()));
  return chi;
}

void MPSState::note_bond() { peak_ = std::max(peak_, max_bond()); }

void MPSState::move_center(size_t k) {
  check_site(k);
  while (center_ < k) {
    const size_t c = center_;
    const Eigen::Index chiL = t_[c][0].rows(), chiR = t_[c][0].cols();
    Eigen::MatrixXcd m(2 * chiL, chiR);
    m.topRows(chiL) = t_[c][0];
    m.bottomRows(chiL) = t_[c][1];
    Eigen::MatrixXcd q, r;
    thin_qr(m, q, r);
    t_[c][0] = q.topRows(chiL);
    t_[c][1] = q.bottomRows(chiL);
    t_[c + 1][0] = r * t_[c + 1][0];
    t_[c + 1][1] = r * t_[c + 1][1];
    ++center_;
  }
  while (center_ > k) {
    const size_t c = center_;
    const Eigen::Index chiL = t_[c][0].rows(), chiR = t_[c][0].cols();
    Eigen::MatrixXcd m(chiL, 2 * chiR);
    m.leftCols(chiR) = t_[c][0];
    m.rightCols(chiR) = t_[c][1];
    // LQ via QR of the adjoint: M = (R^dag)(Q^dag).
    Eigen::MatrixXcd q, r;
    thin_qr(m.adjoint(), q, r);
    Eigen::MatrixXcd qd = q.adjoint();  // (r x 2 chiR), orthonormal rows
    Eigen::MatrixXcd l = r.adjoint();   // (chiL x r)
    t_[c][0] = qd.leftCols(chiR);
    t_[c][1] = qd.rightCols(chiR);
    t_[c - 1][0] = t_[c - 1][0] * l;
    t_[c - 1][1] = t_[c - 1][1] * l;
    --center_;
  }
}

void MPSState::apply_1q(size_t site, const Eigen::Matrix2cd& m) {
  check_site(site);
  move_center(site);
  Eigen::MatrixXcd a0 = m(0, 0) * t_[site][0] + m(0, 1) * t_[site][1];
  Eigen::MatrixXcd a1 = m(1, 0) * t_[site][0] + m(1, 1) * t_[site][1];
  t_[site][0] = std::move(a0);
  t_[site][1] = std::move(a1);
}

void MPSState::apply_2q_adjacent(size_t left, const Eigen::Matrix4cd& m, const TruncationPolicy& tp) {
  const size_t k = left;
  if (center_ < k) move_center(k);
  if (center_ > k + 1) move_center(k + 1);

  const Eigen::Index chiL = t_[k][0].rows(), chiR = t_[k + 1][0].cols();
  std::array<std::array<Eigen::MatrixXcd, 2>, 2> theta;
  for (int pa = 0; pa < 2; ++pa) {
    for (int pb = 0; pb < 2; ++pb) theta[pa][pb] = t_[k][pa] * t_[k + 1][pb];
  }
  Eigen::MatrixXcd big(2 * chiL, 2 * chiR);
  for (int pa = 0; pa < 2; ++pa) {
    for (int pb = 0; pb < 2; ++pb) {
      Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(chiL, chiR);
      for (int qa = 0; qa < 2; ++qa) {
        for (int qb = 0; qb < 2; ++qb) acc += m(2 * pa + pb, 2 * qa + qb) * theta[qa][qb];
      }
      big.block(pa * chiL, pb * chiR, chiL, chiR) = acc;
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(big, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  Eigen::Index keep = 0;
  const double cutoff = sv.size() ? tp.eps * sv[0] : 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > cutoff) ++keep;
  }
  keep = std::max<Eigen::Index>(keep, 1);
  if (tp.chi_max) keep = std::min<Eigen::Index>(keep, Eigen::Index(*tp.chi_max));

  Eigen::MatrixXcd u = svd.matrixU().leftCols(keep);
  Eigen::MatrixXcd sv_t = sv.head(keep).asDiagonal() * svd.matrixV().leftCols(keep).adjoint();
  for (int p = 0; p < 2; ++p) {
    t_[k][p] = u.block(p * chiL, 0, chiL, keep);
    t_[k + 1][p] = sv_t.block(0, p * chiR, keep, chiR);
  }
  center_ = k + 1;
  note_bond();
}

void MPSState::swap_adjacent(size_t left, const TruncationPolicy& tp) {
  apply_2q_adjacent(left, gates::swap(), tp);
}

void MPSState::apply_2q(size_t a, size_t b, const Eigen::Matrix4cd& m, const TruncationPolicy& tp) {
  check_site(a);
  check_site(b);
  if (a == b) throw std::invalid_argument("MPSState::apply_2q: operands must differ");
  tp.validate();

  if (b == a + 1) {
    apply_2q_adjacent(a, m, tp);
    return;
  }
  if (b + 1 == a) {
    apply_2q_adjacent(b, gates::exchange_operands(m), tp);
    return;
  }
  // Route b next to a, apply, route back so the site order is restored.
  if (b > a) {
    for (size_t s = b - 1; s > a; --s) swap_adjacent(s, tp);
    apply_2q_adjacent(a, m, tp);
    for (size_t s = a + 1; s < b; ++s) swap_adjacent(s, tp);
  } else {
    for (size_t s = b; s + 2 < a + 1; ++s) swap_adjacent(s, tp);
    apply_2q_adjacent(a - 1, gates::exchange_operands(m), tp);
    for (size_t s = a - 1; s > b; --s) swap_adjacent(s - 1, tp);
  }
}

void MPSState::apply_op(const MpsOp& op, const TruncationPolicy& tp) {
  if (const auto* one = std::get_if<OneQubitOp>(&op)) {
    apply_1q(one->site, one->m);
  } else {
    const auto& two = std::get<TwoQubitOp>(op);
    apply_2q(two.a, two.b, two.m, tp);
  }
}

std::complex<double> MPSState::expect_pauli(const BitVec& xbits, const BitVec& zbits) const {
  if (xbits.size() != n_ || zbits.size() != n_) throw std::invalid_argument("MPSState::expect_pauli: length mismatch");
  Eigen::MatrixXcd l = Eigen::MatrixXcd::Ones(1, 1);
  for (size_t k = 0; k < n_; ++k) {
    Eigen::Matrix2cd op = Eigen::Matrix2cd::Identity();
    if (xbits.get(k)) op = gates::x() * op;
    if (zbits.get(k)) op = op * gates::z();
    Eigen::MatrixXcd next = Eigen::MatrixXcd::Zero(t_[k][0].cols(), t_[k][0].cols());
    for (int pout = 0; pout < 2; ++pout) {
      for (int pin = 0; pin < 2; ++pin) {
        if (op(pout, pin) == std::complex<double>(0, 0)) continue;
        next += op(pout, pin) * (t_[k][pout].adjoint() * l * t_[k][pin]);
      }
    }
    l = std::move(next);
  }
  return l(0, 0);
}

std::complex<double> MPSState::inner(const MPSState& o) const {
  if (o.n_ != n_) throw std::invalid_argument("MPSState::inner: size mismatch");
  Eigen::MatrixXcd l = Eigen::MatrixXcd::Ones(1, 1);
  for (size_t k = 0; k < n_; ++k) {
    Eigen::MatrixXcd next = Eigen::MatrixXcd::Zero(t_[k][0].cols(), o.t_[k][0].cols());
    for (int p = 0; p < 2; ++p) next += t_[k][p].adjoint() * l * o.t_[k][p];
    l = std::move(next);
  }
  return l(0, 0);
}

double MPSState::norm() const { return std::sqrt(std::abs(inner(*this))); }

void MPSState::normalize() {
  double nrm = norm();
  if (nrm < 1e-300) throw std::runtime_error("MPSState::normalize: zero state");
  t_[center_][0] /= nrm;
  t_[center_][1] /= nrm;
}

Eigen::VectorXcd MPSState::to_dense() const {
  if (n_ > kDenseLimit) throw std::length_error("MPSState::to_dense: capacity exceeded (n > 20)");
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Ones(1, 1);
  for (size_t k = 0; k < n_; ++k) {
    Eigen::MatrixXcd next(acc.rows() * 2, t_[k][0].cols());
    next.topRows(acc.rows()) = acc * t_[k][0];
    next.bottomRows(acc.rows()) = acc * t_[k][1];
    acc = std::move(next);
  }
  return Eigen::VectorXcd(acc.col(0));
}

size_t MPSState::count_nonzero(double tol) const {
  Eigen::VectorXcd v = to_dense();
  size_t c = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > tol) ++c;
  }
  return c;
}

bool MPSState::equal_tensors(const MPSState& o) const {
  if (o.n_ != n_) return false;
  for (size_t k = 0; k < n_; ++k) {
    for (int p = 0; p < 2; ++p) {
      if (t_[k][p].rows() != o.t_[k][p].rows() || t_[k][p].cols() != o.t_[k][p].cols()) return false;
      if ((t_[k][p].array() != o.t_[k][p].array()).any()) return false;
    }
  }
  return true;
}

std::string MPSState::dump_json() const {
  nlohmann::json sites = nlohmann::json::array();
  for (size_t k = 0; k < n_; ++k) {
    nlohmann::json data = nlohmann::json::array();
    // Flattened in (left, phys, right) row-major order.
    for (Eigen::Index l = 0; l < t_[k][0].rows(); ++l) {
      for (int p = 0; p < 2; ++p) {
        for (Eigen::Index r = 0; r < t_[k][0].cols(); ++r) {
          const auto& v = t_[k][p](l, r);
          data.push_back({v.real(), v.imag()});
        }
      }
    }
    sites.push_back({{"shape", {t_[k][0].rows(), 2, t_[k][0].cols()}}, {"data", std::move(data)}});
  }
  nlohmann::json j{{"n", n_}, {"sites", std::move(sites)}};
  return j.dump();
}

}  // namespace stabtn
