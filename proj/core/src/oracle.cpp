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

#include "stabtn/oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace stabtn::oracle {

namespace {

constexpr std::complex<double> kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_capacity(size_t n, size_t limit, const char* what) {
  if (n > limit) {
    throw std::length_error(std::string(what) + ": capacity exceeded (n = " + std::to_string(n) + ", limit " + std::to_string(limit) + ")");
  }
}

uint64_t low_mask(const BitVec& b) {
  // n <= 20 throughout this module, so a single word suffices.
  return b.words().empty() ? 0 : b.words()[0];
}

}  // namespace

DenseState DenseState::zero(size_t n) {
  check_capacity(n, kMaxQubits, "DenseState");
  if (n == 0) throw std::invalid_argument("DenseState: qubit count must be at least 1");
  DenseState v;
  v.n = n;
  v.amps = Eigen::VectorXcd::Zero(size_t{1} << n);
  v.amps[0] = 1.0;
  return v;
}

void DenseState::normalize() {
  double nrm = amps.norm();
  if (nrm == 0.0) throw std::runtime_error("DenseState::normalize: zero vector");
  amps /= nrm;
}

void apply_1q(DenseState& v, size_t q, const Eigen::Matrix2cd& m) {
  if (q >= v.n) throw std::out_of_range("oracle::apply_1q: qubit out of range");
  const uint64_t bit = uint64_t{1} << q;
  for (uint64_t i = 0; i < uint64_t(v.amps.size()); ++i) {
    if (i & bit) continue;
    auto a0 = v.amps[i], a1 = v.amps[i | bit];
    v.amps[i] = m(0, 0) * a0 + m(0, 1) * a1;
    v.amps[i | bit] = m(1, 0) * a0 + m(1, 1) * a1;
  }
}

void apply_2q(DenseState& v, size_t a, size_t b, const Eigen::Matrix4cd& m) {
  if (a >= v.n || b >= v.n) throw std::out_of_range("oracle::apply_2q: qubit out of range");
  if (a == b) throw std::invalid_argument("oracle::apply_2q: operands must differ");
  const uint64_t abit = uint64_t{1} << a, bbit = uint64_t{1} << b;
  for (uint64_t i = 0; i < uint64_t(v.amps.size()); ++i) {
    if ((i & abit) || (i & bbit)) continue;
    uint64_t idx[4] = {i, i | bbit, i | abit, i | abit | bbit};
    Eigen::Vector4cd in{v.amps[idx[0]], v.amps[idx[1]], v.amps[idx[2]], v.amps[idx[3]]};
    Eigen::Vector4cd out = m * in;
    for (int k = 0; k < 4; ++k) v.amps[idx[k]] = out[k];
  }
}

void apply_pauli(DenseState& v, const PauliString& p) {
  if (p.num_qubits() != v.n) throw std::invalid_argument("oracle::apply_pauli: length mismatch");
  const uint64_t xm = low_mask(p.x), zm = low_mask(p.z);
  const std::complex<double> global = kIPowers[(p.phase_exp + (p.x & p.z).popcount()) & 3];
  Eigen::VectorXcd out(v.amps.size());
  for (uint64_t i = 0; i < uint64_t(v.amps.size()); ++i) {
    double sgn = (std::popcount(i & zm) & 1) ? -1.0 : 1.0;
    out[i ^ xm] = global * sgn * v.amps[i];
  }
  v.amps = std::move(out);
}

std::complex<double> expectation(const DenseState& v, const PauliString& p) {
  DenseState w = v;
  apply_pauli(w, p);
  return v.amps.dot(w.amps);
}

MeasureResult measure_pauli(DenseState& v, const PauliString& p, std::optional<int> forced, std::mt19937_64& rng) {
  if (!p.is_hermitian()) throw std::invalid_argument("oracle::measure_pauli: observable must be Hermitian");
  std::complex<double> e = expectation(v, p);
  if (std::abs(e.imag()) > 1e-9) throw std::logic_error("oracle::measure_pauli: expectation has imaginary residue");
  double p_plus = std::clamp((1.0 + e.real()) / 2.0, 0.0, 1.0);
  int m;
  if (forced) {
    if (*forced != 1 && *forced != -1) throw std::invalid_argument("oracle::measure_pauli: outcome must be +1 or -1");
    m = *forced;
    double prob = m == 1 ? p_plus : 1.0 - p_plus;
    if (prob < 1e-12) throw std::runtime_error("oracle::measure_pauli: forced outcome has vanishing probability");
  } else {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    m = unif(rng) < p_plus ? 1 : -1;
  }
  DenseState w = v;
  apply_pauli(w, p);
  v.amps = (v.amps + double(m) * w.amps) / 2.0;
  v.normalize();
  return {m, m == 1 ? p_plus : 1.0 - p_plus};
}

double fidelity_up_to_phase(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  if (a.size() != b.size()) throw std::invalid_argument("fidelity_up_to_phase: dimension mismatch");
  return std::abs(a.dot(b));
}

double fidelity_up_to_phase(const DenseState& a, const DenseState& b) {
  return fidelity_up_to_phase(a.amps, b.amps);
}

size_t schmidt_rank(const DenseState& v, size_t cut, double tol) {
  if (cut == 0 || cut >= v.n) throw std::invalid_argument("oracle::schmidt_rank: cut must split the chain");
  const size_t rows = size_t{1} << cut, cols = size_t{1} << (v.n - cut);
  Eigen::Map<const Eigen::MatrixXcd> m(v.amps.data(), rows, cols);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  size_t r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()[i] > tol) ++r;
  }
  return r;
}

Eigen::MatrixXcd pauli_matrix(const PauliString& p) {
  check_capacity(p.num_qubits(), 10, "oracle::pauli_matrix");
  const uint64_t dim = uint64_t{1} << p.num_qubits();
  const uint64_t xm = low_mask(p.x), zm = low_mask(p.z);
  const std::complex<double> global = kIPowers[(p.phase_exp + (p.x & p.z).popcount()) & 3];
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (uint64_t col = 0; col < dim; ++col) {
    double sgn = (std::popcount(col & zm) & 1) ? -1.0 : 1.0;
    m(col ^ xm, col) = global * sgn;
  }
  return m;
}

Eigen::VectorXcd stabilizer_state(const Tableau& t) {
  check_capacity(t.num_qubits(), 12, "oracle::stabilizer_state");
  const size_t n = t.num_qubits();
  const size_t dim = size_t{1} << n;
  // The projector prod (I+s_i)/2 has rank 1; any vector not in its kernel
  // maps onto |psi_S>. A fixed-seed random start avoids hunting for a basis
  // vector that survives.
  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  DenseState v;
  v.n = n;
  v.amps = Eigen::VectorXcd(dim);
  for (size_t i = 0; i < dim; ++i) v.amps[i] = std::complex<double>(unif(rng), unif(rng));
  for (size_t i = 0; i < n; ++i) {
    DenseState w = v;
    apply_pauli(w, t.stabilizer(i));
    v.amps = (v.amps + w.amps) / 2.0;
  }
  double nrm = v.amps.norm();
  if (nrm < 1e-9) throw std::logic_error("oracle::stabilizer_state: projector annihilated the seed vector");
  v.amps /= nrm;
  // Fix the free global phase: first significant amplitude real positive.
  double maxabs = v.amps.cwiseAbs().maxCoeff();
  for (size_t i = 0; i < dim; ++i) {
    if (std::abs(v.amps[i]) > 1e-8 * maxabs) {
      v.amps *= std::abs(v.amps[i]) / v.amps[i];
      break;
    }
  }
  return v.amps;
}

double gram_check(const Tableau& t) {
  check_capacity(t.num_qubits(), 5, "oracle::gram_check");
  const size_t n = t.num_qubits();
  const size_t dim = size_t{1} << n;
  Eigen::VectorXcd psi = stabilizer_state(t);
  Eigen::MatrixXcd basis(dim, dim);
  for (size_t idx = 0; idx < dim; ++idx) {
    DenseState v;
    v.n = n;
    v.amps = psi;
    for (size_t q = 0; q < n; ++q) {
      if ((idx >> q) & 1) apply_pauli(v, t.destabilizer(q));
    }
    basis.col(idx) = v.amps;
  }
  Eigen::MatrixXcd gram = basis.adjoint() * basis;
  return (gram - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
}

}  // namespace stabtn::oracle
