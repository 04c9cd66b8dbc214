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

#include "stabtn/tableau.hpp"

#include <stdexcept>

namespace stabtn {

Tableau::Tableau(size_t n) : n_(n), xs_(2 * n, BitVec(n)), zs_(2 * n, BitVec(n)), rs_(2 * n, 0) {
  if (n == 0) throw std::invalid_argument("Tableau: qubit count must be at least 1");
}

Tableau Tableau::identity(size_t n) {
  Tableau t(n);
  for (size_t i = 0; i < n; ++i) {
    t.xs_[i].set(i, true);       // d_i = X_i
    t.zs_[n + i].set(i, true);   // s_i = Z_i
  }
  return t;
}

size_t Tableau::check_qubit(size_t q) const {
  if (q >= n_) throw std::out_of_range("Tableau: qubit index " + std::to_string(q) + " out of range");
  return q;
}

size_t Tableau::check_row(size_t i) const {
  if (i >= 2 * n_) throw std::out_of_range("Tableau: row index " + std::to_string(i) + " out of range");
  return i;
}

PauliString Tableau::row(size_t i) const {
  check_row(i);
  return PauliString(xs_[i], zs_[i], uint8_t(2 * rs_[i]));
}

bool Tableau::row_sign(size_t i) const {
  check_row(i);
  return rs_[i] != 0;
}

void Tableau::set_row(size_t i, const PauliString& p) {
  check_row(i);
  if (p.num_qubits() != n_) throw std::invalid_argument("Tableau::set_row: length mismatch");
  if (!p.is_hermitian()) throw std::invalid_argument("Tableau::set_row: row operators must be Hermitian");
  xs_[i] = p.x;
  zs_[i] = p.z;
  rs_[i] = (p.phase_exp >> 1) & 1;
}

void Tableau::rowsum(size_t a, size_t b) {
  check_row(a);
  check_row(b);
  if (a == b) throw std::invalid_argument("Tableau::rowsum: rows must differ");
  int phase = 2 * int(rs_[a]) + 2 * int(rs_[b]);
  for (size_t j = 0; j < n_; ++j) {
    phase += g_phase(xs_[b].get(j), zs_[b].get(j), xs_[a].get(j), zs_[a].get(j));
  }
  phase = ((phase % 4) + 4) % 4;
  if (phase != 0 && phase != 2) throw std::logic_error("Tableau::rowsum: product of rows is not Hermitian");
  rs_[a] = (phase == 2);
  xs_[a] ^= xs_[b];
  zs_[a] ^= zs_[b];
}

void Tableau::apply_h(size_t q) {
  check_qubit(q);
  for (size_t i = 0; i < 2 * n_; ++i) {
    bool x = xs_[i].get(q), z = zs_[i].get(q);
    rs_[i] ^= x && z;
    xs_[i].set(q, z);
    zs_[i].set(q, x);
  }
}

void Tableau::apply_s(size_t q) {
  check_qubit(q);
  for (size_t i = 0; i < 2 * n_; ++i) {
    bool x = xs_[i].get(q), z = zs_[i].get(q);
    rs_[i] ^= x && z;
    zs_[i].set(q, z ^ x);
  }
}

void Tableau::apply_sdg(size_t q) {
  check_qubit(q);
  for (size_t i = 0; i < 2 * n_; ++i) {
    bool x = xs_[i].get(q), z = zs_[i].get(q);
    zs_[i].set(q, z ^ x);
    rs_[i] ^= x && (z ^ x);
  }
}

void Tableau::apply_x(size_t q) {
  check_qubit(q);
  for (size_t i = 0; i < 2 * n_; ++i) rs_[i] ^= zs_[i].get(q);
}

void Tableau::apply_y(size_t q) {
  check_qubit(q);
  for (size_t i = 0; i < 2 * n_; ++i) rs_[i] ^= xs_[i].get(q) ^ zs_[i].get(q);
}

void Tableau::apply_z(size_t q) {
  check_qubit(q);
  for (size_t i = 0; i < 2 * n_; ++i) rs_[i] ^= xs_[i].get(q);
}

void Tableau::apply_cnot(size_t control, size_t target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) throw std::invalid_argument("Tableau::apply_cnot: control equals target");
  for (size_t i = 0; i < 2 * n_; ++i) {
    bool xa = xs_[i].get(control), za = zs_[i].get(control);
    bool xb = xs_[i].get(target), zb = zs_[i].get(target);
    rs_[i] ^= xa && zb && (xb == za);
    xs_[i].set(target, xb ^ xa);
    zs_[i].set(control, za ^ zb);
  }
}

PauliString Tableau::compose(const DecomposedPauli& dec) const {
  if (dec.dbits.size() != n_ || dec.sbits.size() != n_) {
    throw std::invalid_argument("Tableau::compose: decomposition length mismatch");
  }
  PauliString p = PauliString::identity(n_);
  p.phase_exp = dec.alpha_exp & 3;
  for (size_t i = 0; i < n_; ++i) {
    if (dec.dbits.get(i)) p = multiply(p, row(i));
  }
  for (size_t j = 0; j < n_; ++j) {
    if (dec.sbits.get(j)) p = multiply(p, row(n_ + j));
  }
  return p;
}

void Tableau::project_basis(const DecomposedPauli& obs, size_t k, int outcome) {
  if (!obs.dbits.any()) {
    throw std::invalid_argument("Tableau::project_basis: observable commutes with all stabilizers (no basis update)");
  }
  if (k != obs.dbits.first_set()) {
    throw std::invalid_argument("Tableau::project_basis: pivot must be the first set bit of the destabilizer exponents");
  }
  if (outcome != 1 && outcome != -1) throw std::invalid_argument("Tableau::project_basis: outcome must be +1 or -1");

  PauliString observable = compose(obs);
  if (!observable.is_hermitian()) throw std::logic_error("Tableau::project_basis: observable is not Hermitian");
  if (outcome == -1) observable.phase_exp = (observable.phase_exp + 2) & 3;

  PauliString old_stab_k = stabilizer(k);
  for (size_t i = 0; i < n_; ++i) {
    if (i != k && obs.dbits.get(i)) rowsum(n_ + i, n_ + k);
  }
  for (size_t j = 0; j < n_; ++j) {
    if (j != k && obs.sbits.get(j)) rowsum(j, n_ + k);
  }
  set_row(k, old_stab_k);
  set_row(n_ + k, observable);
}

bool Tableau::check_commutation_pattern() const {
  for (size_t i = 0; i < 2 * n_; ++i) {
    for (size_t j = i + 1; j < 2 * n_; ++j) {
      bool anti = xs_[i].parity_and(zs_[j]) ^ zs_[i].parity_and(xs_[j]);
      bool expected = (j == i + n_);  // d_i vs s_i is the only anticommuting pair
      if (anti != expected) return false;
    }
  }
  return true;
}

std::string Tableau::str() const {
  std::string s;
  for (size_t i = 0; i < n_; ++i) s += "D" + std::to_string(i) + " " + row(i).str() + "\n";
  for (size_t i = 0; i < n_; ++i) s += "S" + std::to_string(i) + " " + row(n_ + i).str() + "\n";
  return s;
}

size_t gf2_rank(const Tableau& t) {
  const size_t n = t.num_qubits();
  // Concatenate (x|z) into 2n-bit rows and eliminate.
  std::vector<BitVec> rows;
  rows.reserve(2 * n);
  for (size_t i = 0; i < 2 * n; ++i) {
    PauliString p = t.row(i);
    BitVec r(2 * n);
    for (size_t q = 0; q < n; ++q) {
      r.set(q, p.x.get(q));
      r.set(n + q, p.z.get(q));
    }
    rows.push_back(std::move(r));
  }
  size_t rank = 0;
  for (size_t col = 0; col < 2 * n && rank < rows.size(); ++col) {
    size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && rows[i].get(col)) rows[i] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

Tableau random_clifford(size_t n, std::mt19937_64& rng) {
  if (n == 0) throw std::invalid_argument("random_clifford: qubit count must be at least 1");
  Tableau t = Tableau::identity(n);
  std::uniform_int_distribution<int> kind(0, n > 1 ? 2 : 1);
  std::uniform_int_distribution<size_t> qubit(0, n - 1);
  const size_t gates = 4 * n * n;
  for (size_t g = 0; g < gates; ++g) {
    switch (kind(rng)) {
      case 0:
        t.apply_h(qubit(rng));
        break;
      case 1:
        t.apply_s(qubit(rng));
        break;
      default: {
        size_t a = qubit(rng);
        size_t b = qubit(rng);
        while (b == a) b = qubit(rng);
        t.apply_cnot(a, b);
        break;
      }
    }
  }
  return t;
}

}  // namespace stabtn
