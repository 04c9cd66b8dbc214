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

#include "stabtn/decomposition.hpp"

#include <cmath>
#include <stdexcept>

#include "stabtn/gates.hpp"

namespace stabtn {

namespace {

constexpr std::complex<double> kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

std::complex<double> minus_i_pow(size_t k) { return kIPowers[(4 - (k & 3)) & 3]; }

double require_real_unit(std::complex<double> v, const char* what) {
  if (std::abs(v.imag()) > 1e-9 || std::abs(std::abs(v.real()) - 1.0) > 1e-9) {
    throw std::logic_error(std::string(what) + ": phase did not reduce to +-1");
  }
  return v.real() > 0 ? 1.0 : -1.0;
}

std::vector<size_t> support_sites(const BitVec& support) {
  std::vector<size_t> sites;
  for (size_t q = 0; q < support.size(); ++q) {
    if (support.get(q)) sites.push_back(q);
  }
  return sites;
}

size_t median_site(const std::vector<size_t>& sites) { return sites[sites.size() / 2]; }

}  // namespace

DecomposedPauli decompose_pauli(const Tableau& t, const PauliString& p) {
  const size_t n = t.num_qubits();
  if (p.num_qubits() != n) throw std::invalid_argument("decompose_pauli: length mismatch");
  DecomposedPauli dec;
  dec.dbits = BitVec(n);
  dec.sbits = BitVec(n);
  for (size_t i = 0; i < n; ++i) {
    dec.dbits.set(i, !commutes(p, t.stabilizer(i)));
    dec.sbits.set(i, !commutes(p, t.destabilizer(i)));
  }
  PauliString rebuilt = t.compose(dec);
  if (rebuilt.x != p.x || rebuilt.z != p.z) {
    throw std::logic_error("decompose_pauli: commutation pattern did not reproduce the operator bits");
  }
  dec.alpha_exp = uint8_t((int(p.phase_exp) - int(rebuilt.phase_exp) + 4) & 3);
  return dec;
}

RotationAxes rotation_axes(const BitVec& dsum, const BitVec& ssum) {
  if (dsum.size() != ssum.size()) throw std::invalid_argument("rotation_axes: length mismatch");
  RotationAxes axes;
  axes.y = dsum & ssum;
  axes.x = dsum ^ axes.y;
  axes.z = ssum ^ axes.y;
  return axes;
}

RotationPlan plan_rotation(const Tableau& t, const PauliString& axis, double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("plan_rotation: angle must be finite");
  if (axis.weight() != 1 || axis.phase_exp != 0) {
    throw std::invalid_argument("plan_rotation: unsupported gate axis (must be a single-site X, Y or Z)");
  }
  DecomposedPauli dec = decompose_pauli(t, axis);
  RotationAxes axes = rotation_axes(dec.dbits, dec.sbits);

  RotationPlan plan;
  plan.kind = PlanKind::Rotation;
  plan.ix = axes.x;
  plan.iy = axes.y;
  plan.iz = axes.z;
  plan.theta = theta;
  plan.sign = require_real_unit(dec.alpha() * minus_i_pow(axes.y.popcount()), "plan_rotation");
  plan.pivot = median_site(support_sites(plan.support()));
  return plan;
}

RotationPlan plan_two_term(const BitVec& d1, const BitVec& s1, std::complex<double> phi1,
                           const BitVec& d2, const BitVec& s2, std::complex<double> phi2) {
  const size_t n = d1.size();
  if (s1.size() != n || d2.size() != n || s2.size() != n) throw std::invalid_argument("plan_two_term: length mismatch");
  if (std::abs(std::norm(phi1) + std::norm(phi2) - 1.0) > 1e-9) {
    throw std::invalid_argument("plan_two_term: coefficients must satisfy |phi1|^2 + |phi2|^2 = 1");
  }
  if (std::abs(phi1.imag()) > 1e-9) {
    throw std::invalid_argument("plan_two_term: phi1 must be real (factor the global phase out first)");
  }
  BitVec dsum = d1 ^ d2;
  BitVec ssum = s1 ^ s2;
  if (dsum.none() && ssum.none()) throw std::invalid_argument("plan_two_term: the two terms are proportional");
  RotationAxes axes = rotation_axes(dsum, ssum);

  RotationPlan plan;
  plan.kind = PlanKind::Rotation;
  plan.ix = axes.x;
  plan.iy = axes.y;
  plan.iz = axes.z;

  // On |nu>: U = (phi1 I + phi2 (-1)^{d1.(s1+s2)} X_dsum Z_ssum) X_{d1} Z_{s1},
  // and X_dsum Z_ssum = (-i)^{|Iy|} X_Ix Y_Iy Z_Iz.
  double half = std::acos(std::clamp(phi1.real(), -1.0, 1.0));
  plan.theta = 2.0 * half;
  std::complex<double> c = phi2 * (d1.parity_and(ssum) ? -1.0 : 1.0) * minus_i_pow(axes.y.popcount());
  if (std::abs(std::sin(half)) < 1e-12) {
    plan.sign = 1.0;
  } else {
    plan.sign = require_real_unit(std::complex<double>(0, 1) * c / std::sin(half), "plan_two_term");
  }
  if (d1.any() || s1.any()) plan.frame = PauliString(d1, s1, 0);
  plan.pivot = median_site(support_sites(plan.support()));
  return plan;
}

RotationPlan plan_measurement(const Tableau& t, const DecomposedPauli& obs, int outcome) {
  if (outcome != 1 && outcome != -1) throw std::invalid_argument("plan_measurement: outcome must be +1 or -1");
  if (obs.dbits.size() != t.num_qubits()) throw std::invalid_argument("plan_measurement: length mismatch");
  if (obs.dbits.none() && obs.sbits.none()) {
    throw std::invalid_argument("plan_measurement: degenerate (identity) observable");
  }
  RotationAxes axes = rotation_axes(obs.dbits, obs.sbits);

  RotationPlan plan;
  plan.kind = PlanKind::MeasurementCombination;
  plan.ix = axes.x;
  plan.iy = axes.y;
  plan.iz = axes.z;
  std::complex<double> c = double(outcome) * obs.alpha() * minus_i_pow(axes.y.popcount());
  plan.combo_coeff = require_real_unit(c, "plan_measurement");
  plan.pivot = obs.dbits.any() ? obs.dbits.first_set() : median_site(support_sites(plan.support()));
  return plan;
}

std::vector<MpsOp> compile_plan(const RotationPlan& plan) {
  const BitVec support = plan.support();
  if (support.none()) throw std::invalid_argument("compile_plan: plan has empty support");
  const std::vector<size_t> sites = support_sites(support);
  const size_t pivot = plan.pivot;
  if (!support.get(pivot)) throw std::invalid_argument("compile_plan: pivot must lie in the support");

  std::vector<MpsOp> ops;
  if (plan.frame) {
    for (size_t q = 0; q < plan.frame->num_qubits(); ++q) {
      bool fx = plan.frame->x.get(q), fz = plan.frame->z.get(q);
      if (!fx && !fz) continue;
      Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
      if (fx) m = gates::x() * m;
      if (fz) m = m * gates::z();
      ops.push_back(OneQubitOp{q, m});
    }
  }

  // Map every axis to X at its site: Y needs S^dag, Z needs H.
  std::vector<MpsOp> conj;
  for (size_t q : sites) {
    if (plan.iy.get(q)) {
      conj.push_back(OneQubitOp{q, gates::sdg()});
    } else if (plan.iz.get(q)) {
      conj.push_back(OneQubitOp{q, gates::h()});
    }
  }

  // CNOT cascades folding the X support into the pivot from both sides;
  // controls sit toward the pivot, targets outward.
  std::vector<MpsOp> cascade;
  std::vector<size_t> left, right;
  for (size_t q : sites) {
    if (q < pivot) left.push_back(q);
    if (q > pivot) right.push_back(q);
  }
  for (size_t i = 0; i < left.size(); ++i) {
    size_t outer = left[i];
    size_t inner = (i + 1 < left.size()) ? left[i + 1] : pivot;
    cascade.push_back(TwoQubitOp{inner, outer, gates::cnot()});
  }
  for (size_t i = right.size(); i-- > 0;) {
    size_t outer = right[i];
    size_t inner = (i > 0) ? right[i - 1] : pivot;
    cascade.push_back(TwoQubitOp{inner, outer, gates::cnot()});
  }

  for (const auto& op : conj) ops.push_back(op);
  for (const auto& op : cascade) ops.push_back(op);

  Eigen::Matrix2cd central;
  if (plan.kind == PlanKind::Rotation) {
    double c = std::cos(plan.theta / 2);
    std::complex<double> s = std::complex<double>(0, -1) * plan.sign * std::sin(plan.theta / 2);
    central << c, s, s, c;
  } else {
    central << 1, plan.combo_coeff, plan.combo_coeff, 1;
    central /= std::sqrt(2.0);
  }
  ops.push_back(OneQubitOp{pivot, central});

  for (size_t i = cascade.size(); i-- > 0;) ops.push_back(cascade[i]);
  for (size_t i = conj.size(); i-- > 0;) {
    auto op = std::get<OneQubitOp>(conj[i]);
    op.m = Eigen::Matrix2cd(op.m.adjoint());
    ops.push_back(op);
  }
  return ops;
}

}  // namespace stabtn
