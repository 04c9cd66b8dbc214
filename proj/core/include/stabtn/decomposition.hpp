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

#ifndef STABTN_DECOMPOSITION_HPP_
#define STABTN_DECOMPOSITION_HPP_

#include <complex>
#include <optional>
#include <vector>

#include "stabtn/mps.hpp"
#include "stabtn/pauli.hpp"
#include "stabtn/tableau.hpp"

namespace stabtn {

/// Express p in the tableau basis: p = alpha * delta_dbits * sigma_sbits.
/// dbits_i is set iff p anticommutes with stabilizer s_i, sbits_j iff p
/// anticommutes with destabilizer d_j; alpha makes the identity exact.
DecomposedPauli decompose_pauli(const Tableau& t, const PauliString& p);

struct RotationAxes {
  BitVec x, y, z;
};

/// Split (dsum, ssum) into pairwise-disjoint X/Y/Z rotation axes:
/// y = dsum AND ssum, x = dsum XOR y, z = ssum XOR y.
RotationAxes rotation_axes(const BitVec& dsum, const BitVec& ssum);

enum class PlanKind { Rotation, MeasurementCombination };

/// Compiled description of an update on |nu|: optional Pauli frame applied
/// first, then a multi-site rotation (or the non-unitary measurement
/// combination) about the axes X_ix Y_iy Z_iz, centered on `pivot`.
struct RotationPlan {
  PlanKind kind = PlanKind::Rotation;
  BitVec ix, iy, iz;
  double theta = 0.0;       // full rotation angle; the central matrix uses theta/2
  double sign = 1.0;        // +-1, absorbs alpha * (-i)^|iy| for rotations
  double combo_coeff = 0.0; // c in (I + c * P)/sqrt(2) for measurement plans
  size_t pivot = 0;
  // Frame X^x Z^z applied site by site before the rotation (empty bits = none).
  std::optional<PauliString> frame;

  BitVec support() const { return ix | iy | iz; }
};

/// Plan for the gate cos(theta/2) I - i sin(theta/2) * axis, where axis is a
/// single-qubit X, Y or Z Pauli. Throws on multi-qubit axes.
RotationPlan plan_rotation(const Tableau& t, const PauliString& axis, double theta);

/// Plan for a general two-term unitary phi1 X_{d1}Z_{s1} + phi2 X_{d2}Z_{s2}
/// acting on |nu> (frame = first term's Pauli). phi1 must be real.
RotationPlan plan_two_term(const BitVec& d1, const BitVec& s1, std::complex<double> phi1,
                           const BitVec& d2, const BitVec& s2, std::complex<double> phi2);

/// Plan for the projection combination (I + m * O)/sqrt(2) on |nu>. The pivot
/// is the first set bit of obs.dbits when present (the site later projected
/// onto |0>), otherwise the median site of the Z support.
RotationPlan plan_measurement(const Tableau& t, const DecomposedPauli& obs, int outcome);

/// Lower a plan to elementary MPS operations: frame 1-site gates, per-site
/// conjugations mapping every axis to X, nearest-support CNOT cascades into
/// the pivot, one central 2x2 matrix, and the inverses.
std::vector<MpsOp> compile_plan(const RotationPlan& plan);

}  // namespace stabtn

#endif  // STABTN_DECOMPOSITION_HPP_
