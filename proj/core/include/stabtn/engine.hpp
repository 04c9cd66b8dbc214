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

#ifndef STABTN_ENGINE_HPP_
#define STABTN_ENGINE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "stabtn/circuit.hpp"
#include "stabtn/decomposition.hpp"
#include "stabtn/mps.hpp"
#include "stabtn/pauli.hpp"
#include "stabtn/tableau.hpp"

namespace stabtn {

struct MeasurementRecord {
  PauliString observable;
  int outcome;                // +1 or -1
  double probability;         // (1 + outcome * expectation_before) / 2
  double expectation_before;
};

struct EngineOptions {
  /// Rotations whose angle is within snap_tol of a multiple of pi/2 are
  /// routed to the tableau as Clifford gates instead of touching |nu>.
  bool snap_clifford_angles = true;
  double snap_tol = 1e-12;
};

/// The simulator state: a stabilizer basis B(S, D) held in a tableau and the
/// amplitude vector |nu> held in an MPS. Clifford gates update only the
/// tableau, non-Clifford rotations and measurements update only |nu> (plus
/// the measurement's basis projection).
class StabilizerTN {
 public:
  StabilizerTN(size_t n, uint64_t seed, TruncationPolicy tp = {}, EngineOptions opts = {});
  /// Start from an existing basis (|nu> = e_0, i.e. the state |psi_S>).
  StabilizerTN(Tableau tableau, uint64_t seed, TruncationPolicy tp = {}, EngineOptions opts = {});

  size_t num_qubits() const { return tableau_.num_qubits(); }
  const Tableau& tableau() const { return tableau_; }
  const MPSState& nu() const { return nu_; }
  const TruncationPolicy& truncation() const { return tp_; }

  // Update rule 1: conjugate the basis, |nu> untouched.
  void h(size_t q);
  void s(size_t q);
  void sdg(size_t q);
  void x(size_t q);
  void y(size_t q);
  void z(size_t q);
  void cx(size_t control, size_t target);
  void cz(size_t a, size_t b);
  void swap_qubits(size_t a, size_t b);

  // Update rule 2: single-qubit rotation, compiled onto |nu>.
  void apply_rotation(Axis axis, size_t q, double theta);
  void rx(size_t q, double theta) { apply_rotation(Axis::X, q, theta); }
  void ry(size_t q, double theta) { apply_rotation(Axis::Y, q, theta); }
  void rz(size_t q, double theta) { apply_rotation(Axis::Z, q, theta); }

  double expectation(const PauliString& p) const;

  // Update rule 3. Consumes one uniform draw unless the outcome is forced.
  MeasurementRecord measure(const PauliString& p, std::optional<int> forced = std::nullopt);
  MeasurementRecord measure_z(size_t q, std::optional<int> forced = std::nullopt);

  /// Assemble the full state sum_i nu_i d_i |psi_S>; n <= 12.
  Eigen::VectorXcd reconstruct_dense() const;

  /// Nonzero-coefficient count of |nu> (upper bound on the stabilizer rank).
  size_t pseudo_stabilizer_rank(double tol = 1e-9) const;

  size_t max_bond() const { return nu_.max_bond(); }
  size_t peak_bond() const { return nu_.peak_bond(); }
  void reset_peak_bond() { nu_.reset_peak_bond(); }

  std::mt19937_64& rng() { return rng_; }

 private:
  void apply_plan(const RotationPlan& plan);

  Tableau tableau_;
  MPSState nu_;
  TruncationPolicy tp_;
  EngineOptions opts_;
  std::mt19937_64 rng_;
};

/// Deterministic per-task seed derivation (splitmix64 of seed and index).
uint64_t mix_seed(uint64_t seed, uint64_t index);

struct ChiExperimentSummary {
  size_t n = 0;
  std::vector<double> samples;  // per circuit: log2 of the peak bond dimension
  double mean = 0.0;
  double max = 0.0;
  std::map<double, size_t> histogram;
};

/// For each of `circuits` seeds: fresh state in a random Clifford basis, one
/// T gate (rz(pi/4)) on a random (or fixed) qubit, record log2 of the peak
/// bond dimension of |nu>. Circuits run in parallel with derived seeds.
ChiExperimentSummary chi_experiment(size_t n, size_t circuits, uint64_t seed,
                                    std::optional<size_t> tgate_qubit = std::nullopt);

struct ExpectationEntry {
  std::string pauli_word;
  double value;
};

struct RunReport {
  size_t n = 0;
  uint64_t seed = 0;
  std::vector<MeasurementRecord> records;
  std::vector<size_t> chi_trace;  // peak bond dimension per instruction
  size_t max_chi = 1;
  std::optional<size_t> pseudo_rank;
  std::vector<ExpectationEntry> expectations;
  double wall_time_ms = 0.0;
};

RunReport run_circuit(const Circuit& circuit, uint64_t seed, TruncationPolicy tp = {},
                      bool want_pseudo_rank = false, EngineOptions opts = {});

std::string report_to_json(const RunReport& report);

}  // namespace stabtn

#endif  // STABTN_ENGINE_HPP_
