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

#include "stabtn/engine.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "stabtn/gates.hpp"
#include "stabtn/oracle.hpp"
#include "stabtn/parallel.hpp"

namespace stabtn {

namespace {

constexpr double kExpectationImagTol = 1e-9;
constexpr double kDeterministicTol = 1e-10;
constexpr double kImpossibleProb = 1e-12;

double checked_real(std::complex<double> v, const char* what) {
  if (std::abs(v.imag()) > kExpectationImagTol) {
    throw std::logic_error(std::string(what) + ": imaginary residue " + std::to_string(v.imag()));
  }
  return v.real();
}

}  // namespace

StabilizerTN::StabilizerTN(size_t n, uint64_t seed, TruncationPolicy tp, EngineOptions opts)
    : StabilizerTN(Tableau::identity(n), seed, tp, opts) {}

StabilizerTN::StabilizerTN(Tableau tableau, uint64_t seed, TruncationPolicy tp, EngineOptions opts)
    : tableau_(std::move(tableau)),
      nu_(MPSState::basis_state(tableau_.num_qubits(), BitVec(tableau_.num_qubits()))),
      tp_(tp),
      opts_(opts),
      rng_(seed) {
  tp_.validate();
}

void StabilizerTN::h(size_t q) { tableau_.apply_h(q); }
void StabilizerTN::s(size_t q) { tableau_.apply_s(q); }
void StabilizerTN::sdg(size_t q) { tableau_.apply_sdg(q); }
void StabilizerTN::x(size_t q) { tableau_.apply_x(q); }
void StabilizerTN::y(size_t q) { tableau_.apply_y(q); }
void StabilizerTN::z(size_t q) { tableau_.apply_z(q); }
void StabilizerTN::cx(size_t control, size_t target) { tableau_.apply_cnot(control, target); }

void StabilizerTN::cz(size_t a, size_t b) {
  tableau_.apply_h(b);
  tableau_.apply_cnot(a, b);
  tableau_.apply_h(b);
}

void StabilizerTN::swap_qubits(size_t a, size_t b) {
  tableau_.apply_cnot(a, b);
  tableau_.apply_cnot(b, a);
  tableau_.apply_cnot(a, b);
}

void StabilizerTN::apply_plan(const RotationPlan& plan) {
  for (const MpsOp& op : compile_plan(plan)) nu_.apply_op(op, tp_);
}

void StabilizerTN::apply_rotation(Axis axis, size_t q, double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("apply_rotation: angle must be finite");
  if (q >= num_qubits()) throw std::out_of_range("apply_rotation: qubit out of range");

  if (opts_.snap_clifford_angles) {
    double steps = theta / (M_PI / 2);
    double rounded = std::round(steps);
    if (std::abs(theta - rounded * (M_PI / 2)) < opts_.snap_tol) {
      // rz(k pi/2) == S^k up to global phase; X and Y axes conjugate through
      // H and S (Y = S H Z H S^dag).
      int k = int(std::llround(rounded)) % 4;
      if (k < 0) k += 4;
      if (axis == Axis::X) tableau_.apply_h(q);
      if (axis == Axis::Y) {
        tableau_.apply_sdg(q);
        tableau_.apply_h(q);
      }
      for (int i = 0; i < k; ++i) tableau_.apply_s(q);
      if (axis == Axis::X) tableau_.apply_h(q);
      if (axis == Axis::Y) {
        tableau_.apply_h(q);
        tableau_.apply_s(q);
      }
      return;
    }
  }
  apply_plan(plan_rotation(tableau_, PauliString::single(num_qubits(), q, axis), theta));
}

double StabilizerTN::expectation(const PauliString& p) const {
  if (!p.is_hermitian()) throw std::invalid_argument("expectation: observable must be Hermitian");
  DecomposedPauli dec = decompose_pauli(tableau_, p);
  std::complex<double> v = dec.alpha() * nu_.expect_pauli(dec.dbits, dec.sbits);
  return checked_real(v, "expectation");
}

MeasurementRecord StabilizerTN::measure(const PauliString& p, std::optional<int> forced) {
  if (!p.is_hermitian()) throw std::invalid_argument("measure: observable must be Hermitian");
  if (p.is_identity()) throw std::invalid_argument("measure: identity observable");

  DecomposedPauli dec = decompose_pauli(tableau_, p);
  double e = std::clamp(checked_real(dec.alpha() * nu_.expect_pauli(dec.dbits, dec.sbits), "measure"), -1.0, 1.0);
  double p_plus = (1.0 + e) / 2.0;

  int m;
  if (forced) {
    if (*forced != 1 && *forced != -1) throw std::invalid_argument("measure: forced outcome must be +1 or -1");
    m = *forced;
    double prob = m == 1 ? p_plus : 1.0 - p_plus;
    if (prob < kImpossibleProb) throw std::runtime_error("measure: forced outcome has vanishing probability");
  } else {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    m = unif(rng_) < p_plus ? 1 : -1;
  }

  MeasurementRecord rec{p, m, m == 1 ? p_plus : 1.0 - p_plus, e};

  // A deterministic outcome leaves the state untouched: (I + mO)/2 acts as
  // the identity on it.
  if (std::abs(e) >= 1.0 - kDeterministicTol && m == (e >= 0 ? 1 : -1)) return rec;

  RotationPlan plan = plan_measurement(tableau_, dec, m);
  apply_plan(plan);
  if (dec.dbits.any()) {
    nu_.apply_1q(plan.pivot, gates::proj0());
    tableau_.project_basis(dec, plan.pivot, m);
  }
  nu_.normalize();
  return rec;
}

MeasurementRecord StabilizerTN::measure_z(size_t q, std::optional<int> forced) {
  return measure(PauliString::single(num_qubits(), q, Axis::Z), forced);
}

Eigen::VectorXcd StabilizerTN::reconstruct_dense() const {
  const size_t n = num_qubits();
  if (n > 12) throw std::length_error("reconstruct_dense: capacity exceeded (n > 12)");
  Eigen::VectorXcd psi_s = oracle::stabilizer_state(tableau_);
  Eigen::VectorXcd coeffs = nu_.to_dense();

  // Walk the basis indices in Gray-code order so each step toggles exactly
  // one destabilizer factor (they commute and square to +I).
  oracle::DenseState basis_vec;
  basis_vec.n = n;
  basis_vec.amps = psi_s;
  Eigen::VectorXcd out = coeffs[0] * basis_vec.amps;
  const size_t dim = size_t{1} << n;
  for (size_t i = 1; i < dim; ++i) {
    size_t toggled = std::countr_zero(i);
    oracle::apply_pauli(basis_vec, tableau_.destabilizer(toggled));
    size_t gray = i ^ (i >> 1);
    out += coeffs[gray] * basis_vec.amps;
  }
  double nrm = out.norm();
  if (nrm < 1e-12) throw std::logic_error("reconstruct_dense: assembled state has vanishing norm");
  return out / nrm;
}

size_t StabilizerTN::pseudo_stabilizer_rank(double tol) const { return nu_.count_nonzero(tol); }

uint64_t mix_seed(uint64_t seed, uint64_t index) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ChiExperimentSummary chi_experiment(size_t n, size_t circuits, uint64_t seed,
                                    std::optional<size_t> tgate_qubit) {
  if (n < 2) throw std::invalid_argument("chi_experiment: need at least 2 qubits");
  if (tgate_qubit && *tgate_qubit >= n) throw std::out_of_range("chi_experiment: T-gate qubit out of range");

  ChiExperimentSummary summary;
  summary.n = n;
  summary.samples.resize(circuits);
  parallel_for(circuits, [&](size_t c) {
    uint64_t s = mix_seed(seed, c);
    std::mt19937_64 rng(s);
    Tableau basis = random_clifford(n, rng);
    size_t q = tgate_qubit ? *tgate_qubit : std::uniform_int_distribution<size_t>(0, n - 1)(rng);
    StabilizerTN st(std::move(basis), s);
    st.reset_peak_bond();
    st.rz(q, M_PI / 4);
    summary.samples[c] = std::log2(double(st.peak_bond()));
  });

  for (double v : summary.samples) {
    summary.mean += v;
    summary.max = std::max(summary.max, v);
    summary.histogram[v]++;
  }
  if (circuits > 0) summary.mean /= double(circuits);
  return summary;
}

RunReport run_circuit(const Circuit& circuit, uint64_t seed, TruncationPolicy tp,
                      bool want_pseudo_rank, EngineOptions opts) {
  auto start = std::chrono::steady_clock::now();
  Circuit compiled = compile_circuit(circuit);
  StabilizerTN st(compiled.n_qubits, seed, tp, opts);

  RunReport report;
  report.n = compiled.n_qubits;
  report.seed = seed;
  for (const Instruction& ins : compiled.instructions) {
    st.reset_peak_bond();
    switch (ins.kind) {
      case GateKind::H: st.h(ins.a); break;
      case GateKind::S: st.s(ins.a); break;
      case GateKind::Sdg: st.sdg(ins.a); break;
      case GateKind::X: st.x(ins.a); break;
      case GateKind::Y: st.y(ins.a); break;
      case GateKind::Z: st.z(ins.a); break;
      case GateKind::CX: st.cx(ins.a, ins.b); break;
      case GateKind::CZ: st.cz(ins.a, ins.b); break;
      case GateKind::Swap: st.swap_qubits(ins.a, ins.b); break;
      case GateKind::RX: st.rx(ins.a, ins.angle); break;
      case GateKind::RY: st.ry(ins.a, ins.angle); break;
      case GateKind::RZ: st.rz(ins.a, ins.angle); break;
      case GateKind::Measure: report.records.push_back(st.measure_z(ins.a)); break;
      case GateKind::Expect: {
        PauliString p = PauliString::from_word(ins.pauli_word);
        report.expectations.push_back({ins.pauli_word, st.expectation(p)});
        break;
      }
      case GateKind::T:
      case GateKind::Tdg:
        throw std::logic_error("run_circuit: uncompiled instruction survived compile_circuit");
    }
    report.chi_trace.push_back(st.peak_bond());
  }
  report.max_chi = 1;
  for (size_t chi : report.chi_trace) report.max_chi = std::max(report.max_chi, chi);
  if (want_pseudo_rank) report.pseudo_rank = st.pseudo_stabilizer_rank();
  report.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string report_to_json(const RunReport& report) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : report.records) {
    records.push_back({{"observable", r.observable.str()},
                       {"outcome", r.outcome},
                       {"probability", r.probability},
                       {"expectation_before", r.expectation_before}});
  }
  nlohmann::json expectations = nlohmann::json::array();
  for (const auto& e : report.expectations) {
    expectations.push_back({{"observable", e.pauli_word}, {"value", e.value}});
  }
  nlohmann::json j{{"n", report.n},
                   {"seed", report.seed},
                   {"records", std::move(records)},
                   {"chi_trace", report.chi_trace},
                   {"max_chi", report.max_chi},
                   {"expectations", std::move(expectations)},
                   {"wall_time_ms", report.wall_time_ms}};
  if (report.pseudo_rank) j["pseudo_rank"] = *report.pseudo_rank;
  return j.dump(2);
}

}  // namespace stabtn
