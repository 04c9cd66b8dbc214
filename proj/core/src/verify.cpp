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

#include "stabtn/verify.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>
#include <stdexcept>

#include "stabtn/engine.hpp"
#include "stabtn/gates.hpp"
#include "stabtn/oracle.hpp"
#include "stabtn/parallel.hpp"

namespace stabtn {

namespace {

enum class StepKind { H, S, CNOT, RX, RY, RZ, MeasureZ };

}  // namespace

EquivalenceResult run_equivalence_suite(const EquivalenceOptions& options) {
  if (options.n_min < 2 || options.n_max < options.n_min || options.n_max > 12) {
    throw std::invalid_argument("run_equivalence_suite: need 2 <= n_min <= n_max <= 12");
  }

  EquivalenceResult result;
  result.circuits_run = options.circuits;
  std::mutex merge_mutex;

  parallel_for(options.circuits, [&](size_t ci) {
    const size_t n = options.n_min + ci % (options.n_max - options.n_min + 1);
    std::mt19937_64 gen(mix_seed(options.seed, ci));
    std::uniform_int_distribution<int> kind_dist(0, 6);
    std::uniform_int_distribution<size_t> qubit_dist(0, n - 1);
    std::uniform_real_distribution<double> angle_dist(0.0, 2 * M_PI);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    StabilizerTN st(n, mix_seed(options.seed ^ 0x517ab7a1, ci));
    oracle::DenseState dense = oracle::DenseState::zero(n);

    double min_fid = 1.0, max_norm_err = 0.0, max_prob_err = 0.0;
    size_t steps = 0;
    for (size_t step = 0; step < options.depth; ++step) {
      StepKind kind = StepKind(kind_dist(gen));
      size_t q = qubit_dist(gen);
      switch (kind) {
        case StepKind::H:
          st.h(q);
          oracle::apply_1q(dense, q, gates::h());
          break;
        case StepKind::S:
          st.s(q);
          oracle::apply_1q(dense, q, gates::s());
          break;
        case StepKind::CNOT: {
          size_t t = qubit_dist(gen);
          while (t == q) t = qubit_dist(gen);
          st.cx(q, t);
          oracle::apply_2q(dense, q, t, gates::cnot());
          break;
        }
        case StepKind::RX: {
          double a = angle_dist(gen);
          st.rx(q, a);
          oracle::apply_1q(dense, q, gates::rx(a));
          break;
        }
        case StepKind::RY: {
          double a = angle_dist(gen);
          st.ry(q, a);
          oracle::apply_1q(dense, q, gates::ry(a));
          break;
        }
        case StepKind::RZ: {
          double a = angle_dist(gen);
          st.rz(q, a);
          oracle::apply_1q(dense, q, gates::rz(a));
          break;
        }
        case StepKind::MeasureZ: {
          PauliString obs = PauliString::single(n, q, Axis::Z);
          // Synchronized forced outcome: one suite-level draw decides for
          // both the engine and the oracle.
          std::complex<double> oe = oracle::expectation(dense, obs);
          double p_plus = std::clamp((1.0 + oe.real()) / 2.0, 0.0, 1.0);
          int m;
          if (p_plus < 1e-9) {
            m = -1;
          } else if (p_plus > 1.0 - 1e-9) {
            m = 1;
          } else {
            m = unif(gen) < p_plus ? 1 : -1;
          }
          MeasurementRecord rec = st.measure(obs, m);
          auto mr = oracle::measure_pauli(dense, obs, m, gen);
          max_norm_err = std::max(max_norm_err, std::abs(st.nu().norm() - 1.0));
          max_prob_err = std::max(max_prob_err, std::abs(rec.probability - mr.probability));
          break;
        }
      }
      if (options.inject_bug && step == options.depth / 2) st.z(q);
      min_fid = std::min(min_fid, oracle::fidelity_up_to_phase(st.reconstruct_dense(), dense.amps));
      ++steps;
    }

    std::lock_guard<std::mutex> lock(merge_mutex);
    result.min_fidelity = std::min(result.min_fidelity, min_fid);
    result.max_norm_error = std::max(result.max_norm_error, max_norm_err);
    result.max_prob_error = std::max(result.max_prob_error, max_prob_err);
    result.steps_checked += steps;
  });

  return result;
}

}  // namespace stabtn
