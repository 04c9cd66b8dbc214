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

#ifndef STABTN_VERIFY_HPP_
#define STABTN_VERIFY_HPP_

#include <cstdint>
#include <cstddef>

namespace stabtn {

struct EquivalenceOptions {
  size_t circuits = 200;
  size_t depth = 30;
  size_t n_min = 2;
  size_t n_max = 8;
  uint64_t seed = 0;
  /// Test fixture: corrupt one engine step so the harness must report failure.
  bool inject_bug = false;
};

struct EquivalenceResult {
  double min_fidelity = 1.0;
  double max_norm_error = 0.0;  // | norm(nu) - 1 | after measurements
  double max_prob_error = 0.0;  // recorded probability vs oracle probability
  size_t circuits_run = 0;
  size_t steps_checked = 0;

  bool passed(double fidelity_floor = 1.0 - 1e-9) const { return min_fidelity >= fidelity_floor; }
};

/// Random mixed Clifford/rotation/measurement circuits, stepped in lockstep
/// with the dense oracle (measurement outcomes forced identically on both
/// sides); after every instruction the reconstructed state is compared
/// against the oracle state up to global phase.
EquivalenceResult run_equivalence_suite(const EquivalenceOptions& options);

}  // namespace stabtn

#endif  // STABTN_VERIFY_HPP_
