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

#ifndef STABTN_CIRCUIT_HPP_
#define STABTN_CIRCUIT_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stabtn {

enum class GateKind { H, S, Sdg, X, Y, Z, T, Tdg, CX, CZ, Swap, RX, RY, RZ, Measure, Expect };

struct Instruction {
  GateKind kind;
  size_t a = 0;
  size_t b = 0;
  double angle = 0.0;
  std::string pauli_word;  // Expect only
  size_t line = 0;

  bool operator==(const Instruction& o) const = default;
};

struct Circuit {
  size_t n_qubits = 0;
  std::vector<Instruction> instructions;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  size_t line() const { return line_; }

 private:
  size_t line_;
};

/// Line-oriented circuit format. Header `qubits <int>`, comments from `#`,
/// then one instruction per line:
///   h q | s q | sdg q | x q | y q | z q | t q | tdg q
///   cx a b | cz a b | swap a b
///   rx <angle> q | ry <angle> q | rz <angle> q
///   measure q | expect <pauli-word>
/// Angles are decimal literals or (-)pi/<int>; pauli words use {I,X,Y,Z}.
Circuit parse_circuit(std::string_view text);

/// Canonical text form; parse(to_text(c)) reproduces c.
std::string to_text(const Circuit& c);

/// Lower named gates onto the core set: t/tdg become rz(+-pi/4), cz becomes
/// h;cx;h on the target, swap becomes three cx.
Circuit compile_circuit(const Circuit& c);

}  // namespace stabtn

#endif  // STABTN_CIRCUIT_HPP_
