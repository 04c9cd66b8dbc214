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

#include "stabtn/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>

namespace stabtn {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

size_t parse_qubit(const std::string& tok, size_t n, size_t line) {
  char* end = nullptr;
  long v = std::strtol(tok.c_str(), &end, 10);
  if (end == tok.c_str() || *end != '\0' || v < 0) throw ParseError(line, "malformed qubit operand '" + tok + "'");
  if (size_t(v) >= n) throw ParseError(line, "operand out of range: qubit " + tok + " (circuit has " + std::to_string(n) + ")");
  return size_t(v);
}

double parse_angle(const std::string& tok, size_t line) {
  std::string_view s = tok;
  double sign = 1.0;
  if (!s.empty() && s.front() == '-') {
    sign = -1.0;
    s.remove_prefix(1);
  }
  if (s.rfind("pi/", 0) == 0) {
    std::string denom(s.substr(3));
    char* end = nullptr;
    long k = std::strtol(denom.c_str(), &end, 10);
    if (end == denom.c_str() || *end != '\0' || k == 0) throw ParseError(line, "malformed angle '" + tok + "'");
    return sign * M_PI / double(k);
  }
  char* end = nullptr;
  double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0' || !std::isfinite(v)) throw ParseError(line, "malformed angle '" + tok + "'");
  return sign * v;
}

const std::map<std::string, GateKind, std::less<>> kOneQubit = {
    {"h", GateKind::H}, {"s", GateKind::S},     {"sdg", GateKind::Sdg}, {"x", GateKind::X},
    {"y", GateKind::Y}, {"z", GateKind::Z},     {"t", GateKind::T},    {"tdg", GateKind::Tdg},
};

const std::map<std::string, GateKind, std::less<>> kTwoQubit = {
    {"cx", GateKind::CX}, {"cz", GateKind::CZ}, {"swap", GateKind::Swap}};

const std::map<std::string, GateKind, std::less<>> kRotation = {
    {"rx", GateKind::RX}, {"ry", GateKind::RY}, {"rz", GateKind::RZ}};

std::string gate_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::CX: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::Swap: return "swap";
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::Measure: return "measure";
    case GateKind::Expect: return "expect";
  }
  return "?";
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  Circuit c;
  bool have_header = false;
  size_t line_no = 0;
  std::istringstream stream{std::string(text)};
  std::string raw;
  while (std::getline(stream, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto toks = tokenize(raw);
    if (toks.empty()) continue;

    if (!have_header) {
      if (toks[0] != "qubits") throw ParseError(line_no, "missing 'qubits <n>' header");
      if (toks.size() != 2) throw ParseError(line_no, "header must be 'qubits <n>'");
      char* end = nullptr;
      long n = std::strtol(toks[1].c_str(), &end, 10);
      if (end == toks[1].c_str() || *end != '\0' || n < 1) throw ParseError(line_no, "malformed qubit count '" + toks[1] + "'");
      c.n_qubits = size_t(n);
      have_header = true;
      continue;
    }

    Instruction ins;
    ins.line = line_no;
    const std::string& mnemonic = toks[0];
    if (auto it = kOneQubit.find(mnemonic); it != kOneQubit.end()) {
      if (toks.size() != 2) throw ParseError(line_no, "'" + mnemonic + "' expects one qubit operand");
      ins.kind = it->second;
      ins.a = parse_qubit(toks[1], c.n_qubits, line_no);
    } else if (auto it2 = kTwoQubit.find(mnemonic); it2 != kTwoQubit.end()) {
      if (toks.size() != 3) throw ParseError(line_no, "'" + mnemonic + "' expects two qubit operands");
      ins.kind = it2->second;
      ins.a = parse_qubit(toks[1], c.n_qubits, line_no);
      ins.b = parse_qubit(toks[2], c.n_qubits, line_no);
      if (ins.a == ins.b) throw ParseError(line_no, "'" + mnemonic + "' operands must be distinct");
    } else if (auto it3 = kRotation.find(mnemonic); it3 != kRotation.end()) {
      if (toks.size() != 3) throw ParseError(line_no, "'" + mnemonic + "' expects an angle and a qubit");
      ins.kind = it3->second;
      ins.angle = parse_angle(toks[1], line_no);
      ins.a = parse_qubit(toks[2], c.n_qubits, line_no);
    } else if (mnemonic == "measure") {
      if (toks.size() != 2) throw ParseError(line_no, "'measure' expects one qubit operand");
      ins.kind = GateKind::Measure;
      ins.a = parse_qubit(toks[1], c.n_qubits, line_no);
    } else if (mnemonic == "expect") {
      if (toks.size() != 2) throw ParseError(line_no, "'expect' expects one Pauli word");
      if (toks[1].size() != c.n_qubits) {
        throw ParseError(line_no, "Pauli word length " + std::to_string(toks[1].size()) + " does not match qubit count " + std::to_string(c.n_qubits));
      }
      for (char ch : toks[1]) {
        if (ch != 'I' && ch != 'X' && ch != 'Y' && ch != 'Z') throw ParseError(line_no, std::string("invalid Pauli character '") + ch + "'");
      }
      ins.kind = GateKind::Expect;
      ins.pauli_word = toks[1];
    } else {
      throw ParseError(line_no, "unknown instruction '" + mnemonic + "'");
    }
    c.instructions.push_back(std::move(ins));
  }
  if (!have_header) throw ParseError(line_no ? line_no : 1, "missing 'qubits <n>' header");
  return c;
}

std::string to_text(const Circuit& c) {
  std::string out = "qubits " + std::to_string(c.n_qubits) + "\n";
  char buf[64];
  for (const auto& ins : c.instructions) {
    switch (ins.kind) {
      case GateKind::RX:
      case GateKind::RY:
      case GateKind::RZ:
        std::snprintf(buf, sizeof buf, "%.17g", ins.angle);
        out += gate_name(ins.kind) + " " + buf + " " + std::to_string(ins.a) + "\n";
        break;
      case GateKind::CX:
      case GateKind::CZ:
      case GateKind::Swap:
        out += gate_name(ins.kind) + " " + std::to_string(ins.a) + " " + std::to_string(ins.b) + "\n";
        break;
      case GateKind::Expect:
        out += "expect " + ins.pauli_word + "\n";
        break;
      default:
        out += gate_name(ins.kind) + " " + std::to_string(ins.a) + "\n";
        break;
    }
  }
  return out;
}

Circuit compile_circuit(const Circuit& c) {
  Circuit out;
  out.n_qubits = c.n_qubits;
  for (const auto& ins : c.instructions) {
    switch (ins.kind) {
      case GateKind::T:
        out.instructions.push_back({GateKind::RZ, ins.a, 0, M_PI / 4, "", ins.line});
        break;
      case GateKind::Tdg:
        out.instructions.push_back({GateKind::RZ, ins.a, 0, -M_PI / 4, "", ins.line});
        break;
      case GateKind::CZ:
        out.instructions.push_back({GateKind::H, ins.b, 0, 0, "", ins.line});
        out.instructions.push_back({GateKind::CX, ins.a, ins.b, 0, "", ins.line});
        out.instructions.push_back({GateKind::H, ins.b, 0, 0, "", ins.line});
        break;
      case GateKind::Swap:
        out.instructions.push_back({GateKind::CX, ins.a, ins.b, 0, "", ins.line});
        out.instructions.push_back({GateKind::CX, ins.b, ins.a, 0, "", ins.line});
        out.instructions.push_back({GateKind::CX, ins.a, ins.b, 0, "", ins.line});
        break;
      default:
        out.instructions.push_back(ins);
        break;
    }
  }
  return out;
}

}  // namespace stabtn
