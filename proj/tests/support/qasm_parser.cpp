// Copyright 2026 The qcrot Authors
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

#include "qasm_parser.hpp"

#include <cmath>
#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace qcrot::testing {

namespace {

struct Arity {
  std::size_t params;
  std::size_t qubits;
};

const std::map<std::string, Arity>& gate_table() {
  static const std::map<std::string, Arity> table{
      {"h", {0, 1}},   {"x", {0, 1}},   {"u1", {1, 1}},   {"ry", {1, 1}},   {"cx", {0, 2}},
      {"ccx", {0, 3}}, {"cu1", {1, 2}}, {"cp", {1, 2}},   {"swap", {0, 2}}, {"cry", {1, 2}},
  };
  return table;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

QasmProgram parse_qasm(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  QasmProgram prog;
  bool header = false, include = false, qreg = false;
  static const std::regex qreg_re(R"(qreg q\[(\d+)\];)");
  static const std::regex gate_re(R"(([a-z0-9]+)(\(([^)]*)\))? (.*);)");
  static const std::regex operand_re(R"(q\[(\d+)\])");
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (line == "OPENQASM 2.0;") {
      header = true;
      continue;
    }
    if (line == "include \"qelib1.inc\";") {
      include = true;
      continue;
    }
    std::smatch m;
    if (std::regex_match(line, m, qreg_re)) {
      prog.num_qubits = std::stoul(m[1]);
      qreg = true;
      continue;
    }
    if (!header || !include || !qreg) throw std::runtime_error("gate before header: " + line);
    if (!std::regex_match(line, m, gate_re)) throw std::runtime_error("bad line: " + line);
    QasmOp op;
    op.name = m[1];
    const auto it = gate_table().find(op.name);
    if (it == gate_table().end()) throw std::runtime_error("unknown gate: " + op.name);
    if (m[2].matched) {
      std::size_t used = 0;
      const std::string p = m[3];
      op.params.push_back(std::stod(p, &used));
      if (used != p.size()) throw std::runtime_error("bad parameter: " + p);
    }
    std::string operands = m[4];
    std::stringstream ops(operands);
    std::string item;
    while (std::getline(ops, item, ',')) {
      std::smatch om;
      if (!std::regex_match(item, om, operand_re)) throw std::runtime_error("bad operand: " + item);
      const std::size_t q = std::stoul(om[1]);
      if (q >= prog.num_qubits) throw std::runtime_error("operand out of range");
      op.qubits.push_back(q);
    }
    if (op.params.size() != it->second.params || op.qubits.size() != it->second.qubits) {
      throw std::runtime_error("wrong arity: " + line);
    }
    prog.ops.push_back(std::move(op));
  }
  if (!header || !include || !qreg) throw std::runtime_error("missing header");
  return prog;
}

Matrix qasm_unitary(const QasmProgram& program) {
  const std::size_t n = program.num_qubits;
  const std::size_t dim = std::size_t{1} << n;
  const double r = 1.0 / std::sqrt(2.0);
  const Matrix h = mat2(r, r, r, -r);
  const Matrix x = mat2(0, 1, 1, 0);
  const auto phase = [](double l) { return mat2(1, 0, 0, std::polar(1.0, l)); };
  const auto ry = [](double t) {
    return mat2(std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2));
  };
  Matrix u(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    StateVector s = StateVector::basis(n, col);
    for (const QasmOp& op : program.ops) {
      const auto& q = op.qubits;
      const std::vector<std::size_t> none;
      if (op.name == "h") s.apply_controlled_unitary(h, none, std::vector{q[0]});
      else if (op.name == "x") s.apply_controlled_unitary(x, none, std::vector{q[0]});
      else if (op.name == "u1") s.apply_controlled_unitary(phase(op.params[0]), none, std::vector{q[0]});
      else if (op.name == "ry") s.apply_controlled_unitary(ry(op.params[0]), none, std::vector{q[0]});
      else if (op.name == "cx") s.apply_controlled_unitary(x, std::vector{q[0]}, std::vector{q[1]});
      else if (op.name == "ccx") s.apply_controlled_unitary(x, std::vector{q[0], q[1]}, std::vector{q[2]});
      else if (op.name == "cu1" || op.name == "cp")
        s.apply_controlled_unitary(phase(op.params[0]), std::vector{q[0]}, std::vector{q[1]});
      else if (op.name == "cry")
        s.apply_controlled_unitary(ry(op.params[0]), std::vector{q[0]}, std::vector{q[1]});
      else if (op.name == "swap") {
        // Three CNOTs, not the simulator's swap primitive.
        s.apply_controlled_unitary(x, std::vector{q[0]}, std::vector{q[1]});
        s.apply_controlled_unitary(x, std::vector{q[1]}, std::vector{q[0]});
        s.apply_controlled_unitary(x, std::vector{q[0]}, std::vector{q[1]});
      }
    }
    const auto a = s.amplitudes();
    for (std::size_t row = 0; row < dim; ++row) u(row, col) = a[row];
  }
  return u;
}

}  // namespace qcrot::testing
