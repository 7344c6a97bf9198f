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

#include "qcrot/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "qcrot/error.hpp"

namespace qcrot {

namespace {

Matrix hadamard_matrix() {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix m(2, 2);
  m << r, r, r, -r;
  return m;
}

Matrix x_matrix() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix ry_matrix(double turns) {
  const double c = std::cos(kTwoPi * turns);
  const double s = std::sin(kTwoPi * turns);
  Matrix m(2, 2);
  m << c, -s, s, c;
  return m;
}

std::string format_radians(double radians) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", radians);
  return buf;
}

}  // namespace

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::kH:
      return "H";
    case GateKind::kX:
      return "X";
    case GateKind::kRz:
      return "RZ";
    case GateKind::kRy:
      return "RY";
    case GateKind::kCnot:
      return "CNOT";
    case GateKind::kToffoli:
      return "TOFFOLI";
    case GateKind::kCrz:
      return "CRZ";
    case GateKind::kCphase:
      return "CPHASE";
    case GateKind::kSwap:
      return "SWAP";
    case GateKind::kCry:
      return "CRY";
    case GateKind::kDiagonal:
      return "DIAGONAL";
    case GateKind::kOpaqueUnitary:
      return "OPAQUE_UNITARY";
  }
  return "?";
}

bool is_composite(GateKind kind) {
  return kind == GateKind::kDiagonal || kind == GateKind::kOpaqueUnitary;
}

double canonical_turns(double turns) {
  if (!std::isfinite(turns)) throw DomainError("angle must be finite");
  double r = std::remainder(turns, 1.0);  // [-0.5, 0.5], exact
  if (r == -0.5) r = 0.5;
  if (r == 0.0) r = 0.0;  // drop the sign of zero
  return r;
}

// ---------------------------------------------------------------------------
// Gate

Gate Gate::h(std::size_t q) { return Gate(GateKind::kH, {q}, 0); }
Gate Gate::x(std::size_t q) { return Gate(GateKind::kX, {q}, 0); }

Gate Gate::rz(std::size_t q, double turns) {
  Gate g(GateKind::kRz, {q}, 0);
  g.angle_ = canonical_turns(turns);
  return g;
}

Gate Gate::ry(std::size_t q, double turns) {
  Gate g(GateKind::kRy, {q}, 0);
  g.angle_ = canonical_turns(turns);
  return g;
}

Gate Gate::cnot(std::size_t control, std::size_t target) {
  return Gate(GateKind::kCnot, {control, target}, 1);
}

Gate Gate::toffoli(std::size_t c0, std::size_t c1, std::size_t target) {
  return Gate(GateKind::kToffoli, {c0, c1, target}, 2);
}

Gate Gate::crz(std::size_t control, std::size_t target, double turns) {
  Gate g(GateKind::kCrz, {control, target}, 1);
  g.angle_ = canonical_turns(turns);
  return g;
}

Gate Gate::cphase(std::size_t control, std::size_t target, double turns) {
  Gate g(GateKind::kCphase, {control, target}, 1);
  g.angle_ = canonical_turns(turns);
  return g;
}

Gate Gate::swap(std::size_t a, std::size_t b) {
  return Gate(GateKind::kSwap, {a, b}, 0);
}

Gate Gate::cry(std::size_t control, std::size_t target, double turns) {
  Gate g(GateKind::kCry, {control, target}, 1);
  g.angle_ = canonical_turns(turns);
  return g;
}

Gate Gate::diagonal(std::vector<std::size_t> targets, std::vector<double> phases,
                    std::vector<std::size_t> controls) {
  if (targets.empty() || phases.size() != (std::size_t{1} << targets.size())) {
    throw ValidationError("DIAGONAL needs 2^(target count) phases");
  }
  const std::size_t nc = controls.size();
  std::vector<std::size_t> qubits = std::move(controls);
  qubits.insert(qubits.end(), targets.begin(), targets.end());
  Gate g(GateKind::kDiagonal, std::move(qubits), nc);
  for (double& p : phases) p = canonical_turns(p);
  g.phases_ = std::move(phases);
  return g;
}

Gate Gate::opaque(std::vector<std::size_t> controls,
                  std::vector<std::size_t> targets, Matrix matrix) {
  if (targets.empty() ||
      matrix.rows() != static_cast<Eigen::Index>(std::size_t{1} << targets.size())) {
    throw ValidationError("OPAQUE_UNITARY matrix must be 2^(target count) square");
  }
  require_unitary(matrix);
  const std::size_t nc = controls.size();
  std::vector<std::size_t> qubits = std::move(controls);
  qubits.insert(qubits.end(), targets.begin(), targets.end());
  Gate g(GateKind::kOpaqueUnitary, std::move(qubits), nc);
  g.matrix_ = std::move(matrix);
  return g;
}

std::span<const std::size_t> Gate::controls() const {
  return std::span<const std::size_t>(qubits_).first(num_controls_);
}

std::span<const std::size_t> Gate::targets() const {
  return std::span<const std::size_t>(qubits_).subspan(num_controls_);
}

Gate Gate::adjoint() const {
  Gate g = *this;
  switch (kind_) {
    case GateKind::kRz:
    case GateKind::kRy:
    case GateKind::kCrz:
    case GateKind::kCphase:
    case GateKind::kCry:
      g.angle_ = canonical_turns(-angle_);
      break;
    case GateKind::kDiagonal:
      for (double& p : g.phases_) p = canonical_turns(-p);
      break;
    case GateKind::kOpaqueUnitary:
      g.matrix_ = matrix_.adjoint();
      break;
    default:
      break;  // H, X, CNOT, TOFFOLI, SWAP are self-inverse
  }
  return g;
}

Gate Gate::remapped(std::span<const std::size_t> mapping) const {
  Gate g = *this;
  for (std::size_t& q : g.qubits_) {
    if (q >= mapping.size()) throw DomainError("qubit mapping too short");
    q = mapping[q];
  }
  return g;
}

bool Gate::operator==(const Gate& other) const {
  if (kind_ != other.kind_ || qubits_ != other.qubits_ ||
      num_controls_ != other.num_controls_ || angle_ != other.angle_ ||
      phases_ != other.phases_) {
    return false;
  }
  if (kind_ != GateKind::kOpaqueUnitary) return true;
  return matrix_.rows() == other.matrix_.rows() && matrix_ == other.matrix_;
}

// ---------------------------------------------------------------------------
// Circuit

Circuit& Circuit::add(Gate gate) {
  const auto qs = gate.qubits();
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (qs[i] >= num_qubits_) {
      std::ostringstream msg;
      msg << gate_name(gate.kind()) << " operand " << qs[i]
          << " out of range for " << num_qubits_ << "-qubit circuit";
      throw DomainError(msg.str());
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (qs[i] == qs[j]) {
        throw DomainError(std::string(gate_name(gate.kind())) +
                          " has repeated operand " + std::to_string(qs[i]));
      }
    }
  }
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits() > num_qubits_) {
    throw DomainError("appended circuit is wider than the target circuit");
  }
  for (const Gate& g : other.gates()) add(g);
  return *this;
}

Circuit& Circuit::append(const Circuit& other,
                         std::span<const std::size_t> mapping) {
  if (mapping.size() != other.num_qubits()) {
    throw DomainError("qubit mapping size must equal the appended width");
  }
  for (const Gate& g : other.gates()) add(g.remapped(mapping));
  return *this;
}

void Circuit::set_spans(std::vector<QubitSpan> spans) {
  validate_spans(spans, num_qubits_);
  spans_ = std::move(spans);
}

const QubitSpan& Circuit::span(RegisterLabel label) const {
  for (const QubitSpan& s : spans_) {
    if (s.label == label) return s;
  }
  throw DomainError("circuit has no " + std::string(to_string(label)) + " span");
}

// ---------------------------------------------------------------------------
// Simulation and analysis

void simulate_in_place(const Circuit& circuit, StateVector& state) {
  if (state.num_qubits() != circuit.num_qubits()) {
    throw DomainError("state has " + std::to_string(state.num_qubits()) +
                      " qubits but the circuit has " +
                      std::to_string(circuit.num_qubits()));
  }
  static const Matrix kH = hadamard_matrix();
  static const Matrix kX = x_matrix();
  for (const Gate& g : circuit.gates()) {
    const auto c = g.controls();
    const auto t = g.targets();
    switch (g.kind()) {
      case GateKind::kH:
        state.apply_controlled_unitary(kH, c, t);
        break;
      case GateKind::kX:
      case GateKind::kCnot:
      case GateKind::kToffoli:
        state.apply_controlled_unitary(kX, c, t);
        break;
      case GateKind::kRz:
      case GateKind::kCrz:
      case GateKind::kCphase: {
        const double phases[2] = {0.0, g.angle()};
        state.apply_diagonal_phases(phases, t, c);
        break;
      }
      case GateKind::kRy:
      case GateKind::kCry:
        state.apply_controlled_unitary(ry_matrix(g.angle()), c, t);
        break;
      case GateKind::kSwap:
        state.apply_swap(t[0], t[1]);
        break;
      case GateKind::kDiagonal:
        state.apply_diagonal_phases(g.phases(), t, c);
        break;
      case GateKind::kOpaqueUnitary:
        state.apply_controlled_unitary(g.matrix(), c, t);
        break;
    }
  }
}

StateVector simulate(const Circuit& circuit, StateVector input) {
  simulate_in_place(circuit, input);
  return input;
}

Circuit inverse(const Circuit& circuit) {
  Circuit out(circuit.num_qubits());
  const auto& gates = circuit.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) out.add(it->adjoint());
  if (!circuit.spans().empty()) out.set_spans(circuit.spans());
  return out;
}

std::size_t GateCensus::count(std::string_view name) const {
  const auto it = counts.find(std::string(name));
  return it == counts.end() ? 0 : it->second;
}

std::size_t GateCensus::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0},
                         [](std::size_t acc, const auto& kv) { return acc + kv.second; });
}

GateCensus gate_census(const Circuit& circuit) {
  GateCensus census;
  for (const Gate& g : circuit.gates()) {
    const std::string key =
        is_composite(g.kind()) ? "composite" : std::string(gate_name(g.kind()));
    ++census.counts[key];
  }
  return census;
}

std::string export_qasm(const Circuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n"
      << "include \"qelib1.inc\";\n"
      << "qreg q[" << circuit.num_qubits() << "];\n";
  const auto q = [](std::size_t i) { return "q[" + std::to_string(i) + "]"; };
  const auto& gates = circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    const auto ops = g.qubits();
    // u1/cu1/cp take the phase in radians; ry/cry follow qelib1's half-angle
    // convention, so a full RY(t) turn fraction becomes 4 pi t.
    const std::string phase = format_radians(kTwoPi * g.angle());
    const std::string rot = format_radians(2.0 * kTwoPi * g.angle());
    switch (g.kind()) {
      case GateKind::kH:
        out << "h " << q(ops[0]) << ";\n";
        break;
      case GateKind::kX:
        out << "x " << q(ops[0]) << ";\n";
        break;
      case GateKind::kRz:
        out << "u1(" << phase << ") " << q(ops[0]) << ";\n";
        break;
      case GateKind::kRy:
        out << "ry(" << rot << ") " << q(ops[0]) << ";\n";
        break;
      case GateKind::kCnot:
        out << "cx " << q(ops[0]) << "," << q(ops[1]) << ";\n";
        break;
      case GateKind::kToffoli:
        out << "ccx " << q(ops[0]) << "," << q(ops[1]) << "," << q(ops[2]) << ";\n";
        break;
      case GateKind::kCrz:
        out << "cu1(" << phase << ") " << q(ops[0]) << "," << q(ops[1]) << ";\n";
        break;
      case GateKind::kCphase:
        out << "cp(" << phase << ") " << q(ops[0]) << "," << q(ops[1]) << ";\n";
        break;
      case GateKind::kSwap:
        out << "swap " << q(ops[0]) << "," << q(ops[1]) << ";\n";
        break;
      case GateKind::kCry:
        out << "cry(" << rot << ") " << q(ops[0]) << "," << q(ops[1]) << ";\n";
        break;
      case GateKind::kDiagonal:
      case GateKind::kOpaqueUnitary:
        throw ExportError("gate " + std::to_string(i) + " (" +
                          std::string(gate_name(g.kind())) +
                          ") is composite and has no OpenQASM 2.0 form");
    }
  }
  return out.str();
}

Matrix circuit_unitary(const Circuit& circuit) {
  if (circuit.num_qubits() > 14) {
    throw DomainError("dense reconstruction is limited to 14 qubits");
  }
  const std::size_t dim = std::size_t{1} << circuit.num_qubits();
  Matrix u(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const StateVector col = simulate(circuit, StateVector::basis(circuit.num_qubits(), j));
    const auto amps = col.amplitudes();
    for (std::size_t i = 0; i < dim; ++i) u(i, j) = amps[i];
  }
  return u;
}

}  // namespace qcrot
