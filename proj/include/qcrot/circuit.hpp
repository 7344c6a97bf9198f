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

/**
 * @file
 * Gate-list circuit IR.
 *
 * All angles are stored in turns (fractions of a full turn) and are
 * canonicalized to (-0.5, 0.5] when a gate is built. Rotation conventions:
 *
 *   RZ(t)  = diag(1, e^{2 pi i t})                 (a phase gate)
 *   RY(t)  = [[cos 2 pi t, -sin 2 pi t],
 *             [sin 2 pi t,  cos 2 pi t]]           (no half angle)
 *   CRZ(t) = controlled RZ(t), CPHASE(t) = controlled RZ(t),
 *   CRY(t) = controlled RY(t).
 *
 * CRZ and CPHASE are the same operator; they are kept apart so that census
 * reports can tell synthesized diagonals from Fourier-transform phases.
 * Operands are listed controls first, then targets.
 */

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcrot/statevector.hpp"

namespace qcrot {

enum class GateKind {
  kH,
  kX,
  kRz,
  kRy,
  kCnot,
  kToffoli,
  kCrz,
  kCphase,
  kSwap,
  kCry,
  kDiagonal,
  kOpaqueUnitary,
};

std::string_view gate_name(GateKind kind);
bool is_composite(GateKind kind);

/// Maps an angle in turns onto (-0.5, 0.5]. Exact for finite input.
double canonical_turns(double turns);

class Gate {
 public:
  static Gate h(std::size_t q);
  static Gate x(std::size_t q);
  static Gate rz(std::size_t q, double turns);
  static Gate ry(std::size_t q, double turns);
  static Gate cnot(std::size_t control, std::size_t target);
  static Gate toffoli(std::size_t c0, std::size_t c1, std::size_t target);
  static Gate crz(std::size_t control, std::size_t target, double turns);
  static Gate cphase(std::size_t control, std::size_t target, double turns);
  static Gate swap(std::size_t a, std::size_t b);
  static Gate cry(std::size_t control, std::size_t target, double turns);
  /// diag(e^{2 pi i phases[k]}) on `targets`, optionally controlled.
  static Gate diagonal(std::vector<std::size_t> targets,
                       std::vector<double> phases,
                       std::vector<std::size_t> controls = {});
  static Gate opaque(std::vector<std::size_t> controls,
                     std::vector<std::size_t> targets, Matrix matrix);

  GateKind kind() const { return kind_; }
  std::span<const std::size_t> qubits() const { return qubits_; }
  std::span<const std::size_t> controls() const;
  std::span<const std::size_t> targets() const;
  std::size_t num_controls() const { return num_controls_; }
  double angle() const { return angle_; }
  const std::vector<double>& phases() const { return phases_; }
  const Matrix& matrix() const { return matrix_; }

  Gate adjoint() const;
  /// Same gate with qubit q relabelled to mapping[q].
  Gate remapped(std::span<const std::size_t> mapping) const;

  bool operator==(const Gate& other) const;

 private:
  Gate(GateKind kind, std::vector<std::size_t> qubits, std::size_t num_controls)
      : kind_(kind), qubits_(std::move(qubits)), num_controls_(num_controls) {}

  GateKind kind_;
  std::vector<std::size_t> qubits_;
  std::size_t num_controls_ = 0;
  double angle_ = 0.0;
  std::vector<double> phases_;
  Matrix matrix_;
};

class Circuit {
 public:
  explicit Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}

  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Appends a gate; throws DomainError if an operand is out of range.
  Circuit& add(Gate gate);
  /// Appends every gate of `other`, which must not be wider than this.
  Circuit& append(const Circuit& other);
  /// Appends `other` with its qubit i placed on mapping[i].
  Circuit& append(const Circuit& other, std::span<const std::size_t> mapping);

  const std::vector<QubitSpan>& spans() const { return spans_; }
  /// Throws ValidationError unless the spans partition the qubits.
  void set_spans(std::vector<QubitSpan> spans);
  /// First span with the label; throws DomainError if absent.
  const QubitSpan& span(RegisterLabel label) const;

 private:
  std::size_t num_qubits_;
  std::vector<Gate> gates_;
  std::vector<QubitSpan> spans_;
};

/// Applies the gates of `circuit` to `state` in list order.
void simulate_in_place(const Circuit& circuit, StateVector& state);
StateVector simulate(const Circuit& circuit, StateVector input);

/// Reversed gate list with every gate replaced by its adjoint.
Circuit inverse(const Circuit& circuit);

/// Gate counts keyed by gate name; DIAGONAL and OPAQUE_UNITARY are pooled
/// under "composite".
struct GateCensus {
  std::map<std::string, std::size_t> counts;

  std::size_t count(std::string_view name) const;
  std::size_t total() const;
  bool operator==(const GateCensus&) const = default;
};

GateCensus gate_census(const Circuit& circuit);

/// OpenQASM 2.0 text. Throws ExportError naming the first composite gate.
std::string export_qasm(const Circuit& circuit);

/// Dense unitary of the circuit, column j = simulate(|j>).
Matrix circuit_unitary(const Circuit& circuit);

}  // namespace qcrot
