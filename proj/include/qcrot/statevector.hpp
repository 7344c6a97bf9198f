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
 * Dense statevector over a fixed number of qubits.
 *
 * Qubit ordering is little-endian everywhere in qcrot: qubit q carries
 * weight 2^q in the basis index. Multi-qubit operands follow the same
 * rule, so bit b of a matrix row index (or of a phase-table index) refers
 * to the b-th listed target qubit.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qcrot {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Per-gate tolerance used by norm and equivalence checks.
inline constexpr double kGateTolerance = 1e-12;
/// Tolerance on unitarity of user supplied matrices.
inline constexpr double kUnitaryTolerance = 1e-10;
/// Tolerance for whole-pipeline checks.
inline constexpr double kPipelineTolerance = 1e-9;
/// Below this weight a post-selection is reported as impossible.
inline constexpr double kPostSelectionFloor = 1e-12;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

enum class RegisterLabel { kAncilla, kRegA, kRegE, kRegB, kAux };

std::string_view to_string(RegisterLabel label);

/// A contiguous block of qubits with a role.
struct QubitSpan {
  RegisterLabel label = RegisterLabel::kAux;
  std::size_t offset = 0;
  std::size_t width = 0;

  std::size_t qubit(std::size_t i) const { return offset + i; }
  std::vector<std::size_t> qubits() const;
  bool operator==(const QubitSpan&) const = default;
};

/// Throws ValidationError unless the spans are disjoint and together cover
/// qubits [0, num_qubits) exactly.
void validate_spans(std::span<const QubitSpan> spans, std::size_t num_qubits);

class StateVector {
 public:
  /// |index> over num_qubits qubits.
  static StateVector basis(std::size_t num_qubits, std::uint64_t index);

  /// Takes ownership of the amplitudes; the length must be a power of two
  /// and the vector must be nonzero. The amplitudes are normalized.
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  Complex amplitude(std::uint64_t index) const { return amplitudes_.at(index); }

  /// 2-norm, accumulated in a fixed order with compensated summation so the
  /// result is bitwise reproducible.
  double norm() const;

  /// Multiplies the target sub-block of every basis state whose control bits
  /// are all set by `matrix`. Throws ValidationError for a non-unitary or
  /// wrongly sized matrix, DomainError for bad or overlapping operands.
  void apply_controlled_unitary(const Matrix& matrix,
                                std::span<const std::size_t> controls,
                                std::span<const std::size_t> targets);

  /// Multiplies each basis amplitude (controls set) by exp(2 pi i phases[k])
  /// where k is the little-endian bit pattern of `targets`. Phases are in
  /// turns.
  void apply_diagonal_phases(std::span<const double> phases,
                             std::span<const std::size_t> targets,
                             std::span<const std::size_t> controls);

  /// Exchanges the values of two qubits.
  void apply_swap(std::size_t a, std::size_t b);

  /// Projects `qubit` onto `outcome` in place and renormalizes. Returns the
  /// weight of the projection before renormalization.
  double postselect(std::size_t qubit, int outcome);

  /// Probability that qubits [offset, offset + width) read `value`.
  double register_probability(std::size_t offset, std::size_t width,
                              std::uint64_t value) const;

  /// Amplitudes of the sub-register [offset, offset + width) with every other
  /// qubit fixed to the bits of `rest` (rest is given in full-index form and
  /// its bits inside the span are ignored). Not renormalized.
  std::vector<Complex> slice(std::size_t offset, std::size_t width,
                             std::uint64_t rest = 0) const;

 private:
  StateVector(std::size_t num_qubits, std::vector<Complex> amplitudes)
      : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

  std::size_t num_qubits_ = 0;
  std::vector<Complex> amplitudes_;
};

StateVector new_basis_state(std::size_t num_qubits, std::uint64_t index);

StateVector apply_controlled_unitary(StateVector state, const Matrix& matrix,
                                     std::span<const std::size_t> controls,
                                     std::span<const std::size_t> targets);

StateVector apply_diagonal_phases(StateVector state,
                                  std::span<const double> phases,
                                  const QubitSpan& targets,
                                  std::span<const std::size_t> controls = {});

/// Returns the renormalized projection and its probability. Throws
/// PostSelectionError when the probability is below kPostSelectionFloor.
std::pair<StateVector, double> postselect(StateVector state, std::size_t qubit,
                                          int outcome);

/// |<a|b>|. Throws DomainError on a dimension mismatch.
double overlap(const StateVector& a, const StateVector& b);

/// Product state with `low` on qubits [0, low.num_qubits()) and `high` above.
StateVector tensor(const StateVector& high, const StateVector& low);

/// Throws ValidationError unless ||U^dagger U - I||_max <= tolerance.
void require_unitary(const Matrix& matrix, double tolerance = kUnitaryTolerance);

bool is_power_of_two(std::uint64_t x);

/// Total weight on basis states whose qubits [offset, offset + width) are
/// not all zero. Summed directly, so tiny residuals are not lost to 1 - p.
double off_register_weight(const StateVector& state, std::size_t offset, std::size_t width);

}  // namespace qcrot
