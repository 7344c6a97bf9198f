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

#include "qcrot/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qcrot/error.hpp"

namespace qcrot {

namespace {

constexpr std::size_t kMaxQubits = 30;

std::uint64_t mask_of(std::span<const std::size_t> qubits) {
  std::uint64_t mask = 0;
  for (std::size_t q : qubits) mask |= std::uint64_t{1} << q;
  return mask;
}

void check_operands(std::size_t num_qubits,
                    std::span<const std::size_t> controls,
                    std::span<const std::size_t> targets) {
  std::uint64_t seen = 0;
  auto visit = [&](std::size_t q) {
    if (q >= num_qubits) {
      std::ostringstream msg;
      msg << "qubit " << q << " out of range for " << num_qubits
          << "-qubit state";
      throw DomainError(msg.str());
    }
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (seen & bit) {
      std::ostringstream msg;
      msg << "qubit " << q << " used more than once";
      throw DomainError(msg.str());
    }
    seen |= bit;
  };
  for (std::size_t q : controls) visit(q);
  for (std::size_t q : targets) visit(q);
}

/// Full-index offsets of every target pattern j, bit b of j -> targets[b].
std::vector<std::uint64_t> target_offsets(
    std::span<const std::size_t> targets) {
  std::vector<std::uint64_t> offsets(std::size_t{1} << targets.size(), 0);
  for (std::size_t j = 0; j < offsets.size(); ++j) {
    for (std::size_t b = 0; b < targets.size(); ++b) {
      if ((j >> b) & 1U) offsets[j] |= std::uint64_t{1} << targets[b];
    }
  }
  return offsets;
}

// Neumaier summation, fixed order.
double compensated_sum_sq(std::span<const Complex> values) {
  double sum = 0.0;
  double carry = 0.0;
  for (const Complex& v : values) {
    const double term = std::norm(v);
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      carry += (sum - t) + term;
    } else {
      carry += (term - t) + sum;
    }
    sum = t;
  }
  return sum + carry;
}

}  // namespace

std::string_view to_string(RegisterLabel label) {
  switch (label) {
    case RegisterLabel::kAncilla:
      return "ancilla";
    case RegisterLabel::kRegA:
      return "regA";
    case RegisterLabel::kRegE:
      return "regE";
    case RegisterLabel::kRegB:
      return "regB";
    case RegisterLabel::kAux:
      return "aux";
  }
  return "aux";
}

std::vector<std::size_t> QubitSpan::qubits() const {
  std::vector<std::size_t> out(width);
  for (std::size_t i = 0; i < width; ++i) out[i] = offset + i;
  return out;
}

void validate_spans(std::span<const QubitSpan> spans, std::size_t num_qubits) {
  std::vector<int> owner(num_qubits, 0);
  for (const QubitSpan& span : spans) {
    if (span.offset + span.width > num_qubits) {
      throw ValidationError("span " + std::string(to_string(span.label)) +
                            " exceeds the allocated qubits");
    }
    for (std::size_t i = 0; i < span.width; ++i) {
      if (owner[span.offset + i]++ != 0) {
        throw ValidationError("spans overlap at qubit " +
                              std::to_string(span.offset + i));
      }
    }
  }
  for (std::size_t q = 0; q < num_qubits; ++q) {
    if (owner[q] == 0) {
      throw ValidationError("qubit " + std::to_string(q) +
                            " is not covered by any span");
    }
  }
}

bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

StateVector StateVector::basis(std::size_t num_qubits, std::uint64_t index) {
  if (num_qubits > kMaxQubits) {
    throw DomainError("at most " + std::to_string(kMaxQubits) +
                      " qubits are supported");
  }
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  if (index >= dim) {
    std::ostringstream msg;
    msg << "basis index " << index << " out of range for " << num_qubits
        << " qubits";
    throw DomainError(msg.str());
  }
  std::vector<Complex> amps(dim, Complex{0.0, 0.0});
  amps[index] = 1.0;
  return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  if (!is_power_of_two(amplitudes.size())) {
    throw DomainError("amplitude count must be a power of two");
  }
  std::size_t n = 0;
  while ((std::size_t{1} << n) < amplitudes.size()) ++n;
  if (n > kMaxQubits) throw DomainError("state too large");
  const double nrm = std::sqrt(compensated_sum_sq(amplitudes));
  if (!(nrm > 0.0) || !std::isfinite(nrm)) {
    throw DomainError("cannot normalize a zero or non-finite vector");
  }
  for (Complex& a : amplitudes) a /= nrm;
  return StateVector(n, std::move(amplitudes));
}

double StateVector::norm() const {
  return std::sqrt(compensated_sum_sq(amplitudes_));
}

void require_unitary(const Matrix& matrix, double tolerance) {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
    throw ValidationError("unitary must be a nonempty square matrix");
  }
  const Matrix product = matrix.adjoint() * matrix;
  const Matrix identity = Matrix::Identity(matrix.rows(), matrix.cols());
  const double err = (product - identity).cwiseAbs().maxCoeff();
  if (!(err <= tolerance)) {
    std::ostringstream msg;
    msg << "matrix is not unitary (max |U^dagger U - I| = " << err << ")";
    throw ValidationError(msg.str());
  }
}

void StateVector::apply_controlled_unitary(
    const Matrix& matrix, std::span<const std::size_t> controls,
    std::span<const std::size_t> targets) {
  check_operands(num_qubits_, controls, targets);
  if (targets.empty()) throw DomainError("at least one target is required");
  const auto block = static_cast<Eigen::Index>(std::size_t{1} << targets.size());
  if (matrix.rows() != block || matrix.cols() != block) {
    throw ValidationError("matrix dimension does not match 2^|targets|");
  }
  require_unitary(matrix);

  const std::uint64_t cmask = mask_of(controls);
  const std::uint64_t tmask = mask_of(targets);
  const std::uint64_t dim = amplitudes_.size();

  if (targets.size() == 1) {
    const Complex m00 = matrix(0, 0), m01 = matrix(0, 1);
    const Complex m10 = matrix(1, 0), m11 = matrix(1, 1);
    for (std::uint64_t base = 0; base < dim; ++base) {
      if ((base & tmask) || (base & cmask) != cmask) continue;
      const std::uint64_t hi = base | tmask;
      const Complex a0 = amplitudes_[base];
      const Complex a1 = amplitudes_[hi];
      amplitudes_[base] = m00 * a0 + m01 * a1;
      amplitudes_[hi] = m10 * a0 + m11 * a1;
    }
    return;
  }

  const std::vector<std::uint64_t> offsets = target_offsets(targets);
  Eigen::VectorXcd in(block);
  Eigen::VectorXcd out(block);
  for (std::uint64_t base = 0; base < dim; ++base) {
    if ((base & tmask) || (base & cmask) != cmask) continue;
    for (Eigen::Index j = 0; j < block; ++j) in[j] = amplitudes_[base | offsets[j]];
    out.noalias() = matrix * in;
    for (Eigen::Index j = 0; j < block; ++j) amplitudes_[base | offsets[j]] = out[j];
  }
}

void StateVector::apply_diagonal_phases(std::span<const double> phases,
                                        std::span<const std::size_t> targets,
                                        std::span<const std::size_t> controls) {
  check_operands(num_qubits_, controls, targets);
  if (phases.size() != (std::size_t{1} << targets.size())) {
    throw DomainError("phase table length must be 2^width");
  }
  std::vector<Complex> factors(phases.size());
  for (std::size_t k = 0; k < phases.size(); ++k) {
    factors[k] = std::polar(1.0, kTwoPi * phases[k]);
  }
  const std::uint64_t cmask = mask_of(controls);
  const std::uint64_t dim = amplitudes_.size();
  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    if ((idx & cmask) != cmask) continue;
    std::uint64_t k = 0;
    for (std::size_t b = 0; b < targets.size(); ++b) {
      k |= ((idx >> targets[b]) & 1U) << b;
    }
    amplitudes_[idx] *= factors[k];
  }
}

void StateVector::apply_swap(std::size_t a, std::size_t b) {
  const std::size_t operands[2] = {a, b};
  check_operands(num_qubits_, {}, operands);
  const std::uint64_t ma = std::uint64_t{1} << a;
  const std::uint64_t mb = std::uint64_t{1} << b;
  for (std::uint64_t idx = 0; idx < amplitudes_.size(); ++idx) {
    // visit each (a=1, b=0) index once and swap with its (a=0, b=1) partner
    if ((idx & ma) && !(idx & mb)) {
      std::swap(amplitudes_[idx], amplitudes_[(idx & ~ma) | mb]);
    }
  }
}

double StateVector::postselect(std::size_t qubit, int outcome) {
  if (qubit >= num_qubits_) throw DomainError("post-selected qubit out of range");
  if (outcome != 0 && outcome != 1) throw DomainError("outcome must be 0 or 1");
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const std::uint64_t want = outcome ? bit : 0;
  double sum = 0.0;
  double carry = 0.0;
  for (std::uint64_t idx = 0; idx < amplitudes_.size(); ++idx) {
    if ((idx & bit) != want) continue;
    const double term = std::norm(amplitudes_[idx]);
    const double t = sum + term;
    carry += std::abs(sum) >= term ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  const double probability = sum + carry;
  if (!(probability >= kPostSelectionFloor)) {
    std::ostringstream msg;
    msg << "post-selection of qubit " << qubit << " on |" << outcome
        << "> is impossible (probability " << probability << ")";
    throw PostSelectionError(msg.str());
  }
  const double scale = 1.0 / std::sqrt(probability);
  for (std::uint64_t idx = 0; idx < amplitudes_.size(); ++idx) {
    if ((idx & bit) != want) {
      amplitudes_[idx] = 0.0;
    } else {
      amplitudes_[idx] *= scale;
    }
  }
  return probability;
}

double StateVector::register_probability(std::size_t offset, std::size_t width,
                                         std::uint64_t value) const {
  if (offset + width > num_qubits_) throw DomainError("register out of range");
  const std::uint64_t mask = ((std::uint64_t{1} << width) - 1) << offset;
  const std::uint64_t want = (value << offset) & mask;
  double sum = 0.0;
  for (std::uint64_t idx = 0; idx < amplitudes_.size(); ++idx) {
    if ((idx & mask) == want) sum += std::norm(amplitudes_[idx]);
  }
  return sum;
}

std::vector<Complex> StateVector::slice(std::size_t offset, std::size_t width,
                                        std::uint64_t rest) const {
  if (offset + width > num_qubits_) throw DomainError("register out of range");
  const std::uint64_t mask = ((std::uint64_t{1} << width) - 1) << offset;
  const std::uint64_t base = rest & ~mask;
  std::vector<Complex> out(std::size_t{1} << width);
  for (std::uint64_t k = 0; k < out.size(); ++k) {
    out[k] = amplitudes_[base | (k << offset)];
  }
  return out;
}

StateVector new_basis_state(std::size_t num_qubits, std::uint64_t index) {
  return StateVector::basis(num_qubits, index);
}

StateVector apply_controlled_unitary(StateVector state, const Matrix& matrix,
                                     std::span<const std::size_t> controls,
                                     std::span<const std::size_t> targets) {
  state.apply_controlled_unitary(matrix, controls, targets);
  return state;
}

StateVector apply_diagonal_phases(StateVector state,
                                  std::span<const double> phases,
                                  const QubitSpan& targets,
                                  std::span<const std::size_t> controls) {
  const std::vector<std::size_t> qs = targets.qubits();
  state.apply_diagonal_phases(phases, qs, controls);
  return state;
}

std::pair<StateVector, double> postselect(StateVector state, std::size_t qubit,
                                          int outcome) {
  const double p = state.postselect(qubit, outcome);
  return {std::move(state), p};
}

double overlap(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DomainError("overlap of states with different qubit counts");
  }
  Complex acc{0.0, 0.0};
  const auto av = a.amplitudes();
  const auto bv = b.amplitudes();
  for (std::size_t i = 0; i < av.size(); ++i) acc += std::conj(av[i]) * bv[i];
  return std::abs(acc);
}

StateVector tensor(const StateVector& high, const StateVector& low) {
  std::vector<Complex> amps(high.dimension() * low.dimension());
  const auto hv = high.amplitudes();
  const auto lv = low.amplitudes();
  for (std::size_t h = 0; h < hv.size(); ++h) {
    for (std::size_t l = 0; l < lv.size(); ++l) {
      amps[h * lv.size() + l] = hv[h] * lv[l];
    }
  }
  return StateVector::from_amplitudes(std::move(amps));
}

double off_register_weight(const StateVector& state, std::size_t offset, std::size_t width) {
  if (offset + width > state.num_qubits()) throw DomainError("register out of range");
  const std::uint64_t mask = ((std::uint64_t{1} << width) - 1) << offset;
  const auto amps = state.amplitudes();
  double sum = 0.0;
  for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
    if (idx & mask) sum += std::norm(amps[idx]);
  }
  return sum;
}

}  // namespace qcrot
