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

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "qcrot/error.hpp"
#include "qcrot/statevector.hpp"
#include "support/dense.hpp"

namespace qcrot {
namespace {

Matrix pauli_x() {
  Matrix x = Matrix::Zero(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  return x;
}

TEST(StateVector, BasisAndNorm) {
  const StateVector s = StateVector::basis(3, 5);
  EXPECT_EQ(s.dimension(), 8u);
  EXPECT_EQ(s.amplitude(5), Complex(1.0, 0.0));
  EXPECT_DOUBLE_EQ(s.norm(), 1.0);
  EXPECT_THROW(StateVector::basis(3, 8), DomainError);
}

TEST(StateVector, FromAmplitudesNormalizes) {
  const StateVector s = StateVector::from_amplitudes({3.0, 4.0});
  EXPECT_NEAR(s.amplitude(0).real(), 0.6, 1e-15);
  EXPECT_NEAR(s.amplitude(1).real(), 0.8, 1e-15);
  EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), Error);
  EXPECT_THROW(StateVector::from_amplitudes({0.0, 0.0}), Error);
}

TEST(StateVector, LittleEndianControlledX) {
  StateVector s = StateVector::basis(3, 0b001);
  const std::vector<std::size_t> c{0};
  const std::vector<std::size_t> t{2};
  s.apply_controlled_unitary(pauli_x(), c, t);
  EXPECT_NEAR(std::abs(s.amplitude(0b101)), 1.0, 1e-15);
}

TEST(StateVector, RejectsBadOperands) {
  StateVector s = StateVector::basis(2, 0);
  const std::vector<std::size_t> same{1};
  EXPECT_THROW(s.apply_controlled_unitary(pauli_x(), same, same), DomainError);
  Matrix bad = Matrix::Ones(2, 2);
  const std::vector<std::size_t> none;
  EXPECT_THROW(s.apply_controlled_unitary(bad, none, same), ValidationError);
}

TEST(StateVector, DiagonalPhasesMatchDense) {
  std::mt19937_64 rng(11);
  const auto phases = testing::random_phases(4, rng);
  StateVector s = testing::random_state(3, rng);
  const StateVector before = s;
  const std::vector<std::size_t> targets{0, 2};
  const std::vector<std::size_t> controls{1};
  s.apply_diagonal_phases(phases, targets, controls);
  for (std::uint64_t i = 0; i < 8; ++i) {
    Complex expect = before.amplitude(i);
    if (i & 2) expect *= std::polar(1.0, kTwoPi * phases[(i & 1) | ((i >> 2) << 1)]);
    EXPECT_NEAR(std::abs(s.amplitude(i) - expect), 0.0, 1e-14) << i;
  }
}

TEST(StateVector, SwapAndPostselect) {
  StateVector s = StateVector::from_amplitudes({1.0, 1.0, 0.0, 0.0});
  s.apply_swap(0, 1);
  EXPECT_NEAR(std::abs(s.amplitude(2)), std::sqrt(0.5), 1e-15);
  const double p = s.postselect(1, 1);
  EXPECT_NEAR(p, 0.5, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude(2)), 1.0, 1e-15);
  EXPECT_THROW(s.postselect(1, 0), PostSelectionError);
}

TEST(StateVector, RegisterProbabilityAndSlice) {
  const StateVector s = StateVector::from_amplitudes({0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0});
  EXPECT_NEAR(s.register_probability(1, 2, 0), 0.5, 1e-15);
  EXPECT_NEAR(s.register_probability(1, 2, 3), 0.5, 1e-15);
  const auto sl = s.slice(1, 2, 1);
  ASSERT_EQ(sl.size(), 4u);
  EXPECT_NEAR(std::abs(sl[0]), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(std::abs(sl[3]), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(off_register_weight(s, 1, 2), 0.5, 1e-15);
}

TEST(StateVector, TensorAndOverlap) {
  const StateVector hi = StateVector::basis(1, 1);
  const StateVector lo = StateVector::from_amplitudes({1.0, 1.0});
  const StateVector t = tensor(hi, lo);
  EXPECT_EQ(t.num_qubits(), 2u);
  EXPECT_NEAR(std::abs(t.amplitude(2)), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(std::abs(t.amplitude(3)), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(overlap(t, t), 1.0, 1e-15);
  EXPECT_NEAR(overlap(StateVector::basis(2, 0), t), 0.0, 1e-15);
}

TEST(StateVector, NormIsReproducible) {
  std::mt19937_64 a(5), b(5);
  EXPECT_EQ(testing::random_state(10, a).norm(), testing::random_state(10, b).norm());
}

TEST(StateVector, PowerOfTwo) {
  EXPECT_TRUE(is_power_of_two(1));
  EXPECT_TRUE(is_power_of_two(64));
  EXPECT_FALSE(is_power_of_two(0));
  EXPECT_FALSE(is_power_of_two(12));
}

}  // namespace
}  // namespace qcrot
