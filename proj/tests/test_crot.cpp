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

#include "qcrot/crot.hpp"
#include "qcrot/error.hpp"
#include "support/dense.hpp"

namespace qcrot {
namespace {

TEST(Crot, Layout) {
  const auto spans = crot_spans(3);
  ASSERT_EQ(spans.size(), 3u);
  EXPECT_EQ(spans[1].label, RegisterLabel::kRegA);
  EXPECT_EQ(spans[1].offset, 1u);
  EXPECT_EQ(spans[2].offset, 4u);
  EXPECT_EQ(build_crot_circuit(make_exact_oracle(3), true).num_qubits(), 7u);
}

TEST(Crot, CascadeAngles) {
  const Circuit c = build_ry_cascade(3);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_DOUBLE_EQ(c.gates()[0].angle(), 0.25);
  EXPECT_DOUBLE_EQ(c.gates()[1].angle(), 0.5);
  // A full turn; Reg.A never reaches this bit for theta <= 1/4.
  EXPECT_DOUBLE_EQ(c.gates()[2].angle(), 0.0);
}

TEST(Crot, PhaseEstimationWritesGridValue) {
  const std::size_t m = 4;
  const AngleOracle o = make_exact_oracle(m);
  const Circuit pe = build_pe_stage(o);
  for (std::uint64_t k = 0; k < 16; ++k) {
    StateVector s = StateVector::basis(1 + 2 * m, k << (m + 1));
    simulate_in_place(pe, s);
    const auto a = static_cast<std::uint64_t>(std::llround(o.theta(k) * 16));
    EXPECT_NEAR(s.register_probability(1, m, a), 1.0, 1e-12) << k;
  }
}

TEST(Crot, ExactBasisInputs) {
  const std::size_t m = 5;
  const AngleOracle o = make_exact_oracle(m);
  for (std::uint64_t k = 4; k < 32; ++k) {
    const CrotResult r = run_crot(o, StateVector::basis(m, k));
    const double amp = std::sin(4 * M_PI * o.theta(k));
    EXPECT_NEAR(r.success_probability, amp * amp, 1e-12) << k;
    EXPECT_LT(r.reg_a_residual, 1e-9);
    EXPECT_NEAR(std::abs(r.output_state.amplitude(k)), 1.0, 1e-12);
  }
}

TEST(Crot, SuperpositionWeights) {
  const std::size_t m = 4;
  const AngleOracle o = make_exact_oracle(m, 0.125);
  std::mt19937_64 rng(4);
  const StateVector in = testing::random_state(m, rng);
  const CrotResult r = run_crot(o, in);
  std::vector<Complex> want(16);
  for (std::uint64_t k = 0; k < 16; ++k) want[k] = in.amplitude(k) * o.amplitude(k);
  const StateVector expect = StateVector::from_amplitudes(want);
  EXPECT_NEAR(overlap(expect, r.output_state), 1.0, 1e-12);
}

TEST(Crot, ComposeModesAgree) {
  const AngleOracle o = make_hhl_oracle(3, 0.1, true);
  std::mt19937_64 rng(6);
  const StateVector in = testing::random_state(3, rng);
  const CrotResult a = run_crot(o, in, DiagonalMode::kSynthesized);
  const CrotResult b = run_crot(o, in, DiagonalMode::kComposite);
  EXPECT_NEAR(a.success_probability, b.success_probability, 1e-12);
  EXPECT_NEAR(overlap(a.output_state, b.output_state), 1.0, 1e-12);
}

TEST(Crot, ZeroOracleCannotSucceed) {
  EXPECT_THROW(run_crot(make_zero_oracle(3), StateVector::basis(3, 2)), PostSelectionError);
}

TEST(Crot, WidthMismatch) {
  EXPECT_THROW(run_crot(make_exact_oracle(3), StateVector::basis(2, 0)), DomainError);
}

}  // namespace
}  // namespace qcrot
