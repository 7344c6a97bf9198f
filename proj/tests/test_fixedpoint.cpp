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
#include <complex>
#include <vector>

#include <gtest/gtest.h>

#include "qcrot/error.hpp"
#include "qcrot/fixedpoint.hpp"
#include "qcrot/oracle.hpp"

namespace qcrot {
namespace {

TEST(Truncate, Examples) {
  EXPECT_DOUBLE_EQ(truncate_bits(1.0 / 3.0, 4), 0.3125);
  EXPECT_DOUBLE_EQ(truncate_bits(0.5, 8), 0.5);
  EXPECT_DOUBLE_EQ(truncate_bits(0.0001, 8), 1.0 / 256.0);
  EXPECT_DOUBLE_EQ(truncate_bits(1.0, 8), 1.0);
}

TEST(ApproxInverse, WorkedExample) {
  // C / lambda = 0.198 exactly, but the three truncations land one grid
  // step further down.
  EXPECT_DOUBLE_EQ(approx_inverse_amplitude(0.5, 8, 0.099), 49.0 / 256.0);
}

TEST(ApproxInverse, ConvergesWithBits) {
  double prev = 1.0;
  for (std::size_t m : {8u, 12u, 16u, 20u}) {
    const double err = std::abs(approx_inverse_amplitude(0.37, m, 0.1) - 0.1 / 0.37);
    EXPECT_LE(err, prev + 1e-15);
    prev = err;
  }
  EXPECT_LT(prev, 1e-4);
}

TEST(CircuitGrid, MatchesQuantizedOracle) {
  const std::size_t m = 5;
  const double c = 1.0 / 40.0;
  const AngleOracle o = make_hhl_oracle(m, c).quantized();
  for (std::uint64_t k = 1; k < 32; ++k) {
    EXPECT_NEAR(circuit_grid_amplitude(std::ldexp(double(k), -5), m, c), o.amplitude(k), 1e-14) << k;
  }
}

TEST(Model, EqualEigenvaluesAreExact) {
  SweepConfig cfg;
  cfg.m = 6;
  const std::vector<double> spectrum{0.5, 0.5, 0.5};
  const std::vector<std::complex<double>> betas{{0.6, 0.0}, {0.0, 0.8}, {0.0, 0.0}};
  EXPECT_NEAR(fidelity_model(cfg, spectrum, betas), 1.0, 1e-14);
}

TEST(Model, BoundedAndImprovingInM) {
  std::mt19937_64 rng(1);
  SweepConfig cfg;
  cfg.n = 3;
  const auto spectrum = sample_spectrum(3, 10.0, rng);
  const auto betas = sample_betas(8, false, rng);
  cfg.m = 6;
  const double lo = fidelity_model(cfg, spectrum, betas);
  cfg.m = 20;
  const double hi = fidelity_model(cfg, spectrum, betas);
  EXPECT_GT(lo, 0.0);
  EXPECT_LE(lo, 1.0);
  EXPECT_GT(hi, 1.0 - 1e-6);
}

TEST(Model, RejectsMismatchedInput) {
  SweepConfig cfg;
  const std::vector<double> spectrum{0.5, 0.25};
  const std::vector<std::complex<double>> betas{{1.0, 0.0}};
  EXPECT_THROW(fidelity_model(cfg, spectrum, betas), DomainError);
}

TEST(Sampling, SpectrumRespectsKappa) {
  std::mt19937_64 rng(3);
  const auto s = sample_spectrum(6, 20.0, rng);
  ASSERT_EQ(s.size(), 64u);
  for (double l : s) {
    EXPECT_GE(l, 1.0 / 20.0 - 1e-15);
    EXPECT_LE(l, 1.0);
  }
}

TEST(Sampling, BetasNormalized) {
  std::mt19937_64 rng(3);
  double sq = 0.0;
  for (auto b : sample_betas(16, false, rng)) sq += std::norm(b);
  EXPECT_NEAR(sq, 1.0, 1e-14);
}

TEST(Sweep, DeterministicAcrossThreads) {
  std::vector<SweepConfig> grid(2);
  grid[0].n = 4;
  grid[0].m = 6;
  grid[0].trials = 20;
  grid[0].seed = 9;
  grid[1] = grid[0];
  grid[1].m = 10;
  const auto a = run_sweep(grid, 1);
  const auto b = run_sweep(grid, 4);
  ASSERT_EQ(a.size(), 40u);
  EXPECT_EQ(sweep_csv(a), sweep_csv(b));
  EXPECT_EQ(sweep_csv(a).rfind("n,m,kappa,s,trial,fidelity\n", 0), 0u);
}

TEST(Sweep, TrialRngIsStable) {
  auto a = trial_rng(42, 3);
  auto b = trial_rng(42, 3);
  auto c = trial_rng(42, 4);
  const auto x = a();
  EXPECT_EQ(x, b());
  EXPECT_NE(x, c());
}

TEST(Sweep, ParseGrid) {
  const auto grid = parse_sweep_grid(nlohmann::json::parse(
      R"([{"n":3,"m":5,"kappa":10,"s":0.9,"trials":2,"seed":1,"chain":"circuit"}])"));
  ASSERT_EQ(grid.size(), 1u);
  EXPECT_EQ(grid[0].chain, RotationChain::kCircuitGrid);
  EXPECT_THROW(parse_sweep_grid(nlohmann::json::parse(R"([{"n":3,"m":5,"s":1.5}])")),
               ValidationError);
}

}  // namespace
}  // namespace qcrot
