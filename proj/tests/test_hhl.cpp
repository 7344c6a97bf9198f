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

#include <gtest/gtest.h>

#include "qcrot/error.hpp"
#include "qcrot/fixedpoint.hpp"
#include "qcrot/hhl.hpp"

namespace qcrot {
namespace {

LinearSystem diag_system(double l0, double l1, Complex b0, Complex b1) {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = l0;
  a(1, 1) = l1;
  Vector b(2);
  b << b0, b1;
  return LinearSystem(a, b);
}

TEST(LinearSystem, Validation) {
  Matrix a(2, 2);
  a << 0.5, 0.1, 0.2, 0.5;
  Vector b(2);
  b << 1.0, 0.0;
  EXPECT_THROW(LinearSystem(a, b), ValidationError);
  Matrix sing(2, 2);
  sing << 0.5, 0.5, 0.5, 0.5;
  EXPECT_THROW(LinearSystem(sing, b), SolverError);
  Matrix big = Matrix::Identity(2, 2) * 1.5;
  EXPECT_THROW(LinearSystem(big, b), ValidationError);
  Vector b3(3);
  b3 << 1.0, 0.0, 0.0;
  EXPECT_THROW(LinearSystem(Matrix::Identity(3, 3) * 0.5, b3), ValidationError);
}

TEST(LinearSystem, JsonForms) {
  const auto flat = LinearSystem::from_json(
      nlohmann::json::parse(R"({"n":1,"a":[0.5,0,0,0.25],"b":[1,[0,1]]})"));
  EXPECT_NEAR(std::abs(flat.b()(1) - Complex(0, std::sqrt(0.5))), 0.0, 1e-15);
  const auto back = LinearSystem::from_json(flat.to_json());
  EXPECT_LT((back.a() - flat.a()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((back.b() - flat.b()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Classical, SolveAndSpectrum) {
  const LinearSystem sys = diag_system(0.5, 0.25, 1.0, 1.0);
  const Vector x = classical_solve(sys);
  EXPECT_NEAR(x(1).real() / x(0).real(), 2.0, 1e-12);
  const Spectrum sp = spectral_decompose(sys);
  EXPECT_NEAR(sp.values(0), 0.25, 1e-15);
  EXPECT_NEAR(sp.values(1), 0.5, 1e-15);
}

TEST(Classical, HamiltonianPowerIsExponential) {
  const LinearSystem sys = diag_system(0.5, 0.25, 1.0, 0.0);
  const Matrix u = hamiltonian_power(sys, 1);
  EXPECT_NEAR(std::abs(u(0, 0) - std::polar(1.0, kTwoPi * 1.0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(u(1, 1) - std::polar(1.0, kTwoPi * 0.5)), 0.0, 1e-12);
}

TEST(Hhl, ExactSpectrumGivesSolution) {
  const LinearSystem sys = diag_system(0.5, 0.25, 0.6, Complex(0.0, 0.8));
  const HhlReport r = run_hhl(sys, 4, 0.99);
  // Exact phase estimation; what is left is the 4-bit angle grid.
  SweepConfig cfg;
  cfg.m = 4;
  cfg.s = 0.99;
  cfg.chain = RotationChain::kCircuitGrid;
  const std::vector<double> spectrum{0.5, 0.25};
  const std::vector<std::complex<double>> betas{{0.6, 0.0}, {0.0, 0.8}};
  EXPECT_NEAR(r.fidelity, fidelity_model(cfg, spectrum, betas), 1e-9);
  EXPECT_GT(run_hhl(sys, 8, 0.99).fidelity, 0.999);
  EXPECT_LT(r.uncompute_residual, 1e-9);
  EXPECT_GT(r.success_probability, 0.0);
  EXPECT_EQ(r.m, 4u);
}

TEST(Hhl, DenseSystem) {
  Matrix a(2, 2);
  a << 0.5, 0.25, 0.25, 0.5;
  Vector b(2);
  b << 1.0, 0.0;
  const HhlReport r = run_hhl(LinearSystem(a, b), 8, 0.9);
  EXPECT_GT(r.fidelity, 0.999);
  const auto j = r.to_json();
  EXPECT_TRUE(j.contains("fidelity"));
}

TEST(Hhl, ModesAgree) {
  const LinearSystem sys = diag_system(0.75, 0.25, 0.6, 0.8);
  const HhlReport a = run_hhl(sys, 5, 0.9, DiagonalMode::kComposite);
  const HhlReport b = run_hhl(sys, 5, 0.9, DiagonalMode::kSynthesized);
  EXPECT_NEAR(a.fidelity, b.fidelity, 1e-12);
  EXPECT_NEAR(a.success_probability, b.success_probability, 1e-12);
}

TEST(Hhl, ParameterGuards) {
  const LinearSystem sys = diag_system(0.5, 0.01, 1.0, 1.0);
  EXPECT_THROW(run_hhl(sys, 4, 0.9), ParameterError);
  const LinearSystem ok = diag_system(0.5, 0.25, 1.0, 1.0);
  EXPECT_THROW(run_hhl(ok, 4, 1.0), ParameterError);
  EXPECT_THROW(run_hhl(ok, 4, 0.0), ParameterError);
  EXPECT_THROW(run_hhl(ok, 13, 0.9), ParameterError);
}

TEST(Hhl, EigenbasisWeights) {
  const LinearSystem sys = diag_system(0.5, 0.25, 0.6, 0.8);
  const Vector w = eigenbasis_weights(spectral_decompose(sys), sys.b());
  EXPECT_NEAR(std::abs(w(0)), 0.8, 1e-15);
  EXPECT_NEAR(std::abs(w(1)), 0.6, 1e-15);
}

}  // namespace
}  // namespace qcrot
