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
 * Fixed-point fidelity model of HHL with an m-bit controlled rotation.
 *
 * Fidelity only depends on the spectrum and on the weights beta_j of b in
 * the eigenbasis, so no matrices are built: a trial is a random spectrum
 * plus a random beta.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace qcrot {

/// Which m-bit approximation of C / lambda is modelled.
enum class RotationChain {
  /// Truncate lambda, truncate arcsin(C / lambda~) / (pi/2), truncate the
  /// sine. The default, used by sweeps.
  kTruncated,
  /// What the rotation circuit computes: truncate lambda, floor
  /// arcsin(C / lambda~) / (4 pi) onto the m-bit grid, amplitude
  /// sin(4 pi theta~).
  kCircuitGrid,
};

struct SweepConfig {
  std::size_t n = 1;
  std::size_t m = 8;
  double kappa = 10.0;
  double s = 0.99;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  bool uniform_b = false;
  RotationChain chain = RotationChain::kTruncated;

  /// Throws ValidationError when a field is out of range.
  void validate() const;
};

struct SweepRow {
  std::size_t n = 0;
  std::size_t m = 0;
  double kappa = 0.0;
  double s = 0.0;
  std::size_t trial = 0;
  double fidelity = 0.0;
};

/// 2^n eigenvalues: one equal to 1, one equal to 1/kappa, the rest uniform
/// on [1/kappa, 1], in random order.
std::vector<double> sample_spectrum(std::size_t n, double kappa, std::mt19937_64& rng);

/// floor(x 2^m) / 2^m, with 0 replaced by 2^-m and 1 kept. Throws
/// DomainError outside [0, 1].
double truncate_bits(double x, std::size_t m);

/// The truncation chain: lambda~ = truncate_bits(lambda), a = arcsin(C /
/// lambda~), a~ = truncate_bits(a / (pi/2)) pi/2, result truncate_bits(sin
/// a~). Throws DomainError when C / lambda~ > 1 unless clamp is set.
double approx_inverse_amplitude(double lambda, std::size_t m, double c, bool clamp = false);

/// sin(4 pi theta~) with theta~ the m-bit floor of arcsin(min(1, C /
/// lambda~)) / (4 pi).
double circuit_grid_amplitude(double lambda, std::size_t m, double c);

/// |<w'|w>| / (|w'| |w|) with w_j = (C / lambda_j) beta_j, w'_j =
/// amplitude_j beta_j and C = s min(spectrum). Throws DegenerateError when
/// every w'_j vanishes.
double fidelity_model(const SweepConfig& config, std::span<const double> spectrum,
                      std::span<const std::complex<double>> betas);

/// Complex standard-normal weights, normalized (or the uniform vector).
std::vector<std::complex<double>> sample_betas(std::size_t dim, bool uniform,
                                               std::mt19937_64& rng);

/// Generator for trial `trial` of a config with the given seed.
std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial);

/// Evaluates every trial of every config. Rows follow grid order, then
/// trial order, whatever the thread count (0 = default_thread_count()).
std::vector<SweepRow> run_sweep(std::span<const SweepConfig> grid, std::size_t threads = 0);

/// QCROT_THREADS when set to a positive integer, else the hardware count.
std::size_t default_thread_count();

/// Header `n,m,kappa,s,trial,fidelity`, %.12g numbers, LF endings.
std::string sweep_csv(std::span<const SweepRow> rows);

/// A JSON list of config objects; missing fields take SweepConfig defaults.
std::vector<SweepConfig> parse_sweep_grid(const nlohmann::json& j);

}  // namespace qcrot
