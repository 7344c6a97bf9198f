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

#include "qcrot/fixedpoint.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "qcrot/error.hpp"
#include "qcrot/oracle.hpp"
#include "qcrot/statevector.hpp"

namespace qcrot {

namespace {

constexpr double kHalfPi = kTwoPi / 4.0;
constexpr double kFourPi = 2.0 * kTwoPi;

double effective_c(const SweepConfig& config, std::span<const double> spectrum) {
  return config.s * *std::min_element(spectrum.begin(), spectrum.end());
}

}  // namespace

void SweepConfig::validate() const {
  if (n < 1 || n > 24) throw ValidationError("n must be in [1, 24]");
  if (m < 1 || m > 52) throw ValidationError("m must be in [1, 52]");
  if (!(kappa >= 1.0) || !std::isfinite(kappa)) throw ValidationError("kappa must be >= 1");
  if (!(s > 0.0 && s < 1.0)) throw ValidationError("s must be in (0, 1)");
  if (trials < 1) throw ValidationError("trials must be >= 1");
}

std::vector<double> sample_spectrum(std::size_t n, double kappa, std::mt19937_64& rng) {
  const std::size_t dim = std::size_t{1} << n;
  if (dim < 2) throw DomainError("spectrum needs at least two eigenvalues");
  const double lo = 1.0 / kappa;
  std::vector<double> values(dim);
  values[0] = 1.0;
  values[1] = lo;
  std::uniform_real_distribution<double> uniform(lo, 1.0);
  for (std::size_t i = 2; i < dim; ++i) values[i] = lo < 1.0 ? uniform(rng) : 1.0;
  std::shuffle(values.begin(), values.end(), rng);
  return values;
}

double truncate_bits(double x, std::size_t m) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("truncate_bits needs x in [0, 1]");
  if (x == 1.0) return 1.0;
  const double scale = std::ldexp(1.0, static_cast<int>(m));
  const double t = std::floor(x * scale) / scale;
  return t == 0.0 ? 1.0 / scale : t;
}

double approx_inverse_amplitude(double lambda, std::size_t m, double c, bool clamp) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw DomainError("lambda must be in (0, 1]");
  const double lt = truncate_bits(lambda, m);
  double x = c / lt;
  if (x > 1.0) {
    if (!clamp) throw DomainError("C / lambda~ exceeds 1");
    x = 1.0;
  }
  const double a = std::asin(x);
  const double at = truncate_bits(std::min(a / kHalfPi, 1.0), m) * kHalfPi;
  return truncate_bits(std::clamp(std::sin(at), 0.0, 1.0), m);
}

double circuit_grid_amplitude(double lambda, std::size_t m, double c) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw DomainError("lambda must be in (0, 1]");
  const double lt = truncate_bits(lambda, m);
  const double theta = std::asin(std::min(1.0, c / lt)) / kFourPi;
  return std::sin(kFourPi * quantize_turns(theta, m));
}

double fidelity_model(const SweepConfig& config, std::span<const double> spectrum,
                      std::span<const std::complex<double>> betas) {
  if (spectrum.size() != betas.size() || spectrum.empty()) {
    throw DomainError("spectrum and betas must have the same nonzero length");
  }
  const double c = effective_c(config, spectrum);
  std::complex<double> inner{0.0, 0.0};
  double exact_sq = 0.0;
  double approx_sq = 0.0;
  for (std::size_t j = 0; j < spectrum.size(); ++j) {
    const double lambda = spectrum[j];
    const double amp = config.chain == RotationChain::kTruncated
                           ? approx_inverse_amplitude(lambda, config.m, c, /*clamp=*/true)
                           : circuit_grid_amplitude(lambda, config.m, c);
    const std::complex<double> w = (c / lambda) * betas[j];
    const std::complex<double> wp = amp * betas[j];
    inner += std::conj(wp) * w;
    exact_sq += std::norm(w);
    approx_sq += std::norm(wp);
  }
  if (!(approx_sq > 0.0)) throw DegenerateError("every approximate weight is zero");
  return std::min(1.0, std::abs(inner) / std::sqrt(exact_sq * approx_sq));
}

std::vector<std::complex<double>> sample_betas(std::size_t dim, bool uniform, std::mt19937_64& rng) {
  std::vector<std::complex<double>> b(dim);
  if (uniform) {
    std::fill(b.begin(), b.end(), std::complex<double>(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
    return b;
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  double sq = 0.0;
  for (auto& z : b) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = {re, im};
    sq += re * re + im * im;
  }
  const double norm = std::sqrt(sq);
  for (auto& z : b) z /= norm;
  return b;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(static_cast<std::uint64_t>(trial) >> 32)};
  return std::mt19937_64(seq);
}

std::size_t default_thread_count() {
  if (const char* env = std::getenv("QCROT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SweepRow> run_sweep(std::span<const SweepConfig> grid, std::size_t threads) {
  std::vector<std::size_t> first(grid.size() + 1, 0);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i].validate();
    first[i + 1] = first[i] + grid[i].trials;
  }
  const std::size_t total = first.back();
  std::vector<SweepRow> rows(total);

  const auto evaluate = [&](std::size_t idx) {
    const std::size_t ci = static_cast<std::size_t>(
        std::upper_bound(first.begin(), first.end(), idx) - first.begin() - 1);
    const SweepConfig& cfg = grid[ci];
    const std::size_t trial = idx - first[ci];
    std::mt19937_64 rng = trial_rng(cfg.seed, trial);
    const auto spectrum = sample_spectrum(cfg.n, cfg.kappa, rng);
    const auto betas = sample_betas(spectrum.size(), cfg.uniform_b, rng);
    rows[idx] = {cfg.n, cfg.m, cfg.kappa, cfg.s, trial, fidelity_model(cfg, spectrum, betas)};
  };

  if (threads == 0) threads = default_thread_count();
  threads = std::min(threads, std::max<std::size_t>(total, 1));
  if (threads <= 1) {
    for (std::size_t i = 0; i < total; ++i) evaluate(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < total && !failed; i = next++) {
        try {
          evaluate(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
  std::string out = "n,m,kappa,s,trial,fidelity\n";
  char buf[160];
  for (const SweepRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%zu,%zu,%.12g,%.12g,%zu,%.12g\n", r.n, r.m, r.kappa, r.s,
                  r.trial, r.fidelity);
    out += buf;
  }
  return out;
}

std::vector<SweepConfig> parse_sweep_grid(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ValidationError("sweep grid must be a nonempty JSON list");
  std::vector<SweepConfig> grid;
  for (const auto& item : j) {
    if (!item.is_object()) throw ValidationError("sweep grid entries must be objects");
    SweepConfig c;
    try {
      c.n = item.value("n", c.n);
      c.m = item.value("m", c.m);
      c.kappa = item.value("kappa", c.kappa);
      c.s = item.value("s", c.s);
      c.trials = item.value("trials", c.trials);
      c.seed = item.value("seed", c.seed);
      c.uniform_b = item.value("uniform_b", c.uniform_b);
      const std::string chain = item.value("chain", std::string("truncated"));
      if (chain == "truncated") {
        c.chain = RotationChain::kTruncated;
      } else if (chain == "circuit") {
        c.chain = RotationChain::kCircuitGrid;
      } else {
        throw ValidationError("chain must be \"truncated\" or \"circuit\"");
      }
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError(std::string("sweep grid entry: ") + e.what());
    }
    c.validate();
    grid.push_back(c);
  }
  return grid;
}

}  // namespace qcrot
