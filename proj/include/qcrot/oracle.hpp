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
 * Angle oracles k -> theta_k (turns) for the controlled-rotation module.
 *
 * The rotation module writes a ~= 2^m theta_k into Reg.A and rotates the
 * ancilla by a total of 4 pi a / 2^m radians, so an oracle that wants the
 * ancilla amplitude f stores theta = arcsin(f) / (4 pi). Valid oracles have
 * theta_k in [0, 1/4], i.e. amplitudes sin(4 pi theta_k) in [0, 1].
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qcrot {

class AngleOracle {
 public:
  /// Throws ParameterError unless every theta is in [0, 1/4] and the table
  /// has 2^width entries.
  AngleOracle(std::size_t width, std::vector<double> table, std::string name,
              std::map<std::string, double> params = {});

  std::size_t width() const { return width_; }
  double theta(std::uint64_t k) const { return table_.at(k); }
  const std::vector<double>& table() const { return table_; }
  /// sin(4 pi theta_k).
  double amplitude(std::uint64_t k) const;

  const std::string& name() const { return name_; }
  const std::map<std::string, double>& params() const { return params_; }

  /// Same oracle with every theta floored onto the 2^-width grid.
  AngleOracle quantized() const;
  /// True when every theta already lies on the 2^-width grid.
  bool exactly_representable(double tolerance = 1e-12) const;

  /// {"name", "m", "params"}; table oracles also carry "table".
  nlohmann::json to_json() const;
  /// Rebuilds through the named factory. Throws ValidationError on unknown
  /// names or missing parameters.
  static AngleOracle from_json(const nlohmann::json& j);

 private:
  std::size_t width_;
  std::vector<double> table_;
  std::string name_;
  std::map<std::string, double> params_;
};

/// floor(2^m theta) / 2^m, robust to theta sitting a few ulps under a grid
/// point.
double quantize_turns(double theta, std::size_t m);

/// Register reading k as a fraction k / 2^m with k = 0 replaced by 1.
double guarded_fraction(std::uint64_t k, std::size_t m);

/// theta(k) = arcsin(C / lambda_k) / (4 pi), lambda_k = guarded_fraction(k).
/// Throws ParameterError when C 2^m > 1, unless clamp is set, in which case
/// readings below C get amplitude 1 (they are unreachable when every
/// eigenvalue is at least C and phase estimation is exact).
AngleOracle make_hhl_oracle(std::size_t m, double c, bool clamp = false);

/// theta(k) = arcsin(gamma (sqrt(l) - tau) / sqrt(l)) / (4 pi), the argument
/// clamped at 0 from below. Throws ParameterError listing the indices whose
/// argument exceeds 1. Default lambda_of_k is guarded_fraction.
AngleOracle make_qsvt_oracle(std::size_t m, double gamma, double tau,
                             std::function<double(std::uint64_t)> lambda_of_k = {});

/// theta(k) = arcsin(rho (1 + lambda2 / (sigma2 beta2))) / (4 pi). The
/// default pair_of_k splits k into a low half (sigma^2 register) and a high
/// half (beta^2 register), each read as a guarded fraction.
AngleOracle make_qaop_oracle(
    std::size_t m, double rho, double lambda2,
    std::function<std::pair<double, double>(std::uint64_t)> pair_of_k = {});

/// theta(k) = arcsin(1 / sqrt(lambda_k)) / (4 pi), lambda_k >= 1. The
/// default lambda_of_k is 1 / guarded_fraction(k).
AngleOracle make_qkpca_oracle(std::size_t m,
                              std::function<double(std::uint64_t)> lambda_of_k = {});

/// theta(k) = floor(k r) / 2^m, exactly representable; r in [0, 1/4].
AngleOracle make_exact_oracle(std::size_t m, double r = 0.25);

AngleOracle make_zero_oracle(std::size_t m);

AngleOracle make_table_oracle(std::vector<double> table);

/**
 * Parses "exact[:r=..]", "zero", "hhl:C=..[,clamp=1]" (or "hhl:s=..,kappa=.."),
 * "qsvt:gamma=..,tau=..",
 * "qaop:rho=..,lambda2=..", "qkpca", or a JSON descriptor (text starting
 * with '{'). Throws ValidationError on malformed text.
 */
AngleOracle parse_oracle(const std::string& text, std::size_t m);

}  // namespace qcrot
