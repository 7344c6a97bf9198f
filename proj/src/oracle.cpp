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

#include "qcrot/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qcrot/error.hpp"
#include "qcrot/statevector.hpp"

namespace qcrot {

namespace {

constexpr double kFourPi = 2.0 * kTwoPi;
constexpr std::size_t kMaxWidth = 24;

void check_width(std::size_t m) {
  if (m < 1 || m > kMaxWidth) {
    throw ParameterError("oracle width must be in [1, " + std::to_string(kMaxWidth) +
                         "], got " + std::to_string(m));
  }
}

std::string list_indices(const std::vector<std::uint64_t>& ks) {
  std::ostringstream s;
  for (std::size_t i = 0; i < ks.size() && i < 8; ++i) s << (i ? ", " : "") << ks[i];
  if (ks.size() > 8) s << ", ... (" << ks.size() << " total)";
  return s.str();
}

// arcsin(x)/(4 pi) for every k, collecting the indices with x > 1.
template <typename F>
std::vector<double> tabulate(std::size_t m, const char* what, F&& argument) {
  const std::uint64_t n = std::uint64_t{1} << m;
  std::vector<double> table(n);
  std::vector<std::uint64_t> bad;
  for (std::uint64_t k = 0; k < n; ++k) {
    const double x = argument(k);
    if (!std::isfinite(x) || x > 1.0) {
      bad.push_back(k);
      continue;
    }
    table[k] = std::asin(std::max(x, 0.0)) / kFourPi;
  }
  if (!bad.empty()) {
    throw ParameterError(std::string(what) + ": rotation amplitude exceeds 1 at k = " +
                         list_indices(bad));
  }
  return table;
}

double param(const nlohmann::json& params, const char* key) {
  if (!params.contains(key) || !params[key].is_number()) {
    throw ValidationError(std::string("oracle descriptor is missing numeric parameter '") +
                          key + "'");
  }
  return params[key].get<double>();
}

}  // namespace

AngleOracle::AngleOracle(std::size_t width, std::vector<double> table, std::string name,
                         std::map<std::string, double> params)
    : width_(width), table_(std::move(table)), name_(std::move(name)),
      params_(std::move(params)) {
  check_width(width_);
  if (table_.size() != (std::size_t{1} << width_)) {
    throw ParameterError("oracle table needs 2^" + std::to_string(width_) + " entries, got " +
                         std::to_string(table_.size()));
  }
  for (std::size_t k = 0; k < table_.size(); ++k) {
    const double t = table_[k];
    if (!(t >= 0.0 && t <= 0.25)) {
      throw ParameterError("theta[" + std::to_string(k) + "] = " + std::to_string(t) +
                           " is outside [0, 1/4] turns");
    }
  }
}

double AngleOracle::amplitude(std::uint64_t k) const {
  return std::sin(kFourPi * theta(k));
}

AngleOracle AngleOracle::quantized() const {
  std::vector<double> q(table_.size());
  for (std::size_t k = 0; k < q.size(); ++k) q[k] = quantize_turns(table_[k], width_);
  auto params = params_;
  params["quantized"] = 1.0;
  return AngleOracle(width_, std::move(q), name_, std::move(params));
}

bool AngleOracle::exactly_representable(double tolerance) const {
  const double scale = std::ldexp(1.0, static_cast<int>(width_));
  for (double t : table_) {
    const double v = t * scale;
    if (std::abs(v - std::round(v)) > tolerance * scale) return false;
  }
  return true;
}

nlohmann::json AngleOracle::to_json() const {
  nlohmann::json j;
  j["name"] = name_;
  j["m"] = width_;
  j["params"] = nlohmann::json::object();
  for (const auto& [k, v] : params_) j["params"][k] = v;
  if (name_ == "table") j["table"] = table_;
  return j;
}

AngleOracle AngleOracle::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("name") || !j["name"].is_string()) {
    throw ValidationError("oracle descriptor needs a string 'name'");
  }
  const std::string name = j["name"].get<std::string>();
  const nlohmann::json params = j.value("params", nlohmann::json::object());
  if (name == "table") {
    if (!j.contains("table") || !j["table"].is_array()) {
      throw ValidationError("table oracle descriptor needs a 'table' array");
    }
    return make_table_oracle(j["table"].get<std::vector<double>>());
  }
  if (!j.contains("m") || !j["m"].is_number_unsigned()) {
    throw ValidationError("oracle descriptor needs an unsigned integer 'm'");
  }
  const auto m = j["m"].get<std::size_t>();
  AngleOracle base = [&] {
    if (name == "hhl") {
      const bool clamp = params.contains("clamp") && param(params, "clamp") != 0.0;
      // C may also be given as s / kappa.
      const double c = params.contains("C") || !params.contains("s")
                           ? param(params, "C")
                           : param(params, "s") / param(params, "kappa");
      return make_hhl_oracle(m, c, clamp);
    }
    if (name == "qsvt") return make_qsvt_oracle(m, param(params, "gamma"), param(params, "tau"));
    if (name == "qaop") return make_qaop_oracle(m, param(params, "rho"), param(params, "lambda2"));
    if (name == "qkpca") return make_qkpca_oracle(m);
    if (name == "exact") return make_exact_oracle(m, params.contains("r") ? param(params, "r") : 0.25);
    if (name == "zero") return make_zero_oracle(m);
    throw ValidationError("unknown oracle name '" + name + "'");
  }();
  if (params.contains("quantized") && param(params, "quantized") != 0.0) return base.quantized();
  return base;
}

double quantize_turns(double theta, std::size_t m) {
  const double scale = std::ldexp(1.0, static_cast<int>(m));
  return std::floor(theta * scale + 1e-9) / scale;
}

double guarded_fraction(std::uint64_t k, std::size_t m) {
  return std::ldexp(static_cast<double>(k == 0 ? 1 : k), -static_cast<int>(m));
}

AngleOracle make_hhl_oracle(std::size_t m, double c, bool clamp) {
  check_width(m);
  if (!(c > 0.0) || !(c <= 1.0)) throw ParameterError("hhl oracle needs 0 < C <= 1");
  if (!clamp && c * std::ldexp(1.0, static_cast<int>(m)) > 1.0) {
    throw ParameterError("hhl oracle needs C <= 2^-m (C = " + std::to_string(c) + ", m = " +
                         std::to_string(m) + ")");
  }
  auto table = tabulate(m, "hhl", [&](std::uint64_t k) {
    const double x = c / guarded_fraction(k, m);
    return clamp ? std::min(x, 1.0) : x;
  });
  std::map<std::string, double> params{{"C", c}};
  if (clamp) params["clamp"] = 1.0;
  return AngleOracle(m, std::move(table), "hhl", std::move(params));
}

AngleOracle make_qsvt_oracle(std::size_t m, double gamma, double tau,
                             std::function<double(std::uint64_t)> lambda_of_k) {
  check_width(m);
  if (!lambda_of_k) lambda_of_k = [m](std::uint64_t k) { return guarded_fraction(k, m); };
  auto table = tabulate(m, "qsvt", [&](std::uint64_t k) {
    const double r = std::sqrt(lambda_of_k(k));
    return gamma * (r - tau) / r;
  });
  return AngleOracle(m, std::move(table), "qsvt", {{"gamma", gamma}, {"tau", tau}});
}

AngleOracle make_qaop_oracle(std::size_t m, double rho, double lambda2,
                             std::function<std::pair<double, double>(std::uint64_t)> pair_of_k) {
  check_width(m);
  if (!pair_of_k) {
    const std::size_t lo = m - m / 2;
    const std::size_t hi = m / 2;
    pair_of_k = [lo, hi](std::uint64_t k) {
      const std::uint64_t s = k & ((std::uint64_t{1} << lo) - 1);
      const double sigma2 = guarded_fraction(s, lo);
      const double beta2 = hi == 0 ? 1.0 : guarded_fraction(k >> lo, hi);
      return std::make_pair(sigma2, beta2);
    };
  }
  auto table = tabulate(m, "qaop", [&](std::uint64_t k) {
    const auto [sigma2, beta2] = pair_of_k(k);
    return rho * (1.0 + lambda2 / (sigma2 * beta2));
  });
  return AngleOracle(m, std::move(table), "qaop", {{"rho", rho}, {"lambda2", lambda2}});
}

AngleOracle make_qkpca_oracle(std::size_t m, std::function<double(std::uint64_t)> lambda_of_k) {
  check_width(m);
  if (!lambda_of_k) lambda_of_k = [m](std::uint64_t k) { return 1.0 / guarded_fraction(k, m); };
  const std::uint64_t n = std::uint64_t{1} << m;
  std::vector<std::uint64_t> bad;
  for (std::uint64_t k = 0; k < n; ++k) {
    if (!(lambda_of_k(k) >= 1.0)) bad.push_back(k);
  }
  if (!bad.empty()) {
    throw ParameterError("qkpca: eigenvalue below 1 at k = " + list_indices(bad));
  }
  auto table = tabulate(m, "qkpca", [&](std::uint64_t k) { return 1.0 / std::sqrt(lambda_of_k(k)); });
  return AngleOracle(m, std::move(table), "qkpca");
}

AngleOracle make_exact_oracle(std::size_t m, double r) {
  check_width(m);
  if (!(r >= 0.0 && r <= 0.25)) throw ParameterError("exact oracle needs r in [0, 1/4]");
  const std::uint64_t n = std::uint64_t{1} << m;
  std::vector<double> table(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    table[k] = std::ldexp(std::floor(static_cast<double>(k) * r), -static_cast<int>(m));
  }
  return AngleOracle(m, std::move(table), "exact", {{"r", r}});
}

AngleOracle make_zero_oracle(std::size_t m) {
  check_width(m);
  return AngleOracle(m, std::vector<double>(std::size_t{1} << m, 0.0), "zero");
}

AngleOracle make_table_oracle(std::vector<double> table) {
  if (table.size() < 2 || !is_power_of_two(table.size())) {
    throw ParameterError("oracle table length must be a power of two >= 2");
  }
  std::size_t m = 0;
  while ((std::size_t{1} << m) < table.size()) ++m;
  return AngleOracle(m, std::move(table), "table");
}

AngleOracle parse_oracle(const std::string& text, std::size_t m) {
  if (!text.empty() && text.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError(std::string("oracle JSON: ") + e.what());
    }
    if (j.is_object() && !j.contains("m") && j.value("name", "") != "table") j["m"] = m;
    return AngleOracle::from_json(j);
  }
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  nlohmann::json params = nlohmann::json::object();
  if (colon != std::string::npos) {
    std::stringstream rest(text.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw ValidationError("oracle parameter '" + item + "' is not key=value");
      }
      const std::string value = item.substr(eq + 1);
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(value, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != value.size()) {
        throw ValidationError("oracle parameter '" + item + "' has a non-numeric value");
      }
      params[item.substr(0, eq)] = v;
    }
  }
  nlohmann::json j{{"name", name}, {"m", m}, {"params", params}};
  return AngleOracle::from_json(j);
}

}  // namespace qcrot
