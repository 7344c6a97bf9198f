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

#include "qcrot/synth.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <tuple>

#include "qcrot/error.hpp"

namespace qcrot {

namespace {

// Walsh angles below this (in turns) produce an RZ within rounding of the
// identity and are dropped.
constexpr double kZeroAngle = 1e-13;

double unit_interval(double x) {
  double r = x - std::floor(x);
  return r >= 1.0 ? 0.0 : r;
}

bool is_zero_angle(double turns) { return std::abs(turns) < kZeroAngle; }

// Emitters let one network builder produce both the plain and the
// controlled variants.
struct Emitter {
  std::size_t offset = 0;          // target qubit q lives on wire offset + q
  std::optional<std::size_t> ctrl;  // control wire for the controlled form

  void rz(Circuit& c, std::size_t q, double t) const {
    if (ctrl) {
      c.add(Gate::crz(*ctrl, offset + q, t));
    } else {
      c.add(Gate::rz(offset + q, t));
    }
  }
  void cnot(Circuit& c, std::size_t from, std::size_t to) const {
    if (ctrl) {
      c.add(Gate::toffoli(*ctrl, offset + from, offset + to));
    } else {
      c.add(Gate::cnot(offset + from, offset + to));
    }
  }
};

// For each target t (highest bit of the parity mask), walk the subsets of
// the lower qubits in Gray-code order. The parity currently folded into t
// is tracked so skipped (zero) angles cost no CNOTs.
void emit_walsh_network(Circuit& circuit, const std::vector<double>& angles,
                        std::size_t m, const Emitter& emit) {
  for (std::size_t t = 0; t < m; ++t) {
    std::uint64_t folded = 0;
    const std::uint64_t subsets = std::uint64_t{1} << t;
    for (std::uint64_t i = 0; i < subsets; ++i) {
      const std::uint64_t lower = i ^ (i >> 1);
      const double a = angles[lower | (std::uint64_t{1} << t)];
      if (is_zero_angle(a)) continue;
      for (std::uint64_t diff = folded ^ lower; diff != 0; diff &= diff - 1) {
        emit.cnot(circuit, static_cast<std::size_t>(std::countr_zero(diff)), t);
      }
      folded = lower;
      emit.rz(circuit, t, a);
    }
    for (std::uint64_t diff = folded; diff != 0; diff &= diff - 1) {
      emit.cnot(circuit, static_cast<std::size_t>(std::countr_zero(diff)), t);
    }
  }
}

// Barenco et al. (1995) ladder: C^kX with k - 2 borrowed qubits, 4(k - 2)
// Toffolis.
void mcx_ladder(Circuit& c, std::span<const std::size_t> x, std::size_t y,
                std::span<const std::size_t> d) {
  const std::size_t k = x.size();
  const auto target_of = [&](std::size_t j) { return j == k ? y : d[j - 2]; };
  const auto half = [&](std::size_t top) {
    for (std::size_t j = top; j >= 3; --j) c.add(Gate::toffoli(x[j - 1], d[j - 3], target_of(j)));
    c.add(Gate::toffoli(x[0], x[1], d[0]));
    for (std::size_t j = 3; j <= top; ++j) c.add(Gate::toffoli(x[j - 1], d[j - 3], target_of(j)));
  };
  half(k);
  half(k - 1);
}

}  // namespace

// ---------------------------------------------------------------------------

DiagonalSpec DiagonalSpec::from_phases(std::vector<double> phases) {
  if (phases.size() < 2 || !is_power_of_two(phases.size())) {
    throw ValidationError("phase list length must be a power of two >= 2, got " +
                          std::to_string(phases.size()));
  }
  for (double& p : phases) {
    if (!std::isfinite(p)) throw ValidationError("phases must be finite");
    p = unit_interval(p);
  }
  DiagonalSpec spec;
  spec.width = static_cast<std::size_t>(std::countr_zero(phases.size()));
  spec.phases = std::move(phases);
  return spec;
}

DiagonalSpec DiagonalSpec::power_of_two(std::size_t power) const {
  DiagonalSpec out = *this;
  // Doubling a double is exact, so one ldexp then a reduction is as good as
  // reducing after every step (until the exponent saturates).
  for (double& p : out.phases) {
    std::size_t left = power;
    while (left > 0) {
      const int step = static_cast<int>(std::min<std::size_t>(left, 512));
      p = unit_interval(std::fmod(std::ldexp(p, step), 1.0));
      left -= static_cast<std::size_t>(step);
    }
  }
  return out;
}

Circuit qft(std::size_t m) {
  if (m < 1) throw DomainError("QFT needs at least one qubit");
  Circuit c(m);
  for (std::size_t q = m; q-- > 0;) {
    c.add(Gate::h(q));
    for (std::size_t l = 2; l <= q + 1; ++l) {
      c.add(Gate::cphase(q - l + 1, q, std::ldexp(1.0, -static_cast<int>(l))));
    }
  }
  for (std::size_t q = 0; q < m / 2; ++q) c.add(Gate::swap(q, m - 1 - q));
  return c;
}

Circuit inverse_qft(std::size_t m) { return inverse(qft(m)); }

std::vector<double> walsh_angles(std::span<const double> phases) {
  const std::size_t n = phases.size();
  if (n < 1 || !is_power_of_two(n)) throw DomainError("phase vector length must be a power of two");
  std::vector<double> w(phases.begin(), phases.end());
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double a = w[j];
        const double b = w[j + h];
        w[j] = a + b;
        w[j + h] = a - b;
      }
    }
  }
  std::vector<double> angles(n);
  angles[0] = canonical_turns(phases[0]);
  for (std::size_t s = 1; s < n; ++s) {
    angles[s] = canonical_turns(-2.0 * w[s] / static_cast<double>(n));
  }
  return angles;
}

Circuit synthesize_diagonal(const DiagonalSpec& spec) {
  Circuit c(spec.width);
  emit_walsh_network(c, walsh_angles(spec.phases), spec.width, Emitter{0, std::nullopt});
  return c;
}

Circuit synthesize_controlled_diagonal(const DiagonalSpec& spec, std::size_t power) {
  const DiagonalSpec powered = spec.power_of_two(power);
  const std::vector<double> angles = walsh_angles(powered.phases);
  Circuit c(1 + spec.width);
  if (!is_zero_angle(angles[0])) c.add(Gate::rz(0, angles[0]));
  emit_walsh_network(c, angles, spec.width, Emitter{1, std::size_t{0}});
  return c;
}

void append_mcx(Circuit& circuit, std::span<const std::size_t> controls,
                std::size_t target, std::span<const std::size_t> dirty) {
  const std::size_t k = controls.size();
  if (k == 0) {
    circuit.add(Gate::x(target));
    return;
  }
  if (k == 1) {
    circuit.add(Gate::cnot(controls[0], target));
    return;
  }
  if (k == 2) {
    circuit.add(Gate::toffoli(controls[0], controls[1], target));
    return;
  }
  if (dirty.size() >= k - 2) {
    mcx_ladder(circuit, controls, target, dirty.first(k - 2));
    return;
  }
  if (dirty.empty()) {
    throw DomainError("C^" + std::to_string(k) + "X needs a borrowed qubit");
  }
  // Barenco et al. (1995) split around one borrowed qubit d: halves A and B,
  // y ^= AND(B) d, d ^= AND(A), twice.
  const std::size_t d = dirty[0];
  const std::size_t k1 = (k + 1) / 2;
  const std::vector<std::size_t> a(controls.begin(), controls.begin() + k1);
  std::vector<std::size_t> b_and_d(controls.begin() + k1, controls.end());
  b_and_d.push_back(d);
  std::vector<std::size_t> pool_for_a(controls.begin() + k1, controls.end());
  pool_for_a.push_back(target);
  for (int rep = 0; rep < 2; ++rep) {
    append_mcx(circuit, b_and_d, target, a);
    append_mcx(circuit, a, d, pool_for_a);
  }
}

Circuit multi_controlled_rz(std::size_t num_controls, double angle, bool use_ancilla) {
  const std::size_t m = num_controls;
  if (m < 1) throw DomainError("multi-controlled RZ needs at least one control");
  const bool ancilla = use_ancilla && m >= 3;
  Circuit c(m + 1 + (ancilla ? 1 : 0));
  const std::size_t t = m;
  if (m == 1) {
    c.add(Gate::crz(0, t, angle));
    return c;
  }
  if (m == 2) {
    c.add(Gate::crz(1, t, angle / 2));
    c.add(Gate::cnot(0, 1));
    c.add(Gate::crz(1, t, -angle / 2));
    c.add(Gate::cnot(0, 1));
    c.add(Gate::crz(0, t, angle / 2));
    return c;
  }
  std::vector<std::size_t> controls(m);
  std::iota(controls.begin(), controls.end(), std::size_t{0});
  const std::size_t pool[1] = {t};
  if (ancilla) {
    const std::size_t anc = m + 1;
    append_mcx(c, controls, anc, pool);
    c.add(Gate::crz(anc, t, angle));
    append_mcx(c, controls, anc, pool);
    return c;
  }
  // Phase identity: a*c + a*x - a*(c xor x) = 2a * c * x, with x = AND(rest)
  // folded into the last control and back out.
  const std::size_t last = m - 1;
  const std::span<const std::size_t> rest(controls.data(), m - 1);
  c.add(Gate::crz(last, t, angle / 2));
  append_mcx(c, rest, last, pool);
  c.add(Gate::crz(last, t, -angle / 2));
  append_mcx(c, rest, last, pool);
  std::vector<std::size_t> mapping(m);  // P_{m-1} on controls 0..m-2, target t
  std::iota(mapping.begin(), mapping.end(), std::size_t{0});
  mapping[m - 1] = t;
  c.append(multi_controlled_rz(m - 1, angle / 2, false), mapping);
  return c;
}

std::vector<Cube> merge_cubes(const DiagonalSpec& spec) {
  const std::uint64_t full = (std::uint64_t{1} << spec.width) - 1;
  std::vector<Cube> cubes;
  cubes.reserve(spec.phases.size());
  for (std::uint64_t k = 0; k < spec.phases.size(); ++k) {
    cubes.push_back({full, k, canonical_turns(spec.phases[k])});
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t b = 0; b < spec.width; ++b) {
      const std::uint64_t bit = std::uint64_t{1} << b;
      // Cubes that fix bit b, keyed by (mask, value with b cleared).
      std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> partner;
      std::vector<bool> used(cubes.size(), false);
      std::vector<Cube> next;
      for (std::size_t i = 0; i < cubes.size(); ++i) {
        const Cube& cu = cubes[i];
        if (!(cu.mask & bit)) continue;
        const auto key = std::make_pair(cu.mask, cu.value & ~bit);
        const auto it = partner.find(key);
        if (it != partner.end() && !used[it->second] &&
            std::abs(canonical_turns(cubes[it->second].angle - cu.angle)) < kGateTolerance) {
          used[it->second] = used[i] = true;
          next.push_back({cu.mask & ~bit, cu.value & ~bit, cubes[it->second].angle});
          partner.erase(it);
          changed = true;
        } else {
          partner[key] = i;
        }
      }
      for (std::size_t i = 0; i < cubes.size(); ++i) {
        if (!used[i]) next.push_back(cubes[i]);
      }
      std::sort(next.begin(), next.end(), [](const Cube& x, const Cube& y) {
        return std::tie(x.mask, x.value) > std::tie(y.mask, y.value);
      });
      cubes = std::move(next);
    }
  }
  std::sort(cubes.begin(), cubes.end(), [](const Cube& x, const Cube& y) {
    return std::tie(x.value, x.mask) < std::tie(y.value, y.mask);
  });
  return cubes;
}

Circuit synthesize_cd_product(const DiagonalSpec& spec, bool use_ancilla) {
  const std::vector<Cube> cubes = merge_cubes(spec);
  bool needs_ancilla = false;
  for (const Cube& cu : cubes) {
    if (std::popcount(cu.mask) >= 3 && !is_zero_angle(cu.angle)) needs_ancilla = true;
  }
  const bool ancilla = use_ancilla && needs_ancilla;
  Circuit c(1 + spec.width + (ancilla ? 1 : 0));
  for (const Cube& cu : cubes) {
    if (is_zero_angle(cu.angle)) continue;
    std::vector<std::size_t> fixed;
    for (std::uint64_t bits = cu.mask; bits != 0; bits &= bits - 1) {
      fixed.push_back(1 + static_cast<std::size_t>(std::countr_zero(bits)));
    }
    if (fixed.empty()) {
      c.add(Gate::rz(0, cu.angle));
      continue;
    }
    std::vector<std::size_t> flips;
    for (std::size_t q : fixed) {
      if (!((cu.value >> (q - 1)) & 1)) flips.push_back(q);
    }
    for (std::size_t q : flips) c.add(Gate::x(q));
    // The phase is symmetric in its operands, so the control wire can play
    // the target.
    const std::size_t k = fixed.size();
    const bool local_ancilla = ancilla && k >= 3;
    std::vector<std::size_t> mapping = fixed;
    mapping.push_back(0);
    if (local_ancilla) mapping.push_back(1 + spec.width);
    c.append(multi_controlled_rz(k, cu.angle, local_ancilla), mapping);
    for (std::size_t q : flips) c.add(Gate::x(q));
  }
  return c;
}

}  // namespace qcrot
