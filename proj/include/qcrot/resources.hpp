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
 * Closed-form gate counts for the controlled-rotation module and the
 * methods it is compared against.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcrot/circuit.hpp"

namespace qcrot {

struct CostReport {
  std::string method;  // ours, qfbe, newton, measurement_based, adder
  std::size_t m = 0;
  std::string qubit_class;
  std::string gate_class;
  /// Set only for methods with a closed form.
  std::optional<std::uint64_t> gate_count;
  std::map<std::string, std::uint64_t> breakdown;
};

/// m (2^{m+1} - 3) + m (m + 1) / 2 + m, split into controlled_powers,
/// inverse_qft and ry_cascade.
CostReport ours_gate_count(std::size_t m);

/// 34 m^3 - 16 m^2 + 4 m.
std::uint64_t qfbe_gate_count(std::size_t m);

/// Smallest m with ours > qfbe.
std::size_t crossover_m();

struct AdderCost {
  std::uint64_t qubits = 0;   // 3m + 1
  std::uint64_t cnot = 0;     // 20m + 2
  std::uint64_t toffoli = 0;  // 20m - 10
};

AdderCost adder_cost(std::size_t m);

/// Complexity-class rows for newton, qfbe, measurement_based and ours,
/// with closed forms filled in at `m`, plus an adder annotation row.
std::vector<CostReport> table1_report(std::size_t m = 8);

/// Plain-text rendering of table1_report.
std::string table1_text(std::size_t m = 8);

struct CensusComparison {
  std::size_t m = 0;
  GateCensus total;  // whole circuit (no uncompute)
  std::uint64_t hadamard_layer = 0;
  std::uint64_t controlled_powers = 0;
  std::uint64_t inverse_qft = 0;  // H + CPHASE
  std::uint64_t swaps = 0;
  std::uint64_t ry_cascade = 0;
  CostReport formula;
  /// Census items the closed form does not count.
  std::map<std::string, std::uint64_t> delta;
  /// Every formula component equals its census count and the totals differ
  /// exactly by the delta.
  bool consistent = false;
};

/// Builds the synthesized rotation circuit for a fixed generic oracle
/// (theta_0 = 0, every Walsh angle of every power nonzero) and compares its
/// census with ours_gate_count. m <= 8.
CensusComparison census_vs_formula(std::size_t m);

/// `m,ours,qfbe` rows for m = 1..max_m.
std::string resources_csv(std::size_t max_m);

/// Standalone SVG: both curves on a log-scale y axis.
std::string resources_svg(std::size_t max_m);

}  // namespace qcrot
