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

#include "qcrot/crot.hpp"

#include <cmath>
#include <numeric>

#include "qcrot/error.hpp"
#include "qcrot/synth.hpp"

namespace qcrot {

std::vector<QubitSpan> crot_spans(std::size_t m) {
  return {{RegisterLabel::kAncilla, 0, 1},
          {RegisterLabel::kRegA, 1, m},
          {RegisterLabel::kRegE, 1 + m, m}};
}

Circuit build_pe_stage(const AngleOracle& oracle, DiagonalMode mode) {
  const std::size_t m = oracle.width();
  Circuit c(1 + 2 * m);
  c.set_spans(crot_spans(m));
  for (std::size_t i = 0; i < m; ++i) c.add(Gate::h(1 + i));

  const DiagonalSpec spec = DiagonalSpec::from_phases(oracle.table());
  std::vector<std::size_t> reg_e(m);
  std::iota(reg_e.begin(), reg_e.end(), 1 + m);
  for (std::size_t i = 0; i < m; ++i) {
    if (mode == DiagonalMode::kComposite) {
      c.add(Gate::diagonal(reg_e, spec.power_of_two(i).phases, {1 + i}));
      continue;
    }
    std::vector<std::size_t> mapping{1 + i};
    mapping.insert(mapping.end(), reg_e.begin(), reg_e.end());
    c.append(synthesize_controlled_diagonal(spec, i), mapping);
  }

  std::vector<std::size_t> reg_a(m);
  std::iota(reg_a.begin(), reg_a.end(), std::size_t{1});
  c.append(inverse_qft(m), reg_a);
  return c;
}

Circuit build_ry_cascade(std::size_t m) {
  Circuit c(1 + 2 * m);
  c.set_spans(crot_spans(m));
  // The top qubit's angle is a full turn (canonical 0); it stays in the
  // list so the cascade always has m gates.
  for (std::size_t i = 0; i < m; ++i) {
    c.add(Gate::cry(1 + i, 0, std::ldexp(1.0, static_cast<int>(i) + 1 - static_cast<int>(m))));
  }
  return c;
}

Circuit build_crot_circuit(const AngleOracle& oracle, bool uncompute_reg_a, DiagonalMode mode) {
  const std::size_t m = oracle.width();
  const Circuit pe = build_pe_stage(oracle, mode);
  Circuit c(1 + 2 * m);
  c.set_spans(crot_spans(m));
  c.append(pe);
  c.append(build_ry_cascade(m));
  if (uncompute_reg_a) c.append(inverse(pe));
  return c;
}

CrotResult run_crot(const AngleOracle& oracle, const StateVector& input_reg_e, DiagonalMode mode) {
  const std::size_t m = oracle.width();
  if (input_reg_e.num_qubits() != m) {
    throw DomainError("Reg.E input has " + std::to_string(input_reg_e.num_qubits()) +
                      " qubits, oracle width is " + std::to_string(m));
  }
  const Circuit circuit = build_crot_circuit(oracle, true, mode);
  StateVector state = tensor(input_reg_e, StateVector::basis(1 + m, 0));
  simulate_in_place(circuit, state);

  CrotResult result{StateVector::basis(m, 0), 0.0, 0.0};
  result.success_probability = state.postselect(0, 1);
  const double on_zero = state.register_probability(1, m, 0);
  result.reg_a_residual = std::sqrt(off_register_weight(state, 1, m));
  if (on_zero < kPostSelectionFloor) {
    throw PostSelectionError("Reg.A has no weight on |0...0> after uncompute");
  }
  result.output_state = StateVector::from_amplitudes(state.slice(1 + m, m, /*ancilla=*/1));
  return result;
}

}  // namespace qcrot
