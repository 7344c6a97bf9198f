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
 * Controlled-rotation module.
 *
 * Wire layout over 1 + 2m qubits:
 *
 *   0            ancilla
 *   1 .. m       Reg.A   (phase-estimation output, holds ~2^m theta_k)
 *   m+1 .. 2m    Reg.E   (oracle index k)
 *
 * Stages: H on Reg.A; controlled-D^{2^i} on Reg.E from Reg.A qubit i with
 * D = diag(e^{2 pi i theta_k}); inverse QFT on Reg.A; CRY cascade from Reg.A
 * onto the ancilla with angle 2^{i+1-m} turns for qubit i, so the ancilla
 * picks up amplitude sin(4 pi a / 2^m) on |1>.
 */

#pragma once

#include <cstddef>

#include "qcrot/circuit.hpp"
#include "qcrot/oracle.hpp"

namespace qcrot {

/// How the controlled diagonal powers are realized. Composite keeps each one
/// as a single controlled DIAGONAL gate (fast to simulate, not exportable).
enum class DiagonalMode { kSynthesized, kComposite };

/// Spans for the layout above.
std::vector<QubitSpan> crot_spans(std::size_t m);

/// H layer, controlled powers and inverse QFT.
Circuit build_pe_stage(const AngleOracle& oracle,
                       DiagonalMode mode = DiagonalMode::kSynthesized);

/// CRY from each Reg.A qubit onto the ancilla.
Circuit build_ry_cascade(std::size_t m);

/// PE stage, Ry cascade and, when uncompute_reg_a is set, the inverse PE
/// stage.
Circuit build_crot_circuit(const AngleOracle& oracle, bool uncompute_reg_a,
                           DiagonalMode mode = DiagonalMode::kSynthesized);

struct CrotResult {
  /// Reg.E after post-selecting the ancilla on 1 and projecting Reg.A onto
  /// |0...0>, renormalized.
  StateVector output_state;
  double success_probability = 0.0;
  /// Norm of the post-selected state outside Reg.A = |0...0>.
  double reg_a_residual = 0.0;
};

/// Runs the uncomputing circuit on |0>|0...0>|input>. Throws
/// PostSelectionError when the ancilla never reads 1.
CrotResult run_crot(const AngleOracle& oracle, const StateVector& input_reg_e,
                    DiagonalMode mode = DiagonalMode::kSynthesized);

}  // namespace qcrot
