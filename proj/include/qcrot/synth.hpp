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
 * Circuit synthesis: inverse QFT, CNOT+RZ networks for diagonal unitaries,
 * their controlled versions, multi-controlled RZ, and the per-index
 * product construction with cube merging.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qcrot/circuit.hpp"

namespace qcrot {

/// diag(e^{2 pi i phases[k]}) over `width` qubits. Phases are in turns and
/// kept in [0, 1).
struct DiagonalSpec {
  std::size_t width = 0;
  std::vector<double> phases;

  /// Validates the length (a power of two, at least 2) and canonicalizes.
  static DiagonalSpec from_phases(std::vector<double> phases);

  /// Spec of D^{2^power}: every phase doubled `power` times, mod 1.
  DiagonalSpec power_of_two(std::size_t power) const;
};

/// FT^dagger on m qubits: H + CPHASE ladder followed by bit-reversal swaps.
Circuit inverse_qft(std::size_t m);

/// The forward transform, whose adjoint is inverse_qft.
Circuit qft(std::size_t m);

/**
 * Walsh angles of a phase vector: a[S] for every nonempty parity mask S so
 * that phases[k] = phases[0] + sum_S a[S] * parity(k & S) (mod 1).
 * a[0] holds phases[0]. Angles are canonical turns.
 */
std::vector<double> walsh_angles(std::span<const double> phases);

/// RZ/CNOT network equal to diag(e^{2 pi i theta_k}) up to the global phase
/// e^{2 pi i theta_0}. Zero Walsh angles are elided.
Circuit synthesize_diagonal(const DiagonalSpec& spec);

/**
 * Controlled-D^{2^power} over 1 + m qubits, control on qubit 0 and the
 * diagonal on qubits 1..m. The same network as synthesize_diagonal with
 * RZ -> CRZ and CNOT -> TOFFOLI, plus one RZ on the control wire carrying
 * the (now relative) phase theta_0 when it is nonzero.
 */
Circuit synthesize_controlled_diagonal(const DiagonalSpec& spec,
                                       std::size_t power);

/// Appends C^kX(controls -> target) built from Toffolis. `dirty` lists
/// qubits that may be borrowed in any state; they are restored. Needs at
/// least one dirty qubit when k >= 3.
void append_mcx(Circuit& circuit, std::span<const std::size_t> controls,
                std::size_t target, std::span<const std::size_t> dirty);

/**
 * RZ(angle) on qubit m iff qubits 0..m-1 are all 1. With use_ancilla and
 * m >= 3 a clean ancilla at qubit m + 1 holds the AND of the controls;
 * otherwise the target wire itself is borrowed as scratch.
 */
Circuit multi_controlled_rz(std::size_t num_controls, double angle,
                            bool use_ancilla);

/// A subcube of {0,1}^m: indices k with (k & mask) == value.
struct Cube {
  std::uint64_t mask = 0;
  std::uint64_t value = 0;
  double angle = 0.0;

  bool operator==(const Cube&) const = default;
};

/// Greedy cube merging: pairs with equal angle differing in one fixed bit
/// are merged, bit by bit, until nothing changes.
std::vector<Cube> merge_cubes(const DiagonalSpec& spec);

/**
 * Controlled-D over 1 + m qubits (control on qubit 0) as one
 * multi-controlled RZ per merged cube, with X conjugation on 0-valued bits.
 * With use_ancilla a clean ancilla is added at qubit 1 + m when some cube
 * fixes three or more bits.
 */
Circuit synthesize_cd_product(const DiagonalSpec& spec, bool use_ancilla = false);

}  // namespace qcrot
