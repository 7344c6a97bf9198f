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
 * End-to-end HHL on the statevector simulator.
 *
 * Wire layout over 1 + 2m + n qubits:
 *
 *   0                ancilla
 *   1 .. m           Reg.A  (rotation angle)
 *   m+1 .. 2m        Reg.E  (eigenvalue estimate)
 *   2m+1 .. 2m+n     Reg.B  (|b>, then the solution)
 *
 * Hamiltonian simulation is exact: U = e^{2 pi i A} is built from the
 * eigendecomposition and applied as opaque controlled powers.
 */

#pragma once

#include <cstddef>

#include <Eigen/Dense>
#include <json.hpp>

#include "qcrot/crot.hpp"
#include "qcrot/statevector.hpp"

namespace qcrot {

using Vector = Eigen::VectorXcd;

/// Hermitian A with spectrum in (0, 1] and unit b over n qubits.
class LinearSystem {
 public:
  /// Validates Hermiticity (1e-12), the spectrum and the shapes; b is
  /// normalized. Throws ValidationError, or SolverError for singular A.
  LinearSystem(Matrix a, Vector b);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return static_cast<std::size_t>(b_.size()); }
  const Matrix& a() const { return a_; }
  const Vector& b() const { return b_; }

  /// {"n": int, "a": N*N entries row-major (or N rows), "b": N entries};
  /// every entry is a number or a [re, im] pair.
  static LinearSystem from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

 private:
  std::size_t num_qubits_;
  Matrix a_;
  Vector b_;
};

struct Spectrum {
  Eigen::VectorXd values;  // ascending
  Matrix vectors;          // columns are eigenvectors
};

/// A^{-1} b, normalized. Throws SolverError when A is singular.
Vector classical_solve(const LinearSystem& system);

Spectrum spectral_decompose(const LinearSystem& system);

/// U^{2^i} with U = sum_j e^{2 pi i lambda_j} |u_j><u_j|, phases reduced
/// mod 1 before exponentiation.
Matrix hamiltonian_power(const LinearSystem& system, std::size_t i);
Matrix hamiltonian_power(const Spectrum& spectrum, std::size_t i);

struct HhlReport {
  StateVector solution_state;
  double success_probability = 0.0;
  double fidelity = 0.0;
  Vector classical_solution;
  std::size_t m = 0;
  double s = 0.0;
  double c = 0.0;
  double kappa = 0.0;
  /// Norm of the post-selected state off Reg.A = Reg.E = |0...0>.
  double uncompute_residual = 0.0;
  Eigen::VectorXd eigenvalues;

  nlohmann::json to_json() const;
};

/**
 * Phase estimation of e^{2 pi i A} into Reg.E, the controlled rotation with
 * the HHL oracle for C = s lambda_min (floored onto the m-bit grid), the
 * inverse of everything before the Ry cascade, and post-selection of the
 * ancilla on 1. Throws ParameterError unless 0 < s < 1 and every eigenvalue
 * lies in [2^-m, 1 - 2^-m]; PostSelectionError when the ancilla cannot
 * read 1.
 */
HhlReport run_hhl(const LinearSystem& system, std::size_t m, double s,
                  DiagonalMode mode = DiagonalMode::kComposite);

/// The normalized vector as an n-qubit state. Throws DomainError for zero.
StateVector embed_classical(const Vector& x);

/// <u_j|b> for every eigenvector, in the order of spectrum.values.
Vector eigenbasis_weights(const Spectrum& spectrum, const Vector& b);

}  // namespace qcrot
