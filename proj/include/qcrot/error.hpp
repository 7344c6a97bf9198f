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

#pragma once

#include <stdexcept>
#include <string>

namespace qcrot {

/**
 * Exception hierarchy. Everything thrown by the library derives from
 * qcrot::Error so callers can separate library failures from std ones.
 *
 * The CLI maps DomainError / ValidationError / ParameterError /
 * SolverError to exit code 1 (bad input) and the numerical failures
 * (PostSelectionError, DegenerateError) to exit code 2.
 */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside the domain of the operation (index range,
/// mismatched dimensions, overlapping qubits).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A structural invariant does not hold (non-unitary matrix, bad arity).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Application parameters produce an invalid rotation amplitude.
class ParameterError : public Error {
 public:
  using Error::Error;
};

class SolverError : public Error {
 public:
  using Error::Error;
};

/// Circuit contains a gate with no OpenQASM 2.0 counterpart.
class ExportError : public Error {
 public:
  using Error::Error;
};

/// Projection onto the requested outcome has (numerically) zero weight.
class PostSelectionError : public Error {
 public:
  using Error::Error;
};

/// All approximate weights vanished, so a fidelity is undefined.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcrot
