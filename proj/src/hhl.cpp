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

#include "qcrot/hhl.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "qcrot/error.hpp"
#include "qcrot/synth.hpp"

namespace qcrot {

namespace {

constexpr double kHermitianTolerance = 1e-12;
constexpr double kSingularTolerance = 1e-12;
constexpr std::size_t kMaxPipelineQubits = 26;

Complex parse_complex(const nlohmann::json& v, const char* what) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ValidationError(std::string(what) + " entries must be numbers or [re, im] pairs");
}

nlohmann::json complex_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

Eigen::SelfAdjointEigenSolver<Matrix> solve_eigen(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  if (es.info() != Eigen::Success) throw SolverError("eigendecomposition did not converge");
  return es;
}

}  // namespace

LinearSystem::LinearSystem(Matrix a, Vector b) : a_(std::move(a)), b_(std::move(b)) {
  const auto dim = static_cast<std::size_t>(b_.size());
  if (dim < 2 || !is_power_of_two(dim)) {
    throw ValidationError("system dimension must be a power of two >= 2");
  }
  if (a_.rows() != b_.size() || a_.cols() != b_.size()) {
    throw ValidationError("A must be N x N with N = len(b)");
  }
  num_qubits_ = static_cast<std::size_t>(std::countr_zero(dim));
  if ((a_ - a_.adjoint()).cwiseAbs().maxCoeff() >= kHermitianTolerance) {
    throw ValidationError("A is not Hermitian");
  }
  const double nb = b_.norm();
  if (!(nb > 0.0) || !std::isfinite(nb)) throw ValidationError("b must be a nonzero vector");
  b_ /= nb;
  const Eigen::VectorXd ev = solve_eigen(a_).eigenvalues();
  if (ev.cwiseAbs().minCoeff() <= kSingularTolerance) {
    throw SolverError("A is singular");
  }
  if (ev.minCoeff() < 0.0 || ev.maxCoeff() > 1.0 + kHermitianTolerance) {
    throw ValidationError("eigenvalues of A must lie in (0, 1]");
  }
}

LinearSystem LinearSystem::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned()) {
    throw ValidationError("system JSON needs an unsigned integer 'n'");
  }
  const auto n = j["n"].get<std::size_t>();
  if (n < 1 || n > 12) throw ValidationError("system 'n' must be in [1, 12]");
  const std::size_t dim = std::size_t{1} << n;
  if (!j.contains("a") || !j["a"].is_array() || !j.contains("b") || !j["b"].is_array()) {
    throw ValidationError("system JSON needs arrays 'a' and 'b'");
  }
  const auto& ja = j["a"];
  Matrix a(dim, dim);
  if (ja.size() == dim * dim) {
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) a(r, c) = parse_complex(ja[r * dim + c], "a");
  } else if (ja.size() == dim) {  // N >= 2, so N rows never look like N*N entries
    for (std::size_t r = 0; r < dim; ++r) {
      if (!ja[r].is_array() || ja[r].size() != dim) throw ValidationError("'a' rows must have N entries");
      for (std::size_t c = 0; c < dim; ++c) a(r, c) = parse_complex(ja[r][c], "a");
    }
  } else {
    throw ValidationError("'a' must hold N*N entries or N rows");
  }
  const auto& jb = j["b"];
  if (jb.size() != dim) throw ValidationError("'b' must hold N entries");
  Vector b(dim);
  for (std::size_t i = 0; i < dim; ++i) b(i) = parse_complex(jb[i], "b");
  return LinearSystem(std::move(a), std::move(b));
}

nlohmann::json LinearSystem::to_json() const {
  nlohmann::json a = nlohmann::json::array();
  for (Eigen::Index r = 0; r < a_.rows(); ++r)
    for (Eigen::Index c = 0; c < a_.cols(); ++c) a.push_back(complex_json(a_(r, c)));
  nlohmann::json b = nlohmann::json::array();
  for (Eigen::Index i = 0; i < b_.size(); ++i) b.push_back(complex_json(b_(i)));
  return {{"n", num_qubits_}, {"a", a}, {"b", b}};
}

Vector classical_solve(const LinearSystem& system) {
  Eigen::FullPivLU<Matrix> lu(system.a());
  if (!lu.isInvertible()) throw SolverError("A is singular");
  Vector x = lu.solve(system.b());
  const double nx = x.norm();
  if (!(nx > 0.0) || !std::isfinite(nx)) throw SolverError("solution is not finite");
  return x / nx;
}

Spectrum spectral_decompose(const LinearSystem& system) {
  const auto es = solve_eigen(system.a());
  return {es.eigenvalues(), es.eigenvectors()};
}

Matrix hamiltonian_power(const Spectrum& spectrum, std::size_t i) {
  const Eigen::Index dim = spectrum.values.size();
  Vector phases(dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    // 2^i lambda mod 1, taken in steps so large i stays exact.
    double t = spectrum.values(j);
    std::size_t left = i;
    do {
      const int step = static_cast<int>(std::min<std::size_t>(left, 512));
      t = std::fmod(std::ldexp(t, step), 1.0);
      left -= static_cast<std::size_t>(step);
    } while (left > 0);
    phases(j) = std::polar(1.0, kTwoPi * t);
  }
  return spectrum.vectors * phases.asDiagonal() * spectrum.vectors.adjoint();
}

Matrix hamiltonian_power(const LinearSystem& system, std::size_t i) {
  return hamiltonian_power(spectral_decompose(system), i);
}

StateVector embed_classical(const Vector& x) {
  std::vector<Complex> amps(x.data(), x.data() + x.size());
  return StateVector::from_amplitudes(std::move(amps));
}

Vector eigenbasis_weights(const Spectrum& spectrum, const Vector& b) {
  return spectrum.vectors.adjoint() * b;
}

HhlReport run_hhl(const LinearSystem& system, std::size_t m, double s, DiagonalMode mode) {
  if (!(s > 0.0 && s < 1.0)) throw ParameterError("s must be in (0, 1)");
  if (m < 1) throw ParameterError("m must be at least 1");
  const std::size_t n = system.num_qubits();
  const std::size_t total = 1 + 2 * m + n;
  if (total > kMaxPipelineQubits) {
    throw ParameterError("pipeline needs " + std::to_string(total) + " qubits, limit is " +
                         std::to_string(kMaxPipelineQubits));
  }
  const Spectrum spectrum = spectral_decompose(system);
  const double lo = std::ldexp(1.0, -static_cast<int>(m));
  for (Eigen::Index j = 0; j < spectrum.values.size(); ++j) {
    const double l = spectrum.values(j);
    if (l < lo - 1e-12 || l > 1.0 - lo + 1e-12) {
      throw ParameterError("eigenvalue " + std::to_string(l) + " is outside [2^-m, 1 - 2^-m]" +
                           " for m = " + std::to_string(m) +
                           "; phase estimation would alias it");
    }
  }
  const double lambda_min = spectrum.values.minCoeff();
  const double c = s * lambda_min;
  const AngleOracle oracle = make_hhl_oracle(m, c, /*clamp=*/true).quantized();

  // Phase estimation of U on Reg.B into Reg.E.
  Circuit pe(total);
  std::vector<std::size_t> reg_e(m);
  std::iota(reg_e.begin(), reg_e.end(), 1 + m);
  std::vector<std::size_t> reg_b(n);
  std::iota(reg_b.begin(), reg_b.end(), 1 + 2 * m);
  for (std::size_t q : reg_e) pe.add(Gate::h(q));
  for (std::size_t j = 0; j < m; ++j) {
    pe.add(Gate::opaque({reg_e[j]}, reg_b, hamiltonian_power(spectrum, j)));
  }
  pe.append(inverse_qft(m), reg_e);

  const Circuit crot_pe = build_pe_stage(oracle, mode);
  Circuit circuit(total);
  circuit.set_spans({{RegisterLabel::kAncilla, 0, 1},
                     {RegisterLabel::kRegA, 1, m},
                     {RegisterLabel::kRegE, 1 + m, m},
                     {RegisterLabel::kRegB, 1 + 2 * m, n}});
  circuit.append(pe);
  circuit.append(crot_pe);
  circuit.append(build_ry_cascade(m));
  circuit.append(inverse(crot_pe));
  circuit.append(inverse(pe));

  StateVector state = tensor(embed_classical(system.b()), StateVector::basis(1 + 2 * m, 0));
  simulate_in_place(circuit, state);

  HhlReport report{StateVector::basis(n, 0), 0.0, 0.0, Vector(), 0, 0.0, 0.0, 0.0, 0.0,
                   Eigen::VectorXd()};
  report.m = m;
  report.s = s;
  report.c = c;
  report.kappa = spectrum.values.maxCoeff() / lambda_min;
  report.eigenvalues = spectrum.values;
  report.success_probability = state.postselect(0, 1);
  const double clean = state.register_probability(1, 2 * m, 0);
  report.uncompute_residual = std::sqrt(off_register_weight(state, 1, 2 * m));
  if (clean < kPostSelectionFloor) {
    throw PostSelectionError("no weight left on Reg.A = Reg.E = |0...0>");
  }
  report.solution_state = StateVector::from_amplitudes(state.slice(1 + 2 * m, n, /*ancilla=*/1));
  report.classical_solution = classical_solve(system);
  report.fidelity = overlap(report.solution_state, embed_classical(report.classical_solution));
  return report;
}

nlohmann::json HhlReport::to_json() const {
  nlohmann::json sol = nlohmann::json::array();
  for (Complex z : solution_state.amplitudes()) sol.push_back(complex_json(z));
  nlohmann::json cls = nlohmann::json::array();
  for (Eigen::Index i = 0; i < classical_solution.size(); ++i) {
    cls.push_back(complex_json(classical_solution(i)));
  }
  std::vector<double> ev(eigenvalues.data(), eigenvalues.data() + eigenvalues.size());
  return {{"m", m},
          {"s", s},
          {"C", c},
          {"kappa", kappa},
          {"eigenvalues", ev},
          {"success_probability", success_probability},
          {"fidelity", fidelity},
          {"uncompute_residual", uncompute_residual},
          {"solution_state", sol},
          {"classical_solution", cls}};
}

}  // namespace qcrot
