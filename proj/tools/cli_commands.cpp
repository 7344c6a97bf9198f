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

#include "cli_commands.hpp"

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "qcrot/crot.hpp"
#include "qcrot/error.hpp"
#include "qcrot/fixedpoint.hpp"
#include "qcrot/hhl.hpp"
#include "qcrot/resources.hpp"
#include "qcrot/synth.hpp"

namespace qcrot::cli {

namespace {

constexpr double kFourPi = 2.0 * kTwoPi;
constexpr double kVerifyTolerance = 1e-6;

std::string num(double v, const char* f = "%.12g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

nlohmann::json parse_json(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(what + " is not valid JSON: " + e.what());
  }
}

std::vector<double> parse_number_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw ValidationError(std::string(what) + ": '" + item + "' is not a number");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ValidationError(std::string(what) + " is empty");
  return out;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const std::size_t v = std::stoul(text);
      return {v, v};
    }
    const std::size_t a = std::stoul(text.substr(0, colon));
    const std::size_t b = std::stoul(text.substr(colon + 1));
    if (a > b) throw ValidationError("m-range start exceeds its end");
    return {a, b};
  } catch (const std::logic_error&) {
    throw ValidationError("m-range must look like A:B");
  }
}

DiagonalMode parse_mode(const std::string& mode) {
  if (mode == "synthesized") return DiagonalMode::kSynthesized;
  if (mode == "composite") return DiagonalMode::kComposite;
  throw ValidationError("mode must be 'synthesized' or 'composite'");
}

// Dense target for compile-diagonal's self check; control on qubit 0 when
// controlled.
Matrix diagonal_target(const std::vector<double>& phases, bool controlled) {
  const auto n = static_cast<Eigen::Index>(phases.size());
  const Eigen::Index dim = controlled ? 2 * n : n;
  Matrix d = Matrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    double t = 0.0;
    if (!controlled) {
      t = phases[static_cast<std::size_t>(i)];
    } else if (i & 1) {
      t = phases[static_cast<std::size_t>(i >> 1)];
    }
    d(i, i) = std::polar(1.0, kTwoPi * t);
  }
  return d;
}

}  // namespace

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename onto '" + path + "': " + ec.message());
  }
}

// ---------------------------------------------------------------------------

int fidelity_sweep(const SweepOptions& o, std::ostream& out) {
  std::vector<SweepConfig> grid;
  if (!o.grid_path.empty()) {
    grid = parse_sweep_grid(parse_json(read_file(o.grid_path), "sweep grid"));
  } else {
    RotationChain chain = RotationChain::kTruncated;
    if (o.chain == "circuit") {
      chain = RotationChain::kCircuitGrid;
    } else if (o.chain != "truncated") {
      throw ValidationError("chain must be 'truncated' or 'circuit'");
    }
    const auto [m_lo, m_hi] = parse_range(o.m_range);
    for (double kappa : parse_number_list(o.kappa_list, "kappa-list")) {
      for (double s : parse_number_list(o.s_list, "s-list")) {
        for (std::size_t m = m_lo; m <= m_hi; ++m) {
          SweepConfig c{o.n, m, kappa, s, o.trials, o.seed, o.uniform_b, chain};
          c.validate();
          grid.push_back(c);
        }
      }
    }
  }
  const auto rows = run_sweep(grid, o.threads);
  if (!o.out.empty()) write_file_atomic(o.out, sweep_csv(rows));

  out << "config                                    mean_fidelity   min_fidelity\n";
  std::size_t at = 0;
  for (const SweepConfig& c : grid) {
    double sum = 0.0, lo = 1.0;
    for (std::size_t t = 0; t < c.trials; ++t, ++at) {
      sum += rows[at].fidelity;
      lo = std::min(lo, rows[at].fidelity);
    }
    char line[200];
    std::snprintf(line, sizeof(line), "n=%-3zu m=%-3zu kappa=%-8g s=%-8g  %.10f    %.10f\n", c.n,
                  c.m, c.kappa, c.s, sum / static_cast<double>(c.trials), lo);
    out << line;
  }
  if (!o.out.empty()) out << "wrote " << rows.size() << " rows to " << o.out << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

int hhl_demo(const HhlOptions& o, std::ostream& out) {
  const LinearSystem system =
      LinearSystem::from_json(parse_json(read_file(o.system_path), "system file"));
  const HhlReport r = run_hhl(system, o.m, o.s);
  out << "n = " << system.num_qubits() << ", m = " << r.m << ", s = " << num(r.s)
      << ", C = " << num(r.c) << ", kappa = " << num(r.kappa) << "\n";
  out << "eigenvalues:";
  for (Eigen::Index j = 0; j < r.eigenvalues.size(); ++j) out << " " << num(r.eigenvalues(j));
  out << "\n";
  out << "success probability: " << num(r.success_probability) << "\n";
  out << "fidelity:            " << num(r.fidelity) << "\n";
  out << "uncompute residual:  " << num(r.uncompute_residual, "%.3e") << "\n";
  out << "index  quantum                              classical\n";
  const auto q = r.solution_state.amplitudes();
  for (std::size_t i = 0; i < q.size(); ++i) {
    const Complex c = r.classical_solution(static_cast<Eigen::Index>(i));
    char line[200];
    std::snprintf(line, sizeof(line), "%-6zu %+.10f%+.10fi   %+.10f%+.10fi\n", i, q[i].real(),
                  q[i].imag(), c.real(), c.imag());
    out << line;
  }
  if (!o.emit_state.empty()) write_file_atomic(o.emit_state, r.to_json().dump(2) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------------------

int crot_verify(const CrotOptions& o, std::ostream& out) {
  if (o.m < 1 || o.m > 10) throw ValidationError("crot-verify supports 1 <= m <= 10");
  if (o.exhaustive && o.m > 8) throw ValidationError("--exhaustive needs m <= 8");
  AngleOracle oracle = parse_oracle(o.oracle, o.m);
  if (o.quantize) oracle = oracle.quantized();
  const std::size_t m = oracle.width();
  const std::uint64_t n = std::uint64_t{1} << m;
  const bool exact = oracle.exactly_representable();
  const DiagonalMode mode = parse_mode(o.mode);

  // Reg.E is only ever a control, so one run on the uniform superposition
  // carries every basis input in its own Reg.E sector.
  const Circuit pe = build_pe_stage(oracle, mode);
  std::vector<Complex> uniform(n, Complex(1.0, 0.0));
  StateVector state = tensor(StateVector::from_amplitudes(uniform), StateVector::basis(1 + m, 0));
  simulate_in_place(pe, state);
  const double scale = std::sqrt(static_cast<double>(n));
  const auto sector = [&](std::uint64_t k) {
    auto v = state.slice(0, 1 + m, k << (1 + m));
    for (Complex& z : v) z *= scale;
    return v;
  };

  std::vector<std::uint64_t> ks;
  if (o.exhaustive || o.samples >= n) {
    for (std::uint64_t k = 0; k < n; ++k) ks.push_back(k);
  } else {
    std::mt19937_64 rng(o.seed);
    std::vector<std::uint64_t> all(n);
    for (std::uint64_t k = 0; k < n; ++k) all[k] = k;
    std::shuffle(all.begin(), all.end(), rng);
    ks.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(o.samples));
    std::sort(ks.begin(), ks.end());
  }

  std::vector<double> pe_fidelity(n, 0.0);
  for (std::uint64_t k : ks) {
    const auto v = sector(k);
    const auto a = static_cast<std::uint64_t>(std::llround(oracle.theta(k) * static_cast<double>(n)));
    pe_fidelity[k] = a < n ? std::norm(v[a << 1]) : 0.0;
  }
  simulate_in_place(build_ry_cascade(m), state);
  simulate_in_place(inverse(pe), state);

  double max_dev = 0.0, max_p_dev = 0.0, max_residual = 0.0, min_pe = 1.0;
  out << "oracle " << oracle.to_json().dump() << (exact ? " (exact)" : " (inexact)") << "\n";
  out << "k      theta            amplitude        target           success_prob\n";
  for (std::uint64_t k : ks) {
    const auto v = sector(k);
    const double th = oracle.theta(k);
    const double target = std::sin(kFourPi * th);
    double dev = std::max(std::abs(v[0] - Complex(std::cos(kFourPi * th), 0.0)),
                          std::abs(v[1] - Complex(target, 0.0)));
    double off = 0.0, p1 = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i >= 2) {
        dev = std::max(dev, std::abs(v[i]));
        off += std::norm(v[i]);
      }
      if (i & 1) p1 += std::norm(v[i]);
    }
    max_dev = std::max(max_dev, dev);
    max_p_dev = std::max(max_p_dev, std::abs(p1 - target * target));
    max_residual = std::max(max_residual, std::sqrt(off));
    min_pe = std::min(min_pe, pe_fidelity[k]);
    char line[200];
    std::snprintf(line, sizeof(line), "%-6llu %.12f   %+.12f  %+.12f  %.12f\n",
                  static_cast<unsigned long long>(k), th, v[1].real(), target, p1);
    out << line;
  }
  out << "inputs checked:            " << ks.size() << (o.exhaustive ? " (exhaustive)" : "") << "\n";
  out << "min PE register fidelity:  " << num(min_pe) << "\n";
  out << "max state deviation:       " << num(max_dev, "%.3e") << "\n";
  out << "max success-prob deviation " << num(max_p_dev, "%.3e") << "\n";
  out << "max Reg.A residual:        " << num(max_residual, "%.3e") << "\n";
  if (!exact) {
    out << "result: informational (oracle is not exactly representable on " << m << " bits)\n";
    return kExitOk;
  }
  const bool pass = max_dev <= kVerifyTolerance;
  out << "result: " << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------

int compile_diagonal(const DiagonalOptions& o, std::ostream& out) {
  std::vector<double> phases;
  if (o.random_m) {
    if (!o.phases.empty()) throw ValidationError("give either --phases or --random");
    if (*o.random_m < 1 || *o.random_m > 12) throw ValidationError("--random needs 1 <= m <= 12");
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    phases.resize(std::size_t{1} << *o.random_m);
    for (double& p : phases) p = dist(rng);
  } else {
    if (o.phases.empty()) throw ValidationError("give --phases or --random");
    const std::string text = o.phases.front() == '[' ? o.phases : read_file(o.phases);
    const auto j = parse_json(text, "phase list");
    if (!j.is_array()) throw ValidationError("phase list must be a JSON array");
    for (const auto& v : j) {
      if (!v.is_number()) throw ValidationError("phase list entries must be numbers");
      phases.push_back(v.get<double>());
    }
  }
  const DiagonalSpec spec = DiagonalSpec::from_phases(phases);
  const std::size_t m = spec.width;
  const DiagonalSpec powered = spec.power_of_two(o.power);

  Circuit circuit(1);
  const char* kind = "diagonal";
  if (o.product) {
    if (o.power != 0) throw ValidationError("--product does not take --power");
    circuit = synthesize_cd_product(spec);
    kind = "controlled diagonal (per-index product)";
  } else if (o.controlled) {
    circuit = synthesize_controlled_diagonal(spec, o.power);
    kind = "controlled diagonal";
  } else {
    circuit = synthesize_diagonal(powered);
  }
  const GateCensus census = gate_census(circuit);
  const std::uint64_t bound = (std::uint64_t{1} << (m + 1)) - 3;

  out << kind << ", m = " << m << ", power = " << o.power << "\n";
  out << "gate census:";
  for (const auto& [name, count] : census.counts) out << " " << name << "=" << count;
  out << " total=" << census.total() << "\n";
  bool bound_ok = true;
  if (o.product) {
    out << "cubes: " << merge_cubes(spec).size() << "\n";
  } else if (o.controlled) {
    const std::uint64_t core = census.count("CRZ") + census.count("TOFFOLI");
    bound_ok = core <= bound;
    out << "CRZ+TOFFOLI = " << core << " <= 2^(m+1)-3 = " << bound << ": "
        << (bound_ok ? "yes" : "no") << "\n";
    out << "control-wire phase RZ: " << census.count("RZ") << "\n";
  } else {
    bound_ok = census.total() <= bound;
    out << "total = " << census.total() << " <= 2^(m+1)-3 = " << bound << ": "
        << (bound_ok ? "yes" : "no") << "\n";
    out << "global phase (turns): " << num(powered.phases[0]) << "\n";
  }

  bool verified = true;
  if (m <= 6) {
    const Matrix u = circuit_unitary(circuit);
    double err = 0.0;
    if (o.controlled || o.product) {
      err = (u - diagonal_target(o.product ? spec.phases : powered.phases, true)).cwiseAbs().maxCoeff();
    } else {
      const Complex g = std::polar(1.0, kTwoPi * powered.phases[0]);
      err = (g * u - diagonal_target(powered.phases, false)).cwiseAbs().maxCoeff();
    }
    verified = err < 1e-10;
    out << "matrix check: max error " << num(err, "%.3e") << (verified ? " ok" : " FAILED") << "\n";
  } else {
    out << "matrix check: skipped (m > 6)\n";
  }
  if (!o.out_qasm.empty()) {
    write_file_atomic(o.out_qasm, export_qasm(circuit));
    out << "wrote " << o.out_qasm << "\n";
  }
  return verified && bound_ok ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------

int resources(const ResourcesOptions& o, std::ostream& out) {
  const std::string csv = resources_csv(o.max_m);
  if (!o.out.empty()) {
    write_file_atomic(o.out, csv);
  } else {
    out << csv;
  }
  if (!o.svg.empty()) write_file_atomic(o.svg, resources_svg(o.max_m));
  out << "crossover m = " << crossover_m() << "\n\n";
  out << table1_text(o.table_m);
  if (o.census_m > 0) {
    const CensusComparison c = census_vs_formula(o.census_m);
    out << "\ncensus vs formula at m = " << c.m << ":\n";
    out << "  controlled powers " << c.controlled_powers << " (formula "
        << c.formula.breakdown.at("controlled_powers") << ")\n";
    out << "  inverse QFT H+CPHASE " << c.inverse_qft << " (formula "
        << c.formula.breakdown.at("inverse_qft") << ")\n";
    out << "  Ry cascade " << c.ry_cascade << " (formula " << c.formula.breakdown.at("ry_cascade")
        << ")\n";
    out << "  not in formula: hadamard_layer " << c.delta.at("hadamard_layer") << ", swaps "
        << c.delta.at("swaps") << "\n";
    out << "  census total " << c.total.total() << ", formula " << *c.formula.gate_count << ", "
        << (c.consistent ? "consistent" : "INCONSISTENT") << "\n";
    if (!c.consistent) return kExitFailure;
  }
  return kExitOk;
}

int export_qasm_cmd(const ExportOptions& o, std::ostream& out) {
  const AngleOracle oracle = parse_oracle(o.oracle, o.m);
  const std::string text = export_qasm(build_crot_circuit(oracle, o.uncompute));
  if (o.out.empty()) {
    out << text;
  } else {
    write_file_atomic(o.out, text);
    out << "wrote " << o.out << "\n";
  }
  return kExitOk;
}

}  // namespace qcrot::cli
