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

#include "qcrot/resources.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "qcrot/crot.hpp"
#include "qcrot/error.hpp"
#include "qcrot/synth.hpp"

namespace qcrot {

namespace {

void require_m(std::size_t m, std::size_t max) {
  if (m < 1 || m > max) {
    throw DomainError("m must be in [1, " + std::to_string(max) + "], got " + std::to_string(m));
  }
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

// theta_0 = 0 so no power needs a phase on the control wire; the rest are
// drawn until no Walsh angle of any power is elidable.
AngleOracle generic_oracle(std::size_t m) {
  std::mt19937_64 rng(0x5eed0000u + m);
  std::uniform_real_distribution<double> dist(0.01, 0.24);
  const std::size_t n = std::size_t{1} << m;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<double> table(n);
    for (std::size_t k = 1; k < n; ++k) table[k] = dist(rng);
    const DiagonalSpec spec = DiagonalSpec::from_phases(table);
    bool generic = true;
    for (std::size_t i = 0; i < m && generic; ++i) {
      const auto a = walsh_angles(spec.power_of_two(i).phases);
      generic = std::all_of(a.begin() + 1, a.end(), [](double x) { return std::abs(x) > 1e-9; });
    }
    if (generic) return make_table_oracle(std::move(table));
  }
  throw SolverError("could not draw a generic oracle");
}

}  // namespace

CostReport ours_gate_count(std::size_t m) {
  require_m(m, 40);
  CostReport r;
  r.method = "ours";
  r.m = m;
  r.qubit_class = "O(m)";
  r.gate_class = "O(m*2^m)";
  const std::uint64_t mm = m;
  r.breakdown["controlled_powers"] = mm * ((std::uint64_t{1} << (m + 1)) - 3);
  r.breakdown["inverse_qft"] = mm * (mm + 1) / 2;
  r.breakdown["ry_cascade"] = mm;
  std::uint64_t total = 0;
  for (const auto& [k, v] : r.breakdown) total += v;
  r.gate_count = total;
  return r;
}

std::uint64_t qfbe_gate_count(std::size_t m) {
  require_m(m, 100000);
  const std::uint64_t mm = m;
  return 34 * mm * mm * mm - 16 * mm * mm + 4 * mm;
}

std::size_t crossover_m() {
  for (std::size_t m = 1; m <= 40; ++m) {
    if (*ours_gate_count(m).gate_count > qfbe_gate_count(m)) return m;
  }
  throw SolverError("no crossover below m = 40");
}

AdderCost adder_cost(std::size_t m) {
  require_m(m, 100000);
  const std::uint64_t mm = m;
  return {3 * mm + 1, 20 * mm + 2, 20 * mm - 10};
}

std::vector<CostReport> table1_report(std::size_t m) {
  std::vector<CostReport> rows;
  rows.push_back({"newton", m, "O(m^3)", "O(m^4)", std::nullopt, {}});
  CostReport qfbe{"qfbe", m, "O(m^2)", "O(m^3)", qfbe_gate_count(m), {}};
  qfbe.breakdown["total"] = *qfbe.gate_count;
  rows.push_back(qfbe);
  rows.push_back({"measurement_based", m, "O(poly(m))", "O(poly(m))", std::nullopt, {}});
  rows.push_back(ours_gate_count(m));
  const AdderCost a = adder_cost(m);
  CostReport adder{"adder", m, "3m+1", "20m+2 CNOT, 20m-10 Toffoli", a.cnot + a.toffoli, {}};
  adder.breakdown["cnot"] = a.cnot;
  adder.breakdown["toffoli"] = a.toffoli;
  adder.breakdown["qubits"] = a.qubits;
  rows.push_back(adder);
  return rows;
}

std::string table1_text(std::size_t m) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-18s %-12s %-28s %s\n", "method", "qubits", "gates",
                ("count at m=" + std::to_string(m)).c_str());
  out << line;
  for (const CostReport& r : table1_report(m)) {
    const std::string count = r.gate_count ? std::to_string(*r.gate_count) : "-";
    std::snprintf(line, sizeof(line), "%-18s %-12s %-28s %s\n", r.method.c_str(),
                  r.qubit_class.c_str(), r.gate_class.c_str(), count.c_str());
    out << line;
  }
  const AdderCost a = adder_cost(m);
  out << "adder at m=" << m << ": " << a.qubits << " qubits, " << a.cnot << " CNOT, " << a.toffoli
      << " Toffoli\n";
  return out.str();
}

CensusComparison census_vs_formula(std::size_t m) {
  require_m(m, 8);
  CensusComparison cmp;
  cmp.m = m;
  cmp.total = gate_census(build_crot_circuit(generic_oracle(m), false));
  const GateCensus& c = cmp.total;
  cmp.hadamard_layer = m;
  cmp.controlled_powers = c.count("CRZ") + c.count("TOFFOLI") + c.count("RZ");
  cmp.inverse_qft = c.count("H") - m + c.count("CPHASE");
  cmp.swaps = c.count("SWAP");
  cmp.ry_cascade = c.count("CRY");
  cmp.formula = ours_gate_count(m);
  cmp.delta["hadamard_layer"] = cmp.hadamard_layer;
  cmp.delta["swaps"] = cmp.swaps;

  const auto& f = cmp.formula.breakdown;
  std::uint64_t delta_total = 0;
  for (const auto& [k, v] : cmp.delta) delta_total += v;
  cmp.consistent = cmp.controlled_powers == f.at("controlled_powers") &&
                   cmp.inverse_qft == f.at("inverse_qft") && cmp.ry_cascade == f.at("ry_cascade") &&
                   cmp.swaps == m / 2 && c.count("composite") == 0 &&
                   c.total() == *cmp.formula.gate_count + delta_total;
  return cmp;
}

std::string resources_csv(std::size_t max_m) {
  require_m(max_m, 40);
  std::string out = "m,ours,qfbe\n";
  for (std::size_t m = 1; m <= max_m; ++m) {
    out += std::to_string(m) + "," + std::to_string(*ours_gate_count(m).gate_count) + "," +
           std::to_string(qfbe_gate_count(m)) + "\n";
  }
  return out;
}

std::string resources_svg(std::size_t max_m) {
  require_m(max_m, 40);
  constexpr double kW = 640, kH = 420, kLeft = 70, kRight = 20, kTop = 30, kBottom = 50;
  std::vector<double> ours, qfbe;
  double hi = 1.0;
  for (std::size_t m = 1; m <= max_m; ++m) {
    ours.push_back(static_cast<double>(*ours_gate_count(m).gate_count));
    qfbe.push_back(static_cast<double>(qfbe_gate_count(m)));
    hi = std::max({hi, ours.back(), qfbe.back()});
  }
  const double decades = std::max(1.0, std::ceil(std::log10(hi)));
  const auto x_of = [&](std::size_t m) {
    const double span = max_m > 1 ? static_cast<double>(max_m - 1) : 1.0;
    return kLeft + (kW - kLeft - kRight) * static_cast<double>(m - 1) / span;
  };
  const auto y_of = [&](double v) {
    return kH - kBottom - (kH - kTop - kBottom) * std::log10(std::max(v, 1.0)) / decades;
  };
  const auto polyline = [&](const std::vector<double>& ys, const char* color) {
    std::string pts;
    for (std::size_t i = 0; i < ys.size(); ++i) {
      if (i) pts += ' ';
      pts += fmt("%.2f", x_of(i + 1)) + "," + fmt("%.2f", y_of(ys[i]));
    }
    return "  <polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
  };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
    << "\" viewBox=\"0 0 " << kW << " " << kH << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "  <line x1=\"" << kLeft << "\" y1=\"" << kH - kBottom << "\" x2=\"" << kW - kRight
    << "\" y2=\"" << kH - kBottom << "\" stroke=\"black\"/>\n";
  s << "  <line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
    << kH - kBottom << "\" stroke=\"black\"/>\n";
  for (int d = 0; d <= static_cast<int>(decades); ++d) {
    const double y = y_of(std::pow(10.0, d));
    s << "  <text x=\"" << kLeft - 8 << "\" y=\"" << fmt("%.2f", y + 4)
      << "\" text-anchor=\"end\">1e" << d << "</text>\n";
  }
  for (std::size_t m = 1; m <= max_m; ++m) {
    s << "  <text x=\"" << fmt("%.2f", x_of(m)) << "\" y=\"" << kH - kBottom + 16
      << "\" text-anchor=\"middle\">" << m << "</text>\n";
  }
  s << "  <text x=\"" << (kLeft + kW - kRight) / 2 << "\" y=\"" << kH - 12
    << "\" text-anchor=\"middle\">m</text>\n";
  s << "  <text x=\"16\" y=\"" << (kTop + kH - kBottom) / 2
    << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << (kTop + kH - kBottom) / 2
    << ")\">gate count</text>\n";
  s << polyline(ours, "#1f77b4") << polyline(qfbe, "#d62728");
  s << "  <text x=\"" << kLeft + 10 << "\" y=\"" << kTop + 4 << "\" fill=\"#1f77b4\">ours</text>\n";
  s << "  <text x=\"" << kLeft + 10 << "\" y=\"" << kTop + 20 << "\" fill=\"#d62728\">qfbe</text>\n";
  s << "</svg>\n";
  return s.str();
}

}  // namespace qcrot
