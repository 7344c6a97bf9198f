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

#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli_commands.hpp"
#include "qcrot/error.hpp"

namespace cli = qcrot::cli;

int main(int argc, char** argv) {
  CLI::App app{"qcrot: controlled-rotation circuits, HHL and fixed-point fidelity experiments"};
  app.require_subcommand(1);
  int code = cli::kExitOk;

  cli::SweepOptions sweep;
  auto* sw = app.add_subcommand("fidelity-sweep", "fixed-point fidelity over a parameter grid");
  sw->add_option("--grid", sweep.grid_path, "JSON list of sweep configs")->check(CLI::ExistingFile);
  sw->add_option("--n", sweep.n, "qubits of A")->capture_default_str();
  sw->add_option("--m-range", sweep.m_range, "A:B, inclusive")->capture_default_str();
  sw->add_option("--kappa-list", sweep.kappa_list, "comma separated")->capture_default_str();
  sw->add_option("--s-list", sweep.s_list, "comma separated")->capture_default_str();
  sw->add_option("--trials", sweep.trials)->capture_default_str();
  sw->add_option("--seed", sweep.seed)->capture_default_str();
  sw->add_option("--out", sweep.out, "CSV path");
  sw->add_flag("--uniform-b", sweep.uniform_b, "b = uniform vector instead of Gaussian");
  sw->add_option("--chain", sweep.chain, "truncated | circuit")->capture_default_str();
  sw->add_option("--threads", sweep.threads, "0 = QCROT_THREADS or hardware");
  sw->callback([&] { code = cli::fidelity_sweep(sweep, std::cout); });

  cli::HhlOptions hhl;
  auto* hd = app.add_subcommand("hhl-demo", "run HHL on a JSON linear system");
  hd->add_option("--system", hhl.system_path)->required()->check(CLI::ExistingFile);
  hd->add_option("--m", hhl.m)->capture_default_str();
  hd->add_option("--s", hhl.s)->capture_default_str();
  hd->add_option("--emit-state", hhl.emit_state, "write the report as JSON");
  hd->callback([&] { code = cli::hhl_demo(hhl, std::cout); });

  cli::CrotOptions crot;
  auto* cv = app.add_subcommand("crot-verify", "check the rotation circuit against its target");
  cv->add_option("--m", crot.m)->capture_default_str();
  cv->add_option("--oracle", crot.oracle, "name[:k=v,...] or JSON descriptor")->capture_default_str();
  cv->add_flag("--exhaustive", crot.exhaustive, "every basis input");
  cv->add_option("--samples", crot.samples, "inputs when not exhaustive")->capture_default_str();
  cv->add_option("--seed", crot.seed)->capture_default_str();
  cv->add_flag("--quantize", crot.quantize, "floor the oracle onto the m-bit grid first");
  cv->add_option("--mode", crot.mode, "synthesized | composite")->capture_default_str();
  cv->callback([&] { code = cli::crot_verify(crot, std::cout); });

  cli::DiagonalOptions diag;
  auto* cd = app.add_subcommand("compile-diagonal", "synthesize a diagonal unitary");
  cd->add_option("--phases", diag.phases, "JSON array (turns) or a path to one");
  cd->add_option("--random", diag.random_m, "random phases on m qubits");
  cd->add_option("--seed", diag.seed)->capture_default_str();
  cd->add_flag("--controlled", diag.controlled, "controlled-D^(2^power)");
  cd->add_option("--power", diag.power)->capture_default_str();
  cd->add_flag("--product", diag.product, "controlled-D as one multi-controlled RZ per cube");
  cd->add_option("--out-qasm", diag.out_qasm);
  cd->callback([&] { code = cli::compile_diagonal(diag, std::cout); });

  cli::ResourcesOptions res;
  auto* rs = app.add_subcommand("resources", "gate-count formulas and the crossover");
  rs->add_option("--max-m", res.max_m)->capture_default_str();
  rs->add_option("--out", res.out, "CSV path (stdout when omitted)");
  rs->add_option("--svg", res.svg, "SVG plot path");
  rs->add_option("--table-m", res.table_m, "m for the numeric table columns")->capture_default_str();
  rs->add_option("--census-m", res.census_m, "also compare a synthesized census (m <= 8)");
  rs->callback([&] { code = cli::resources(res, std::cout); });

  cli::ExportOptions ex;
  auto* eq = app.add_subcommand("export-qasm", "export the synthesized rotation circuit");
  eq->add_option("--m", ex.m)->capture_default_str();
  eq->add_option("--oracle", ex.oracle)->capture_default_str();
  eq->add_flag("!--no-uncompute", ex.uncompute, "omit the inverse PE stage");
  eq->add_option("--out", ex.out, "QASM path (stdout when omitted)");
  eq->callback([&] { code = cli::export_qasm_cmd(ex, std::cout); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitInvalid;
  } catch (const qcrot::PostSelectionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitFailure;
  } catch (const qcrot::DegenerateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitFailure;
  } catch (const qcrot::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitInvalid;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitFailure;
  }
  return code;
}
