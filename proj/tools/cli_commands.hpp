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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qcrot::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitFailure = 2;

/// Writes to a sibling temp file, then renames over `path`.
void write_file_atomic(const std::string& path, const std::string& content);

struct SweepOptions {
  std::string grid_path;
  std::size_t n = 10;
  std::string m_range = "4:16";
  std::string kappa_list = "10";
  std::string s_list = "0.99";
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::string out;
  bool uniform_b = false;
  std::string chain = "truncated";
  std::size_t threads = 0;
};
int fidelity_sweep(const SweepOptions& o, std::ostream& out);

struct HhlOptions {
  std::string system_path;
  std::size_t m = 8;
  double s = 0.9;
  std::string emit_state;
};
int hhl_demo(const HhlOptions& o, std::ostream& out);

struct CrotOptions {
  std::size_t m = 4;
  std::string oracle = "exact";
  bool exhaustive = false;
  std::size_t samples = 16;
  std::uint64_t seed = 1;
  bool quantize = false;
  std::string mode = "synthesized";
};
int crot_verify(const CrotOptions& o, std::ostream& out);

struct DiagonalOptions {
  std::string phases;
  std::optional<std::size_t> random_m;
  std::uint64_t seed = 1;
  bool controlled = false;
  std::size_t power = 0;
  bool product = false;
  std::string out_qasm;
};
int compile_diagonal(const DiagonalOptions& o, std::ostream& out);

struct ResourcesOptions {
  std::size_t max_m = 20;
  std::string out;
  std::string svg;
  std::size_t table_m = 8;
  std::size_t census_m = 0;
};
int resources(const ResourcesOptions& o, std::ostream& out);

struct ExportOptions {
  std::size_t m = 3;
  std::string oracle = "exact";
  bool uncompute = true;
  std::string out;
};
int export_qasm_cmd(const ExportOptions& o, std::ostream& out);

}  // namespace qcrot::cli
