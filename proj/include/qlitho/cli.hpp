// Copyright 2026 The qlitho Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qlitho/dosing.hpp"
#include "qlitho/synthesis.hpp"

namespace qlitho::cli {

enum class Command { Fringe, Noon, Classical, Synthesize, Compare };
enum class OutputFormat { Csv, Svg, Both };

enum ExitCode : int {
  kSuccess = 0,
  kBadArguments = 2,
  kIoFailure = 3,
  kToleranceViolation = 4,
};

struct RunConfig {
  Command command = Command::Fringe;
  int n = 10;
  std::vector<int> partitions = {1, 2, 3, 4, 5};
  int grid = kDefaultGridSize;
  SubstrateConvention convention = SubstrateConvention::Symmetric;
  std::optional<double> wavelength_nm;
  GaConfig ga;
  std::string out;  // output path stem; empty means "qlitho_<command>"
  OutputFormat format = OutputFormat::Csv;
  std::optional<std::string> target_csv;

  // Throws ConfigError / DomainError for out-of-range values.
  void validate() const;
  std::string output_stem() const;
};

// Parses flags and an optional key = value config file (--config).
// Flags override the file, which overrides defaults. Returns an exit code
// when the program should stop (help, or a parse error already reported).
std::variant<RunConfig, int> parse_command_line(int argc, const char* const* argv, std::ostream& out,
                                                std::ostream& err);

// Runs one command, writes its files, prints a short report. Maps library
// errors onto exit codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Tolerance for the simulated-vs-analytic checks the commands perform.
inline constexpr double kCheckTolerance = 1e-9;

}  // namespace qlitho::cli
