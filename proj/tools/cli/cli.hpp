// Copyright 2026 The ehcube Authors
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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ehcube/oracle.hpp"

namespace ehcube::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitUsage = 2,
  kExitResource = 3,
};

enum class OutputFormat { kText, kJson };

/// Everything a command needs after argument parsing.
struct RunConfig {
  std::string command;
  int n = 0;
  int k = 0;
  std::string source;
  std::string target;
  std::optional<int> omega;  // route: --paths, certify: --omega
  bool all = false;
  FaultKind faults = FaultKind::kVertex;
  OutputFormat format = OutputFormat::kText;
  std::optional<int> cap;
  unsigned workers = 1;
};

/// Parses `args` (without the program name) and runs the command. Output
/// goes to `out`, diagnostics to `err`; the return value is an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_info(const RunConfig& config, std::ostream& out);
int cmd_route(const RunConfig& config, std::ostream& out);
int cmd_certify(const RunConfig& config, std::ostream& out);

}  // namespace ehcube::cli
