// Copyright 2026 The slocc authors
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

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace slocc::cli {

/// Outcome of one CLI invocation.
///
/// `report` is the machine-readable report (null when the command never ran,
/// e.g. usage errors); `text` is the human-readable rendering or the error
/// message.  Exit codes: 0 command completed (and, for demos, the check
/// passed), 1 runtime/numerical failure or failing demo, 2 usage or input
/// errors.
struct CliResult {
  int exit_code = 0;
  nlohmann::json report;
  std::string text;
  bool json_mode = false;
};

/// Run one invocation; `args` excludes the program name.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace slocc::cli
