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

#include <iostream>
#include <string>
#include <vector>

#include "cli_core.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  slocc::cli::CliResult r = slocc::cli::run_cli(args);
  if (!r.report.is_null())
    std::cout << (r.json_mode ? r.report.dump(2) : r.text) << '\n';
  else if (r.exit_code == 0)
    std::cout << r.text << '\n';
  else
    std::cerr << r.text << '\n';
  return r.exit_code;
}
