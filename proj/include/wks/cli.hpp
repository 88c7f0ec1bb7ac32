// Copyright 2026 The wks Authors
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

#ifndef WKS_CLI_HPP_
#define WKS_CLI_HPP_

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace wks::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kStructural = 1;
inline constexpr int kInfeasible = 2;

// Parses `args` (without the program name) and runs one subcommand:
//   gen gap|vc|random, solve-lp, round-offline, online, oracle, report.
// Diagnostics go to `err`; results go to the files named by -o.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Joins result files (any mix of solve-lp, round-offline, online and oracle
// outputs) on instance_id into CSV text, rows sorted by instance_id.
std::string build_report(const std::vector<nlohmann::json>& results);

}  // namespace wks::cli

#endif  // WKS_CLI_HPP_
