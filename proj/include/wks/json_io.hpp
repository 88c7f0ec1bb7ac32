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

#ifndef WKS_JSON_IO_HPP_
#define WKS_JSON_IO_HPP_

#include <filesystem>
#include <string>

#include "json.hpp"
#include "wks/fractional.hpp"
#include "wks/instance.hpp"
#include "wks/schedule.hpp"

namespace wks {

// {"n", "classes": [{"weight": "p/q", "count"}], "initial", "requests",
//  "metadata"}
nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& doc);

// {"T", "x": [v][j][t] decimal strings}
nlohmann::json fractional_to_json(const FractionalSolution& frac);
FractionalSolution fractional_from_json(const nlohmann::json& doc);

// {"T", "class_counts": [..], "servers": [{"class", "positions": [..]}]}
nlohmann::json schedule_to_json(const Schedule& sched);
Schedule schedule_from_json(const nlohmann::json& doc);

nlohmann::json read_json_file(const std::filesystem::path& path);
// Writes to a sibling temporary and renames, so readers never see a
// partially written file.
void write_text_file_atomic(const std::filesystem::path& path,
                            const std::string& contents);
void write_json_file(const std::filesystem::path& path,
                     const nlohmann::json& doc);

}  // namespace wks

#endif  // WKS_JSON_IO_HPP_
