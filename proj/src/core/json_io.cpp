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

#include "wks/json_io.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include "wks/error.hpp"

namespace wks {

using nlohmann::json;

namespace {

template <typename T>
T get_field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw StructuralError(std::string("missing field '") + key + "'");
  }
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw StructuralError(std::string("bad field '") + key + "': " + e.what());
  }
}

Rational rational_from_json(const json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  if (value.is_number()) return from_double(value.get<double>());
  throw StructuralError("expected a number or numeric string");
}

}  // namespace

json instance_to_json(const Instance& inst) {
  json classes = json::array();
  for (int j = 0; j < inst.num_classes(); ++j) {
    classes.push_back({{"weight", to_rational_string(inst.weight(j))},
                       {"count", inst.count(j)}});
  }
  const auto initial = inst.setup().initial_positions();
  const auto requests = inst.requests();
  return json{{"n", inst.num_vertices()},
              {"classes", classes},
              {"initial", std::vector<int>(initial.begin(), initial.end())},
              {"requests", std::vector<int>(requests.begin(), requests.end())},
              {"metadata", inst.metadata()}};
}

Instance instance_from_json(const json& doc) {
  const int n = get_field<int>(doc, "n");
  std::vector<WeightClass> classes;
  for (const auto& c : get_field<json>(doc, "classes")) {
    classes.push_back({rational_from_json(c.at("weight")), get_field<int>(c, "count")});
  }
  json metadata = doc.contains("metadata") ? doc.at("metadata") : json::object();
  return Instance(n, std::move(classes), get_field<std::vector<int>>(doc, "initial"),
                  get_field<std::vector<int>>(doc, "requests"), std::move(metadata));
}

json fractional_to_json(const FractionalSolution& frac) {
  json x = json::array();
  for (int v = 0; v < frac.num_vertices(); ++v) {
    json per_class = json::array();
    for (int j = 0; j < frac.num_classes(); ++j) {
      json series = json::array();
      for (int t = 0; t <= frac.horizon(); ++t) {
        series.push_back(to_decimal_string(frac.at(v, j, t)));
      }
      per_class.push_back(std::move(series));
    }
    x.push_back(std::move(per_class));
  }
  return json{{"T", frac.horizon()}, {"x", std::move(x)}};
}

FractionalSolution fractional_from_json(const json& doc) {
  const int horizon = get_field<int>(doc, "T");
  const auto& x = doc.at("x");
  const int n = static_cast<int>(x.size());
  const int l = n > 0 ? static_cast<int>(x[0].size()) : 0;
  FractionalSolution frac(n, l, horizon);
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(x[v].size()) != l) throw StructuralError("ragged class dimension");
    for (int j = 0; j < l; ++j) {
      const auto& series = x[v][j];
      if (static_cast<int>(series.size()) != horizon + 1) {
        throw StructuralError("expected T+1 time entries per (v, j)");
      }
      for (int t = 0; t <= horizon; ++t) frac.at(v, j, t) = rational_from_json(series[t]);
    }
  }
  return frac;
}

json schedule_to_json(const Schedule& sched) {
  json servers = json::array();
  for (int i = 0; i < sched.num_servers(); ++i) {
    servers.push_back({{"class", sched.class_of_server(i)},
                       {"positions", sched.trajectory(i)}});
  }
  return json{{"T", sched.horizon()},
              {"class_counts", sched.class_counts()},
              {"servers", std::move(servers)}};
}

Schedule schedule_from_json(const json& doc) {
  const int horizon = get_field<int>(doc, "T");
  const auto counts = get_field<std::vector<int>>(doc, "class_counts");
  const auto& servers = doc.at("servers");
  std::vector<int> initial;
  for (const auto& s : servers) {
    const auto pos = get_field<std::vector<int>>(s, "positions");
    if (static_cast<int>(pos.size()) != horizon + 1) {
      throw StructuralError("server trajectory must have T+1 entries");
    }
    initial.push_back(pos[0]);
  }
  Schedule sched(counts, initial, horizon);
  for (int i = 0; i < sched.num_servers(); ++i) {
    if (get_field<int>(servers[i], "class") != sched.class_of_server(i)) {
      throw StructuralError("servers must be listed class-major");
    }
    const auto pos = get_field<std::vector<int>>(servers[i], "positions");
    for (int t = 0; t <= horizon; ++t) sched.set_position(i, t, pos[t]);
  }
  return sched;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw StructuralError("invalid JSON in " + path.string() + ": " + e.what());
  }
}

void write_text_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw StructuralError("cannot write " + tmp.string());
    out << contents;
    if (!out) throw StructuralError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw StructuralError("cannot rename onto " + path.string() + ": " + ec.message());
}

void write_json_file(const std::filesystem::path& path, const json& doc) {
  write_text_file_atomic(path, doc.dump(2) + "\n");
}

}  // namespace wks
