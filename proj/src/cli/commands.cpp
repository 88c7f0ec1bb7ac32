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

#include "wks/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "wks/error.hpp"
#include "wks/generators.hpp"
#include "wks/json_io.hpp"
#include "wks/lp/relaxation.hpp"
#include "wks/offline/pipeline.hpp"
#include "wks/online/audit.hpp"
#include "wks/online/pipeline.hpp"
#include "wks/oracle.hpp"

namespace wks::cli {

using nlohmann::json;

namespace {

Execution exec_of(bool serial) { return serial ? Execution::kSerial : Execution::kParallel; }

std::string instance_id(const Instance& inst, const std::string& path) {
  const auto& meta = inst.metadata();
  if (meta.contains("instance_id") && meta["instance_id"].is_string()) {
    return meta["instance_id"].get<std::string>();
  }
  return std::filesystem::path(path).stem().string();
}

json instance_header(const Instance& inst, const std::string& path) {
  return json{{"instance_id", instance_id(inst, path)},
              {"n", inst.num_vertices()},
              {"l", inst.num_classes()},
              {"T", inst.horizon()}};
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw StructuralError("bad integer '" + item + "'");
    }
  }
  return out;
}

std::vector<std::pair<int, int>> parse_edges(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw StructuralError("edge '" + item + "' is not u-v");
    const auto ends = parse_int_list(item.substr(0, dash) + "," + item.substr(dash + 1));
    if (ends.size() != 2) throw StructuralError("edge '" + item + "' is not u-v");
    edges.emplace_back(ends[0], ends[1]);
  }
  return edges;
}

// A schedule file is either a bare schedule or a result holding one.
Schedule load_schedule(const std::string& path) {
  const json doc = read_json_file(path);
  return schedule_from_json(doc.contains("schedule") ? doc.at("schedule") : doc);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

double number_of(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>()).get_d();
  return v.get<double>();
}

}  // namespace

std::string build_report(const std::vector<json>& results) {
  struct Row {
    json header;
    std::optional<double> lp, offline, oracle, mean, stddev;
    std::optional<int> aug;
    std::vector<std::string> seeds;
  };
  std::map<std::string, Row> rows;
  for (const auto& r : results) {
    if (!r.contains("instance_id") || !r.contains("pipeline")) {
      throw StructuralError("result file lacks instance_id or pipeline");
    }
    Row& row = rows[r["instance_id"].get<std::string>()];
    row.header = {{"n", r.value("n", 0)}, {"l", r.value("l", 0)}, {"T", r.value("T", 0)}};
    const std::string kind = r["pipeline"].get<std::string>();
    if (kind == "lp") {
      row.lp = number_of(r.at("lp_value"));
    } else if (kind == "offline") {
      row.offline = number_of(r.at("cost"));
      row.lp = number_of(r.at("lp_value"));
      int worst = 0;
      for (const auto& a : r.at("augmentation")) worst = std::max(worst, a.get<int>());
      row.aug = worst;
    } else if (kind == "online") {
      row.mean = r.at("cost_mean").get<double>();
      row.stddev = r.at("cost_std").get<double>();
      row.seeds.push_back(std::to_string(r.at("seed").get<std::uint64_t>()) + "x" +
                          std::to_string(r.at("runs").get<int>()));
    } else if (kind == "oracle") {
      row.oracle = number_of(r.at("oracle_cost"));
    } else {
      throw StructuralError("unknown pipeline '" + kind + "'");
    }
  }
  std::ostringstream csv;
  csv << "instance_id,n,l,T,lp_value,offline_cost,offline_aug,online_cost_mean,online_cost_std,"
         "oracle_cost,ratios,seeds\n";
  auto cell = [](const std::optional<double>& v) { return v ? fmt(*v) : std::string(); };
  for (const auto& [id, row] : rows) {
    std::vector<std::string> ratios;
    if (row.offline && row.lp && *row.lp > 0) ratios.push_back("offline/lp=" + fmt(*row.offline / *row.lp));
    if (row.offline && row.oracle && *row.oracle > 0) {
      ratios.push_back("offline/oracle=" + fmt(*row.offline / *row.oracle));
    }
    if (row.mean && row.oracle && *row.oracle > 0) {
      ratios.push_back("online/oracle=" + fmt(*row.mean / *row.oracle));
    }
    auto join = [](const std::vector<std::string>& parts) {
      std::string s;
      for (const auto& p : parts) s += (s.empty() ? "" : ";") + p;
      return s;
    };
    csv << id << ',' << row.header["n"].get<int>() << ',' << row.header["l"].get<int>() << ','
        << row.header["T"].get<int>() << ',' << cell(row.lp) << ',' << cell(row.offline) << ','
        << (row.aug ? std::to_string(*row.aug) : "") << ',' << cell(row.mean) << ','
        << cell(row.stddev) << ',' << cell(row.oracle) << ',' << join(ratios) << ','
        << join(row.seeds) << '\n';
  }
  return csv.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted k-server laboratory on the uniform metric", "wks"};
  app.require_subcommand(1);
  bool serial = false;
  app.add_flag("--serial", serial, "Use the serial reference kernels");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->require_subcommand(1);
  std::string gen_out;
  GapParams gap;
  auto* gen_gap = gen->add_subcommand("gap", "Nested-subset integrality-gap instance");
  gen_gap->add_option("--l", gap.l, "Number of classes")->required();
  gen_gap->add_option("--c", gap.c, "Subset shrink factor C")->required();
  gen_gap->add_option("--n", gap.n, "Number of vertices")->required();
  gen_gap->add_option("--m", gap.m, "Weight ratio M")->required();
  gen_gap->add_option("--repeat", gap.repeat, "Whole-sequence repetitions");
  gen_gap->add_option("-o,--out", gen_out, "Output instance file")->required();
  VcParams vc;
  std::string vc_edges;
  auto* gen_vc = gen->add_subcommand("vc", "Vertex-cover hardness instance");
  gen_vc->add_option("--n", vc.n, "Graph vertices")->required();
  gen_vc->add_option("--edges", vc_edges, "Edges as u-v,u-v,...")->required();
  gen_vc->add_option("--t", vc.t, "Heavy servers")->required();
  gen_vc->add_option("--d", vc.d, "Heavy weight exponent")->required();
  gen_vc->add_option("-o,--out", gen_out, "Output instance file")->required();
  int rnd_n = 0;
  int rnd_t = 0;
  std::uint64_t rnd_seed = 0;
  std::vector<std::string> rnd_weights;
  std::string rnd_counts;
  auto* gen_random = gen->add_subcommand("random", "Uniform random requests");
  gen_random->add_option("--n", rnd_n, "Vertices")->required();
  gen_random->add_option("--weights", rnd_weights, "Class weights, descending")
      ->required()
      ->delimiter(',');
  gen_random->add_option("--counts", rnd_counts, "Servers per class, comma separated")->required();
  gen_random->add_option("--T", rnd_t, "Number of requests")->required();
  gen_random->add_option("--seed", rnd_seed, "Generator seed")->required();
  gen_random->add_option("-o,--out", gen_out, "Output instance file")->required();

  // solve-lp
  std::string in_path;
  std::string out_path;
  std::string lp_text;
  double tol = 1e-9;
  auto* solve = app.add_subcommand("solve-lp", "Solve the time-indexed LP relaxation");
  solve->add_option("instance", in_path, "Instance file")->required();
  solve->add_option("-o,--out", out_path, "Result file")->required();
  solve->add_option("--tol", tol, "Simplex tolerance");
  solve->add_option("--lp-text", lp_text, "Also dump the LP in text form");

  // round-offline
  std::string eps_text = "1/2";
  std::string frac_path;
  auto* offline = app.add_subcommand("round-offline", "LP, two-stage rounding, assembly");
  offline->add_option("instance", in_path, "Instance file")->required();
  offline->add_option("-o,--out", out_path, "Result file")->required();
  offline->add_option("--eps", eps_text, "Epsilon as a rational, e.g. 1/4");
  offline->add_option("--fractional", frac_path, "Start from this fractional solution");

  // online
  std::uint64_t seed = 1;
  int runs = 1;
  std::string audit_path;
  std::string traj_path;
  auto* online = app.add_subcommand("online", "Online fractional algorithm with rounding");
  online->add_option("instance", in_path, "Instance file")->required();
  online->add_option("-o,--out", out_path, "Result file")->required();
  online->add_option("--seed", seed, "Seed of the reported run and of the batch");
  online->add_option("--runs", runs, "Monte Carlo runs")->check(CLI::PositiveNumber);
  online->add_option("--audit", audit_path, "Reference schedule for the potential audit");
  online->add_option("--trajectory", traj_path, "Write the fractional trajectory (JSON lines)");

  // oracle
  std::string caps_text;
  auto* orc = app.add_subcommand("oracle", "Exact optimum by configuration DP");
  orc->add_option("instance", in_path, "Instance file")->required();
  orc->add_option("-o,--out", out_path, "Result file")->required();
  orc->add_option("--caps", caps_text, "Servers per class, comma separated");

  // report
  std::vector<std::string> result_paths;
  auto* report = app.add_subcommand("report", "Join result files into CSV");
  report->add_option("results", result_paths, "Result files")->required();
  report->add_option("-o,--out", out_path, "CSV file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kStructural;
  }

  try {
    if (gen->parsed()) {
      Instance inst;
      if (gen_gap->parsed()) {
        inst = gen_gap_instance(gap);
      } else if (gen_vc->parsed()) {
        vc.edges = parse_edges(vc_edges);
        inst = gen_vc_instance(vc);
      } else {
        const auto counts = parse_int_list(rnd_counts);
        if (counts.size() != rnd_weights.size()) {
          throw StructuralError("--weights and --counts differ in length");
        }
        std::vector<WeightClass> classes;
        for (std::size_t j = 0; j < counts.size(); ++j) {
          classes.push_back({parse_rational(rnd_weights[j]), counts[j]});
        }
        inst = gen_random_instance(rnd_n, classes, rnd_t, rnd_seed);
      }
      write_json_file(gen_out, instance_to_json(inst));
      err << "wrote " << gen_out << " (" << inst.horizon() << " requests)\n";
      return kOk;
    }
    if (report->parsed()) {
      std::vector<json> docs;
      for (const auto& p : result_paths) docs.push_back(read_json_file(p));
      write_text_file_atomic(out_path, build_report(docs));
      return kOk;
    }

    const Instance inst = instance_from_json(read_json_file(in_path));
    json result = instance_header(inst, in_path);
    int code = kOk;

    if (solve->parsed()) {
      lp::SolveOptions opts;
      opts.tolerance = tol;
      if (!lp_text.empty()) {
        std::ostringstream text;
        lp::write_lp_text(lp::build_lp(inst).program, text);
        write_text_file_atomic(lp_text, text.str());
      }
      const auto r = lp::solve_relaxation(inst, opts);
      result["pipeline"] = "lp";
      result["status"] = lp::to_string(r.status);
      result["iterations"] = r.iterations;
      result["objective"] = r.objective;
      if (r.status != lp::Status::kOptimal) {
        write_json_file(out_path, result);
        err << "LP not solved: " << lp::to_string(r.status) << '\n';
        return kInfeasible;
      }
      result["lp_value"] = to_rational_string(r.exact_cost);
      result["fractional"] = fractional_to_json(r.x);
    } else if (offline->parsed()) {
      offline::OfflineOptions opts;
      opts.eps = parse_rational(eps_text);
      opts.exec = exec_of(serial);
      const auto r = frac_path.empty()
                         ? offline::round_offline(inst, opts)
                         : offline::round_offline_from_fractional(
                               inst, fractional_from_json(read_json_file(frac_path)), opts);
      result["pipeline"] = "offline";
      result["eps"] = to_rational_string(opts.eps);
      result["cost"] = to_rational_string(r.cost.total);
      result["lp_value"] = to_rational_string(r.lp_value);
      result["augmentation"] = r.augmentation;
      result["caps"] = r.caps;
      result["diagnostics"] = r.diagnostics;
      result["schedule"] = schedule_to_json(r.schedule);
      if (!r.stage1.ok) {
        err << "stage I checks failed\n";
        code = kInfeasible;
      }
    } else if (online->parsed()) {
      const auto traj = online::run_fractional(inst);
      const auto single = online::run_online(inst, seed);
      const auto batch = online::run_online_batch(inst, runs, seed, exec_of(serial));
      result["pipeline"] = "online";
      result["seed"] = seed;
      result["runs"] = runs;
      result["cost"] = to_rational_string(single.cost);
      result["cost_mean"] = batch.mean;
      result["cost_std"] = batch.stddev;
      result["delta"] = 1.0 / (2.0 * inst.num_classes());
      result["diagnostics"] = single.diagnostics;
      result["schedule"] = schedule_to_json(single.schedule);
      std::optional<online::AuditReport> audit;
      if (!audit_path.empty()) {
        audit = online::audit_potential(inst, traj, load_schedule(audit_path));
        result["audit"] = {{"ok", audit->ok},
                           {"violations", audit->violations},
                           {"worst_excess", audit->worst_excess}};
        if (!audit->ok) {
          err << "potential audit: " << audit->violations << " violating steps\n";
          code = kInfeasible;
        }
      }
      if (!traj_path.empty()) {
        std::ostringstream lines;
        online::write_trajectory_jsonl(inst, traj, lines, audit ? &*audit : nullptr);
        write_text_file_atomic(traj_path, lines.str());
      }
    } else if (orc->parsed()) {
      oracle::OracleOptions opts;
      if (!caps_text.empty()) opts.capacities = parse_int_list(caps_text);
      opts.exec = exec_of(serial);
      const auto r = oracle::brute_force_opt(inst, opts);
      result["pipeline"] = "oracle";
      result["oracle_cost"] = to_rational_string(r.cost);
      result["capacities"] = r.schedule.class_counts();
      result["transitions"] = r.transitions;
      result["peak_layer"] = r.peak_layer;
      result["schedule"] = schedule_to_json(r.schedule);
    }
    write_json_file(out_path, result);
    return code;
  } catch (const InfeasibilityError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kStructural;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << '\n';
    return kStructural;
  }
}

}  // namespace wks::cli
