// Copyright 2026 The Qubus Cluster Authors
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

#include "qubus/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "qubus/budget/error_budget.hpp"
#include "qubus/multibus/scheduler.hpp"
#include "qubus/multibus/serialize.hpp"
#include "qubus/planner/brute_force.hpp"
#include "qubus/planner/planner.hpp"
#include "qubus/planner/serialize.hpp"
#include "qubus/planner/simulate.hpp"
#include "qubus/planner/validate.hpp"

namespace qubus::cli {

using nlohmann::ordered_json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PlanArgs {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::string strategy;
  std::size_t brick_length = 0;
  std::size_t width = 2;
  std::string output;
};

struct SimulateArgs {
  std::string input;
  bool check_stabilizers = false;
  double tol = 1e-6;
  double beta_sq = kCphaseBetaSq;
};

struct BudgetArgs {
  budget::NoiseParams params;
  std::string format = "json";
};

struct ParallelArgs {
  std::size_t width = 0;
  std::size_t buses = 0;
  std::string pitch = "one-per-two-rows";
  std::size_t horizon = 0;
  std::size_t brick_length = 5;
  std::size_t stagger = multibus::kMinStagger;
  double tau = 1.0;
  bool verify = false;
  std::string format = "json";
  std::string output;
};

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  file << text;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

int cmd_plan(const PlanArgs& a, std::ostream& out, std::ostream& err) {
  const LatticeSpec lattice(a.rows, a.cols);
  Schedule schedule = [&] {
    if (a.strategy == "search") {
      const EdgeSearchResult r = brute_force_max_edges(lattice, a.width);
      return make_schedule(lattice, Strategy::parse("search"), r.witness);
    }
    if (a.strategy == "bricks" && a.brick_length == 0) throw UsageError("bricks needs --brick-length");
    return plan(lattice, Strategy::parse(a.strategy, a.brick_length));
  }();
  write_output(a.output, schedule_to_string(schedule), out);
  std::ostream& summary = a.output.empty() || a.output == "-" ? err : out;
  summary << "N=" << schedule.op_count << " buses=" << schedule.bus_count << " turns=" << schedule.turns << "\n";
  return kExitOk;
}

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  const Schedule schedule = schedule_from_string(read_file(a.input));
  if (schedule.lattice.num_qubits() > kMaxCliQubits) {
    throw ResourceError("schedule needs " + std::to_string(schedule.lattice.num_qubits()) +
                        " qubits, the limit is " + std::to_string(kMaxCliQubits));
  }
  if (!(a.tol > 0.0)) throw UsageError("--tol must be positive");
  if (!(a.beta_sq > 0.0)) throw UsageError("--beta-sq must be positive");
  const SimulationResult sim = simulate_schedule(schedule, a.beta_sq);
  ordered_json report;
  report["disentangled"] = sim.disentangled;
  bool pass = sim.disentangled;
  if (a.check_stabilizers && sim.disentangled) {
    const ClusterReport cluster = verify_cluster_state(sim.state, schedule.lattice, sim.correction_frame, a.tol);
    report["stabilizers_pass"] = cluster.pass;
    report["min_stabilizer"] = cluster.min_stabilizer();
    pass = cluster.pass;
  } else if (a.check_stabilizers) {
    report["stabilizers_pass"] = false;
    report["min_stabilizer"] = nullptr;
  } else {
    report["stabilizers_pass"] = nullptr;
    report["min_stabilizer"] = nullptr;
  }
  report["N"] = schedule.op_count;
  report["schedule_valid"] = validate_schedule(schedule).valid;
  out << dump(std::move(report));
  return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_budget(const BudgetArgs& a, std::ostream& out) {
  try {
    a.params.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const budget::BudgetReport r = budget::evaluate_budget(a.params);
  const budget::ReuseAdvantage adv = budget::reuse_advantage(a.params);
  if (a.format == "csv") {
    const bool bounded = r.b_lego != budget::kNoLimit;
    out << "b_lego,b_no_reuse,epsilon_at_b,qubits_connected,gates,lego_better\n"
        << budget::format_bound(r.b_lego) << "," << budget::format_bound(r.b_no_reuse) << ","
        << (bounded ? sci(r.epsilon_at_b) : "") << "," << budget::format_bound(r.qubits_connected) << ","
        << budget::format_bound(r.gates) << "," << (adv.lego_better ? "true" : "false") << "\n";
    return kExitOk;
  }
  ordered_json j = budget::to_json(r);
  j["reuse_advantage"] = {{"lego_better", adv.lego_better},
                          {"rule_of_thumb", adv.rule_of_thumb},
                          {"margin", adv.margin},
                          {"in_margin_band", adv.in_margin_band}};
  out << dump(std::move(j));
  return kExitOk;
}

int cmd_parallel(const ParallelArgs& a, std::ostream& out, std::ostream& err) {
  multibus::StripSpec strip;
  try {
    strip.pitch = multibus::pitch_from_string(a.pitch);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  strip.width = a.width;
  strip.brick_length = a.brick_length;
  strip.horizon = a.horizon == 0 ? a.brick_length + 1 : a.horizon;
  strip.buses = a.buses == 0 ? strip.num_bands() : a.buses;
  strip.stagger = a.stagger;
  if (a.tau < 0.0 || !std::isfinite(a.tau)) throw UsageError("--tau must be a non-negative number");

  const multibus::ParallelSchedule schedule = multibus::schedule_parallel(strip);
  const auto conflicts = multibus::check_conflicts(schedule);
  for (const auto& c : conflicts) err << to_string(c.kind) << " at slot " << c.slot << ": " << c.message << "\n";

  bool pass = conflicts.empty();
  std::optional<bool> verified;
  if (a.verify) {
    if (schedule.lattice.num_qubits() > kMaxCliQubits) {
      throw ResourceError("strip needs " + std::to_string(schedule.lattice.num_qubits()) +
                          " qubits, the limit is " + std::to_string(kMaxCliQubits));
    }
    const auto report = multibus::verify_parallel(schedule);
    verified = report && report->pass;
    pass = pass && *verified;
  }

  if (a.format == "csv") {
    write_output(a.output, multibus::occupancy_csv(schedule, a.tau), out);
  } else {
    ordered_json j = multibus::to_json(schedule, a.tau);
    if (verified) j["stabilizers_pass"] = *verified;
    write_output(a.output, dump(std::move(j)), out);
  }
  if (!a.output.empty() && a.output != "-") {
    const auto span = multibus::makespan(schedule, a.tau);
    out << "N=" << schedule.op_count() << " makespan_slots=" << span.slots << " conflicts=" << conflicts.size()
        << "\n";
  }
  return pass ? kExitOk : kExitVerificationFailed;
}

}  // namespace

void round_floats(ordered_json& j) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (std::isfinite(v)) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.12g", v);
      j = std::strtod(buf, nullptr);
    }
    return;
  }
  if (j.is_structured()) {
    for (auto& child : j) round_floats(child);
  }
}

std::string dump(ordered_json j) {
  round_floats(j);
  return j.dump(2) + "\n";
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Plan, simulate and budget bus-mediated cluster-state construction", "qubus"};
  app.require_subcommand(1);

  PlanArgs plan_args;
  auto* plan_cmd = app.add_subcommand("plan", "Write a bus schedule for an m x n cluster");
  plan_cmd->add_option("--rows,-m", plan_args.rows, "Lattice rows")->required()->check(CLI::PositiveNumber);
  plan_cmd->add_option("--cols,-n", plan_args.cols, "Lattice columns")->required()->check(CLI::PositiveNumber);
  plan_cmd->add_option("--strategy,-s", plan_args.strategy, "no-reuse, line, zigzag2, bricks or search")
      ->required()
      ->check(CLI::IsMember({"no-reuse", "line", "zigzag2", "bricks", "search"}));
  plan_cmd->add_option("--brick-length,-b", plan_args.brick_length, "Brick length for the bricks strategy");
  plan_cmd->add_option("--width", plan_args.width, "Width limit for the search strategy")
      ->check(CLI::IsMember({1, 2}));
  plan_cmd->add_option("--output,-o", plan_args.output, "Schedule file (stdout if omitted)");

  SimulateArgs sim_args;
  auto* sim_cmd = app.add_subcommand("simulate", "Run a schedule file through the exact simulator");
  sim_cmd->add_option("schedule", sim_args.input, "Schedule JSON file")->required();
  sim_cmd->add_flag("--check-stabilizers", sim_args.check_stabilizers, "Verify every cluster stabilizer");
  sim_cmd->add_option("--tol", sim_args.tol, "Stabilizer tolerance");
  sim_cmd->add_option("--beta-sq", sim_args.beta_sq, "Displacement area beta^2");

  BudgetArgs budget_args;
  auto* budget_cmd = app.add_subcommand("budget", "Largest brick within a dephasing budget");
  budget_cmd->add_option("--gamma-tau", budget_args.params.gamma_tau, "Dephasing per operation")->required();
  budget_cmd->add_option("--eta", budget_args.params.eta, "Bus loss parameter")->required();
  budget_cmd->add_option("--epsilon", budget_args.params.epsilon, "Error threshold in (0, 1/2)")->required();
  budget_cmd->add_option("--beta-sq,--beta2", budget_args.params.beta_sq, "Displacement area beta^2");
  budget_cmd->add_option("--format", budget_args.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  ParallelArgs par_args;
  auto* par_cmd = app.add_subcommand("parallel", "Stagger several buses along a strip");
  par_cmd->add_option("--width,-w", par_args.width, "Strip width in rows")->required();
  par_cmd->add_option("--buses,-k", par_args.buses, "Bus count (default: one per band)");
  par_cmd->add_option("--pitch", par_args.pitch, "one-per-two-rows or one-per-row");
  par_cmd->add_option("--horizon", par_args.horizon, "Strip length in columns (default: brick length + 1)");
  par_cmd->add_option("--brick-length,-b", par_args.brick_length, "Columns per brick");
  par_cmd->add_option("--stagger", par_args.stagger, "Start offset between adjacent buses, in slots");
  par_cmd->add_option("--tau", par_args.tau, "Duration of one operation slot in seconds");
  par_cmd->add_flag("--verify", par_args.verify, "Simulate all buses and check the stabilizers");
  par_cmd->add_option("--format", par_args.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  par_cmd->add_option("--output,-o", par_args.output, "Output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (plan_cmd->parsed()) return cmd_plan(plan_args, out, err);
    if (sim_cmd->parsed()) return cmd_simulate(sim_args, out);
    if (budget_cmd->parsed()) return cmd_budget(budget_args, out);
    if (par_cmd->parsed()) return cmd_parallel(par_args, out, err);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace qubus::cli
