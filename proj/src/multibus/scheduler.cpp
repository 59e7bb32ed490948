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

#include "qubus/multibus/scheduler.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "qubus/planner/band_sweep.hpp"
#include "qubus/planner/validate.hpp"

namespace qubus::multibus {

std::string to_string(Pitch p) { return p == Pitch::OnePerTwoRows ? "one-per-two-rows" : "one-per-row"; }

Pitch pitch_from_string(const std::string& s) {
  if (s == "one-per-two-rows") return Pitch::OnePerTwoRows;
  if (s == "one-per-row") return Pitch::OnePerRow;
  throw std::invalid_argument("unknown pitch '" + s + "'");
}

std::string to_string(ConflictKind k) {
  switch (k) {
    case ConflictKind::QubitCollision: return "qubit-collision";
    case ConflictKind::BusOverlap: return "bus-overlap";
    case ConflictKind::StaggerTooSmall: return "stagger-too-small";
  }
  return "unknown";
}

std::size_t StripSpec::num_bands() const { return pitch == Pitch::OnePerTwoRows ? width / 2 : width; }

void StripSpec::validate() const {
  if (width < 2) throw std::invalid_argument("strip width must be at least 2");
  if (horizon < 1) throw std::invalid_argument("strip horizon must be at least 1");
  if (buses < 1) throw std::invalid_argument("at least one bus is required");
  if (brick_length < 1) throw std::invalid_argument("brick length must be at least 1");
  if (pitch == Pitch::OnePerTwoRows && width % 2 != 0) {
    throw std::invalid_argument("one-per-two-rows pitch needs an even strip width");
  }
  if (buses != num_bands()) {
    throw std::invalid_argument("pitch " + to_string(pitch) + " on a width-" + std::to_string(width) +
                                " strip needs " + std::to_string(num_bands()) + " buses, got " +
                                std::to_string(buses));
  }
}

std::size_t ParallelSchedule::op_count() const {
  return static_cast<std::size_t>(
      std::count_if(ops.begin(), ops.end(), [](const TimedOp& t) { return t.op.is_displacement(); }));
}

namespace {

struct BandRows {
  std::size_t top;
  std::optional<std::size_t> bottom;
  std::optional<std::size_t> stitch;
};

// The stitch row between two bands belongs to the lower-indexed bus, which
// therefore keeps its stitching row on top.
BandRows band_rows(const StripSpec& strip, std::size_t j) {
  const bool last = j + 1 == strip.buses;
  if (strip.pitch == Pitch::OnePerRow) {
    return {j, std::nullopt, last ? std::nullopt : std::optional<std::size_t>(j + 1)};
  }
  if (last) return {2 * j, 2 * j + 1, std::nullopt};
  return {2 * j + 1, 2 * j, 2 * j + 2};
}

}  // namespace

ParallelSchedule schedule_parallel(const StripSpec& strip) {
  strip.validate();
  const LatticeSpec lattice(strip.width, strip.horizon);
  ParallelSchedule out{strip, lattice, {}, {}, {}, {}};
  const bool lockstep = strip.buses > 1;
  const std::size_t b = strip.brick_length;
  const std::size_t first_len = strip.horizon % b == 0 ? b : strip.horizon % b;

  for (std::size_t j = 0; j < strip.buses; ++j) {
    const BandRows rows = band_rows(strip, j);
    std::vector<std::size_t> brick_gates;
    std::size_t template_offset = j * strip.stagger;
    std::size_t compact = 0;
    std::size_t total_gates = 0;
    std::size_t begin = 0;
    for (std::size_t end = first_len; begin < strip.horizon; begin = end, end += b) {
      BandSegment seg;
      for (std::size_t c = begin; c < end; ++c) {
        seg.top.push_back(lattice.index(rows.top, c));
        if (rows.bottom) seg.bottom.push_back(lattice.index(*rows.bottom, c));
        if (rows.stitch) seg.stitch.push_back(lattice.index(*rows.stitch, c));
      }
      if (begin > 0) {
        seg.lead_top = lattice.index(rows.top, begin - 1);
        if (rows.bottom) seg.lead_bottom = lattice.index(*rows.bottom, begin - 1);
      }
      const std::vector<SlottedOp> slotted = sweep_band(seg, lattice);
      bool first_op = true;
      for (const SlottedOp& so : slotted) {
        const std::size_t slot = lockstep ? template_offset + so.slot : compact++;
        if (first_op && begin > 0) out.ops.push_back({j, slot, BusOp::new_bus()});
        first_op = false;
        out.ops.push_back({j, slot, so.op});
      }
      template_offset += template_length(seg);
      const auto report = validate_schedule(strip_slots(slotted), lattice, {.require_complete = false});
      brick_gates.push_back(report.created_edges.size());
      total_gates += brick_gates.back();
    }
    out.gates_per_bus.push_back(total_gates);
    out.gates_per_brick.push_back(std::move(brick_gates));
  }

  std::stable_sort(out.ops.begin(), out.ops.end(),
                   [](const TimedOp& a, const TimedOp& b) { return a.slot < b.slot; });
  out.start_slots.assign(strip.buses, 0);
  std::vector<bool> seen(strip.buses, false);
  for (const TimedOp& t : out.ops) {
    if (!seen[t.bus]) {
      seen[t.bus] = true;
      out.start_slots[t.bus] = t.slot;
    }
  }
  return out;
}

std::vector<Conflict> check_conflicts(const ParallelSchedule& schedule) {
  std::vector<Conflict> out;
  std::map<std::size_t, std::vector<const TimedOp*>> by_slot;
  for (const TimedOp& t : schedule.ops) {
    if (t.op.is_displacement()) by_slot[t.slot].push_back(&t);
  }
  for (const auto& [slot, list] : by_slot) {
    std::map<std::size_t, std::set<std::size_t>> buses_on_qubit;
    std::map<std::size_t, std::size_t> ops_on_bus;
    for (const TimedOp* t : list) {
      buses_on_qubit[t->op.qubit].insert(t->bus);
      ++ops_on_bus[t->bus];
    }
    for (const auto& [bus, count] : ops_on_bus) {
      if (count > 1) {
        out.push_back({ConflictKind::BusOverlap, slot, {bus}, std::nullopt,
                       "bus " + std::to_string(bus) + " has " + std::to_string(count) + " ops in one slot"});
      }
    }
    for (const auto& [qubit, buses] : buses_on_qubit) {
      if (buses.size() > 1) {
        out.push_back({ConflictKind::QubitCollision, slot, {buses.begin(), buses.end()}, qubit,
                       "qubit " + std::to_string(qubit) + " is driven by " + std::to_string(buses.size()) +
                           " buses in slot " + std::to_string(slot)});
      }
    }
  }
  const auto& starts = schedule.start_slots;
  for (std::size_t j = 0; j + 1 < starts.size(); ++j) {
    const std::size_t gap = starts[j + 1] > starts[j] ? starts[j + 1] - starts[j] : starts[j] - starts[j + 1];
    if (gap < kMinStagger) {
      out.push_back({ConflictKind::StaggerTooSmall, std::min(starts[j], starts[j + 1]), {j, j + 1}, std::nullopt,
                     "buses " + std::to_string(j) + " and " + std::to_string(j + 1) + " start " +
                         std::to_string(gap) + " slots apart"});
    }
  }
  return out;
}

Makespan makespan(const ParallelSchedule& schedule, double tau) {
  Makespan m;
  for (const TimedOp& t : schedule.ops) {
    if (t.op.is_displacement()) m.slots = std::max(m.slots, t.slot + 1);
  }
  m.seconds = static_cast<double>(m.slots) * tau;
  return m;
}

double throughput(const ParallelSchedule& schedule) {
  const std::size_t slots = makespan(schedule).slots;
  if (slots == 0) return 0.0;
  return static_cast<double>(schedule.lattice.num_qubits()) / static_cast<double>(slots);
}

ParallelSimulation simulate_parallel(const ParallelSchedule& schedule, std::size_t max_qubits) {
  const LatticeSpec& lattice = schedule.lattice;
  if (lattice.num_qubits() > max_qubits) {
    throw std::invalid_argument("strip has " + std::to_string(lattice.num_qubits()) +
                                " qubits, simulation limit is " + std::to_string(max_qubits));
  }
  const std::size_t k = std::max<std::size_t>(schedule.strip.buses, 1);
  ParallelSimulation sim{HybridState::plus_register(lattice.num_qubits(), k), false, {}, false};
  ScheduleChecker checker(lattice, k);
  const double beta = beta_from_sq(kCphaseBetaSq);
  for (std::size_t i = 0; i < schedule.ops.size(); ++i) {
    const TimedOp& t = schedule.ops[i];
    checker.feed(t.op, i, t.bus);
    if (t.op.kind == BusOpKind::NewBus) {
      if (!is_bus_disentangled(sim.state, kDefaultTol, t.bus)) return sim;
      sim.state.reset_bus(t.bus);
      continue;
    }
    sim.state.apply(t.op.lower(beta), t.bus);
  }
  const ValidationReport report = checker.finish(schedule.ops.size());
  sim.schedule_valid = report.valid;
  sim.correction_frame = report.correction_frame;
  sim.disentangled = true;
  for (std::size_t bus = 0; bus < k; ++bus) sim.disentangled = sim.disentangled && is_bus_disentangled(sim.state, kDefaultTol, bus);
  return sim;
}

std::optional<ClusterReport> verify_parallel(const ParallelSchedule& schedule, double tol) {
  const ParallelSimulation sim = simulate_parallel(schedule);
  if (!sim.disentangled) return std::nullopt;
  return verify_cluster_state(sim.state, schedule.lattice, sim.correction_frame, tol);
}

}  // namespace qubus::multibus
