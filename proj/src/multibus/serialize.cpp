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

#include "qubus/multibus/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "qubus/planner/serialize.hpp"

namespace qubus::multibus {

using nlohmann::ordered_json;

namespace {

std::string cell_text(const BusOp& op, const LatticeSpec& lattice) {
  if (op.kind == BusOpKind::NewBus) return "new_bus";
  const Coord c = lattice.coord(op.qubit);
  return to_string(op.kind) + " r" + std::to_string(c.row) + "c" + std::to_string(c.col) + " " +
         std::string(qubus::to_string(op.quad));
}

}  // namespace

ordered_json to_json(const ParallelSchedule& s, double tau) {
  const Makespan span = makespan(s, tau);
  ordered_json doc;
  doc["strip"] = {{"w", s.strip.width},
                  {"k", s.strip.buses},
                  {"pitch", to_string(s.strip.pitch)},
                  {"horizon", s.strip.horizon},
                  {"brick_length", s.strip.brick_length},
                  {"stagger", s.strip.stagger}};
  ordered_json slots = ordered_json::array();
  for (std::size_t i = 0; i < span.slots; ++i) slots.push_back(ordered_json::array());
  for (const TimedOp& t : s.ops) {
    if (t.slot < span.slots) slots[t.slot].push_back(ordered_json::array({t.bus, bus_op_to_json(t.op, s.lattice)}));
  }
  doc["slots"] = std::move(slots);
  doc["makespan_slots"] = span.slots;
  doc["makespan_seconds"] = span.seconds;
  doc["gates_per_bus"] = s.gates_per_bus;
  doc["gates_per_brick"] = s.gates_per_brick;
  doc["conflicts"] = check_conflicts(s).size();
  return doc;
}

std::string occupancy_csv(const ParallelSchedule& s, double tau) {
  const Makespan span = makespan(s, tau);
  std::vector<std::vector<std::string>> cells(span.slots, std::vector<std::string>(s.strip.buses));
  for (const TimedOp& t : s.ops) {
    if (t.slot >= span.slots) continue;
    std::string& cell = cells[t.slot][t.bus];
    cell += (cell.empty() ? "" : " ") + cell_text(t.op, s.lattice);
  }
  std::ostringstream out;
  out << "slot,time_s";
  for (std::size_t j = 0; j < s.strip.buses; ++j) out << ",bus_" << j;
  out << "\n";
  char buf[32];
  for (std::size_t i = 0; i < span.slots; ++i) {
    std::snprintf(buf, sizeof buf, "%.11e", static_cast<double>(i) * tau);
    out << i << "," << buf;
    for (const std::string& c : cells[i]) out << "," << c;
    out << "\n";
  }
  return out.str();
}

}  // namespace qubus::multibus
