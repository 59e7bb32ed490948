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

#include "qubus/planner/schedule.hpp"

#include <stdexcept>

#include "qubus/planner/validate.hpp"

namespace qubus {

CondDisplacement BusOp::lower(double magnitude) const {
  switch (kind) {
    case BusOpKind::Attach: return {qubit, quad, +1, magnitude};
    case BusOpKind::Detach: return {qubit, quad, -1, magnitude};
    case BusOpKind::NewBus: break;
  }
  throw std::logic_error("a bus switch has no displacement");
}

std::string to_string(BusOpKind k) {
  switch (k) {
    case BusOpKind::Attach: return "attach";
    case BusOpKind::Detach: return "detach";
    case BusOpKind::NewBus: return "new_bus";
  }
  return "unknown";
}

std::string Strategy::name() const {
  switch (kind) {
    case Kind::NoReuse: return "no-reuse";
    case Kind::Line: return "line";
    case Kind::ZigZag2: return "zigzag2";
    case Kind::Bricks: return "bricks";
    case Kind::Search: return "search";
  }
  return "unknown";
}

Strategy Strategy::parse(const std::string& name, std::size_t brick_length) {
  if (name == "no-reuse") return no_reuse();
  if (name == "line") return line();
  if (name == "zigzag2") return zigzag2();
  if (name == "bricks") return bricks(brick_length);
  if (name == "search") return {Kind::Search, 0};
  throw std::invalid_argument("unknown strategy '" + name + "'");
}

Schedule make_schedule(const LatticeSpec& lattice, Strategy strategy, std::vector<BusOp> ops,
                       std::size_t turns) {
  Schedule s{lattice, strategy, std::move(ops), 0, 0, {}, turns};
  for (const BusOp& op : s.ops) {
    if (op.is_displacement()) ++s.op_count;
  }
  const ValidationReport report = validate_schedule(s.ops, lattice, {.require_complete = false});
  s.gates_per_bus = report.gates_per_segment.front();
  s.bus_count = s.gates_per_bus.size();
  return s;
}

Quadrature checkerboard_quadrature(const LatticeSpec& lattice, std::size_t qubit) {
  const Coord c = lattice.coord(qubit);
  return (c.row + c.col) % 2 == 0 ? Quadrature::Position : Quadrature::Momentum;
}

}  // namespace qubus
