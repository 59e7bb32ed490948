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

#ifndef QUBUS_PLANNER_SCHEDULE_HPP
#define QUBUS_PLANNER_SCHEDULE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "qubus/core/lattice.hpp"
#include "qubus/core/types.hpp"

namespace qubus {

enum class BusOpKind { Attach, Detach, NewBus };

/// One bus-level instruction. Attach couples a qubit to a quadrature with a
/// +beta conditional displacement; Detach undoes it with -beta on the same
/// quadrature; NewBus swaps in a fresh bus (no displacement).
struct BusOp {
  BusOpKind kind = BusOpKind::NewBus;
  std::size_t qubit = 0;
  Quadrature quad = Quadrature::Position;

  static BusOp attach(std::size_t q, Quadrature quad) { return {BusOpKind::Attach, q, quad}; }
  static BusOp detach(std::size_t q, Quadrature quad) { return {BusOpKind::Detach, q, quad}; }
  static BusOp new_bus() { return {}; }

  bool is_displacement() const { return kind != BusOpKind::NewBus; }
  /// Throws std::logic_error for NewBus.
  CondDisplacement lower(double magnitude) const;

  friend bool operator==(const BusOp& a, const BusOp& b) {
    if (a.kind != b.kind) return false;
    return a.kind == BusOpKind::NewBus || (a.qubit == b.qubit && a.quad == b.quad);
  }
};

std::string to_string(BusOpKind k);

struct Strategy {
  enum class Kind { NoReuse, Line, ZigZag2, Bricks, Search };
  Kind kind = Kind::ZigZag2;
  std::size_t brick_length = 0;  // Bricks only

  static Strategy no_reuse() { return {Kind::NoReuse, 0}; }
  static Strategy line() { return {Kind::Line, 0}; }
  static Strategy zigzag2() { return {Kind::ZigZag2, 0}; }
  static Strategy bricks(std::size_t b) { return {Kind::Bricks, b}; }

  /// "no-reuse", "line", "zigzag2", "bricks", "search".
  std::string name() const;
  /// Inverse of name(); brick_length is attached for "bricks".
  static Strategy parse(const std::string& name, std::size_t brick_length = 0);

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

/// Ordered bus operations for one lattice plus bookkeeping derived from them.
struct Schedule {
  LatticeSpec lattice{1, 1};
  Strategy strategy;
  std::vector<BusOp> ops;
  std::size_t op_count = 0;  // Attach + Detach; NewBus excluded
  std::size_t bus_count = 0;
  std::vector<std::size_t> gates_per_bus;
  std::size_t turns = 0;
};

/// Fills op_count, bus_count and gates_per_bus from the ops.
Schedule make_schedule(const LatticeSpec& lattice, Strategy strategy, std::vector<BusOp> ops,
                       std::size_t turns = 0);

/// Position on even (row + col) parity, Momentum on odd. Every planner uses
/// this colouring, so nearest neighbours always sit on opposite quadratures.
Quadrature checkerboard_quadrature(const LatticeSpec& lattice, std::size_t qubit);

}  // namespace qubus

#endif  // QUBUS_PLANNER_SCHEDULE_HPP
