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

#ifndef QUBUS_PLANNER_PLANNER_HPP
#define QUBUS_PLANNER_PLANNER_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "qubus/core/lattice.hpp"
#include "qubus/planner/band_sweep.hpp"
#include "qubus/planner/schedule.hpp"

namespace qubus {

/// How the lattice is cut into two-row bands. Band rows are "virtual rows":
/// when transposed, a virtual row is a lattice column.
///
/// If exactly one side is even, bands tile that side so every band has two
/// rows. Otherwise bands run along the longer side; with an odd width the
/// last band has a single row.
struct BandLayout {
  bool transposed = false;
  std::size_t width = 0;   // virtual rows
  std::size_t length = 0;  // virtual columns

  static BandLayout choose(const LatticeSpec& lattice);

  std::size_t num_bands() const { return (width + 1) / 2; }
  std::size_t qubit(const LatticeSpec& lattice, std::size_t vrow, std::size_t vcol) const;
};

/// Builds a schedule for one of NoReuse, Line, ZigZag2, Bricks(b).
///
/// Throws std::invalid_argument for lattices smaller than 2x2, for b < 1,
/// and for the Search strategy (use brute_force_max_edges).
Schedule plan(const LatticeSpec& lattice, Strategy strategy);

struct Brick {
  std::size_t band = 0;
  std::size_t col_begin = 0;  // virtual columns [col_begin, col_end)
  std::size_t col_end = 0;
  std::vector<std::size_t> core;         // qubits owned by the brick
  std::vector<std::size_t> connections;  // stitch and lead qubits built earlier
  std::vector<BusOp> ops;
  std::size_t gates = 0;

  std::size_t qubit_count() const { return core.size() + connections.size(); }
  std::size_t op_count() const { return ops.size(); }
};

struct BrickPlan {
  LatticeSpec lattice{1, 1};
  std::size_t brick_length = 0;
  std::vector<Brick> bricks;
  /// Qubits attached by more than one brick, with the bricks that touch them.
  std::map<std::size_t, std::vector<std::size_t>> shared_qubits;

  /// All bricks in order, separated by NewBus.
  Schedule schedule() const;
};

/// Cuts every band into bricks of b columns starting from the same edge.
/// Each brick joins its band to the band above (stitch edges) and to the
/// previous brick in its band (two lead edges), and uses one fresh bus.
BrickPlan plan_bricks(const LatticeSpec& lattice, std::size_t brick_length);

}  // namespace qubus

#endif  // QUBUS_PLANNER_PLANNER_HPP
