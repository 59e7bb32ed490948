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

#ifndef QUBUS_MULTIBUS_SCHEDULER_HPP
#define QUBUS_MULTIBUS_SCHEDULER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qubus/core/cluster_check.hpp"
#include "qubus/core/hybrid_state.hpp"
#include "qubus/core/lattice.hpp"
#include "qubus/planner/schedule.hpp"

namespace qubus::multibus {

/// Minimum start offset between adjacent buses, in operation slots.
inline constexpr std::size_t kMinStagger = 6;

enum class Pitch { OnePerTwoRows, OnePerRow };

std::string to_string(Pitch p);
/// "one-per-two-rows" / "one-per-row"; throws std::invalid_argument.
Pitch pitch_from_string(const std::string& s);

/// A strip `width` rows wide and `horizon` columns long, built by `buses`
/// parallel buses. Each bus owns one band: two rows for OnePerTwoRows, one
/// row for OnePerRow. Along its band a bus works in bricks of
/// `brick_length` columns, switching to a fresh bus between bricks.
struct StripSpec {
  std::size_t width = 4;
  std::size_t horizon = 6;
  std::size_t buses = 2;
  Pitch pitch = Pitch::OnePerTwoRows;
  std::size_t brick_length = 5;
  std::size_t stagger = kMinStagger;

  std::size_t num_bands() const;
  /// Throws std::invalid_argument for width < 2, horizon < 1, buses < 1,
  /// brick_length < 1, odd width with OnePerTwoRows, or a bus count that
  /// differs from the band count.
  void validate() const;
};

struct TimedOp {
  std::size_t bus = 0;
  std::size_t slot = 0;
  BusOp op;
};

struct ParallelSchedule {
  StripSpec strip;
  LatticeSpec lattice{1, 1};
  /// Slot order; within a slot, bus order; NewBus precedes the op it enables.
  std::vector<TimedOp> ops;
  std::vector<std::size_t> start_slots;
  /// Gates created by each bus, and by each of its bricks.
  std::vector<std::size_t> gates_per_bus;
  std::vector<std::vector<std::size_t>> gates_per_brick;
  /// Number of Attach/Detach ops.
  std::size_t op_count() const;
};

/// Lays out every band as a sequence of bricks aligned to the far end of the
/// strip, so a short leading brick comes first. With several buses, every
/// bus follows the same fixed slot template (idle slots stand in for missing
/// stitch operations) and bus j starts at slot j * stagger. A single bus runs
/// its ops back to back.
ParallelSchedule schedule_parallel(const StripSpec& strip);

enum class ConflictKind { QubitCollision, BusOverlap, StaggerTooSmall };

std::string to_string(ConflictKind k);

struct Conflict {
  ConflictKind kind;
  std::size_t slot = 0;
  std::vector<std::size_t> buses;
  std::optional<std::size_t> qubit;
  std::string message;
};

/// Empty iff no qubit is touched by two buses in one slot, no bus runs two
/// ops in one slot, and adjacent buses start at least kMinStagger slots apart.
std::vector<Conflict> check_conflicts(const ParallelSchedule& schedule);

struct Makespan {
  std::size_t slots = 0;
  double seconds = 0.0;
};

/// slots = last occupied slot + 1 (0 for an empty schedule); seconds = slots * tau.
Makespan makespan(const ParallelSchedule& schedule, double tau = 0.0);

/// Qubits per slot: lattice size over makespan.
double throughput(const ParallelSchedule& schedule);

struct ParallelSimulation {
  HybridState state;
  bool disentangled = false;
  std::vector<double> correction_frame;
  bool schedule_valid = false;
};

/// Runs the merged op stream on a register with one bus mode per bus.
/// Throws std::invalid_argument if the strip exceeds max_qubits.
ParallelSimulation simulate_parallel(const ParallelSchedule& schedule, std::size_t max_qubits = 24);

/// Simulation followed by stabilizer verification; nullopt if a bus ended
/// entangled.
std::optional<ClusterReport> verify_parallel(const ParallelSchedule& schedule, double tol = 1e-6);

}  // namespace qubus::multibus

#endif  // QUBUS_MULTIBUS_SCHEDULER_HPP
