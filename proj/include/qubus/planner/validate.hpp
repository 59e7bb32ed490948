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

#ifndef QUBUS_PLANNER_VALIDATE_HPP
#define QUBUS_PLANNER_VALIDATE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "qubus/core/lattice.hpp"
#include "qubus/planner/schedule.hpp"

namespace qubus {

enum class ViolationKind {
  QubitOutOfRange,
  AttachWhileLive,
  DetachWithoutAttach,
  QuadratureMismatch,
  UnwantedEntanglement,
  DuplicateEdge,
  CancelledPair,
  LiveAtBusSwitch,
  LiveAtEnd,
  MissingEdges,
};

std::string to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::size_t op_index = 0;  // position in the op stream (ops.size() for end-of-schedule checks)
  std::vector<std::size_t> qubits;
  std::string message;
};

struct ValidationOptions {
  /// Require every lattice edge to be created. Partial schedules (search
  /// witnesses) switch this off.
  bool require_complete = true;
};

struct ValidationReport {
  bool valid = false;
  /// Edges in creation order.
  std::vector<Edge> created_edges;
  std::vector<Violation> violations;
  /// Per-qubit Z-rotation angle that turns the accumulated geometric gates
  /// into ideal CZs (apply as exp(i angle z_q)).
  std::vector<double> correction_frame;
  /// Gates created by each bus segment, per channel.
  std::vector<std::vector<std::size_t>> gates_per_segment;

  bool has(ViolationKind k) const;
};

/// Walks one or more bus channels and tracks which qubit pairs acquire a
/// geometric phase.
///
/// Each Attach(q, Q) pairs q with every qubit live on the opposite
/// quadrature; a pair with a non-neighbour is reported as unwanted
/// entanglement straight away. A lattice pair becomes a gate only when the
/// two attachment intervals cross: the earlier-attached qubit is detached
/// first. If the later one leaves first the loop encloses no area, the phase
/// cancels, and the pair is reported as CancelledPair.
///
/// The phase of a crossing pair is +pi/4 z_a z_b when the earlier qubit sits
/// on Position and -pi/4 z_a z_b when it sits on Momentum; the correction
/// frame absorbs the matching local rotations.
class ScheduleChecker {
 public:
  ScheduleChecker(const LatticeSpec& lattice, std::size_t num_channels = 1);

  void feed(const BusOp& op, std::size_t op_index, std::size_t channel = 0);
  ValidationReport finish(std::size_t end_index, ValidationOptions options = {});

 private:
  struct Live {
    Quadrature quad;
    std::size_t order;
  };
  struct Channel {
    std::map<std::size_t, Live> live;
    // open pairs keyed by (earlier, later)
    std::set<std::pair<std::size_t, std::size_t>> pending;
    std::vector<std::size_t> segment_gates{0};
  };

  void violate(ViolationKind k, std::size_t index, std::vector<std::size_t> qubits, std::string msg);
  void close_segment(Channel& ch, std::size_t index, ViolationKind kind);

  LatticeSpec lattice_;
  std::vector<Channel> channels_;
  std::size_t order_ = 0;
  std::set<Edge> created_set_;
  ValidationReport report_;
};

ValidationReport validate_schedule(std::span<const BusOp> ops, const LatticeSpec& lattice,
                                   ValidationOptions options = {});
ValidationReport validate_schedule(const Schedule& schedule, ValidationOptions options = {});

}  // namespace qubus

#endif  // QUBUS_PLANNER_VALIDATE_HPP
