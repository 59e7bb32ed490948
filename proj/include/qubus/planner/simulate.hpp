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

#ifndef QUBUS_PLANNER_SIMULATE_HPP
#define QUBUS_PLANNER_SIMULATE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qubus/core/cluster_check.hpp"
#include "qubus/core/hybrid_state.hpp"
#include "qubus/planner/schedule.hpp"

namespace qubus {

struct SimulationResult {
  HybridState state;
  /// False when a bus was switched out or the run ended while still entangled.
  bool disentangled = false;
  /// Index of the op at which the run stopped early, if any.
  std::optional<std::size_t> stopped_at;
  /// Correction frame derived from the schedule.
  std::vector<double> correction_frame;
};

/// Lowers every Attach/Detach to a conditional displacement of magnitude
/// beta = sqrt(beta_sq) and runs it on |+>^(mn). NewBus resets the bus; if
/// the bus is still entangled at that point the run stops there.
SimulationResult simulate_schedule(std::span<const BusOp> ops, const LatticeSpec& lattice,
                                   double beta_sq = kCphaseBetaSq, double tol = kDefaultTol);
SimulationResult simulate_schedule(const Schedule& schedule, double beta_sq = kCphaseBetaSq,
                                   double tol = kDefaultTol);

/// Simulates and checks every cluster stabilizer with the schedule's frame.
/// Returns nullopt if the bus ended entangled.
std::optional<ClusterReport> build_and_verify(const Schedule& schedule, double tol = 1e-6);

}  // namespace qubus

#endif  // QUBUS_PLANNER_SIMULATE_HPP
