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

#ifndef QUBUS_PLANNER_BRUTE_FORCE_HPP
#define QUBUS_PLANNER_BRUTE_FORCE_HPP

#include <cstddef>
#include <vector>

#include "qubus/core/lattice.hpp"
#include "qubus/planner/schedule.hpp"

namespace qubus {

/// Largest lattice the exhaustive search accepts (mn <= 12).
inline constexpr std::size_t kBruteForceMaxQubits = 12;

struct EdgeSearchResult {
  std::size_t max_edges = 0;
  std::vector<BusOp> witness;
};

/// Exhaustive search over single-bus schedules in which every qubit is
/// attached exactly once, with at most `width_limit` qubits live per
/// quadrature. A move is legal only if it creates no unwanted pair and no
/// cancelled pair, so every coupling is a lattice edge.
///
/// The witness is the lexicographically smallest optimal schedule (attach
/// before detach, then qubit index, then Position before Momentum).
/// Throws std::invalid_argument for width_limit outside {1, 2} or mn > 12.
EdgeSearchResult brute_force_max_edges(const LatticeSpec& lattice, std::size_t width_limit);

}  // namespace qubus

#endif  // QUBUS_PLANNER_BRUTE_FORCE_HPP
