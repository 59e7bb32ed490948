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

#ifndef QUBUS_CORE_CLUSTER_CHECK_HPP
#define QUBUS_CORE_CLUSTER_CHECK_HPP

#include <span>
#include <vector>

#include "qubus/core/hybrid_state.hpp"
#include "qubus/core/lattice.hpp"

namespace qubus {

struct ClusterReport {
  bool pass = false;
  /// <K_a> for every lattice site a, K_a = X_a prod_{b in nbr(a)} Z_b.
  std::vector<double> stabilizer_values;
  double min_stabilizer() const;
};

/// Rotates qubit q by exp(i frame[q] z_q), then evaluates every cluster
/// stabilizer. Passes iff all of them are +1 within tol.
///
/// Throws PreconditionError when a bus is still entangled and
/// std::invalid_argument when the frame or register size does not match the
/// lattice.
ClusterReport verify_cluster_state(const HybridState& state, const LatticeSpec& lattice,
                                   std::span<const double> correction_frame, double tol = 1e-6);

/// |+>^n followed by an ideal CZ on every lattice edge.
HybridState ideal_cluster_state(const LatticeSpec& lattice);

}  // namespace qubus

#endif  // QUBUS_CORE_CLUSTER_CHECK_HPP
