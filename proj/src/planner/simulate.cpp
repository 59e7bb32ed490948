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

#include "qubus/planner/simulate.hpp"

#include "qubus/planner/validate.hpp"

namespace qubus {

SimulationResult simulate_schedule(std::span<const BusOp> ops, const LatticeSpec& lattice, double beta_sq,
                                   double tol) {
  SimulationResult result{HybridState::plus_register(lattice.num_qubits()), false, std::nullopt, {}};
  result.correction_frame = validate_schedule(ops, lattice, {.require_complete = false}).correction_frame;
  const double beta = beta_from_sq(beta_sq);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const BusOp& op = ops[i];
    if (op.kind == BusOpKind::NewBus) {
      if (!is_bus_disentangled(result.state, tol)) {
        result.stopped_at = i;
        return result;
      }
      result.state.reset_bus(0, tol);
      continue;
    }
    if (op.qubit >= lattice.num_qubits()) throw std::out_of_range("bus operation addresses a missing qubit");
    result.state.apply(op.lower(beta));
  }
  result.disentangled = is_bus_disentangled(result.state, tol);
  return result;
}

SimulationResult simulate_schedule(const Schedule& schedule, double beta_sq, double tol) {
  return simulate_schedule(schedule.ops, schedule.lattice, beta_sq, tol);
}

std::optional<ClusterReport> build_and_verify(const Schedule& schedule, double tol) {
  const SimulationResult sim = simulate_schedule(schedule);
  if (!sim.disentangled) return std::nullopt;
  return verify_cluster_state(sim.state, schedule.lattice, sim.correction_frame, tol);
}

}  // namespace qubus
