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

#include "qubus/core/cluster_check.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace qubus {

double ClusterReport::min_stabilizer() const {
  if (stabilizer_values.empty()) return std::numeric_limits<double>::quiet_NaN();
  return *std::min_element(stabilizer_values.begin(), stabilizer_values.end());
}

ClusterReport verify_cluster_state(const HybridState& state, const LatticeSpec& lattice,
                                   std::span<const double> correction_frame, double tol) {
  if (state.num_qubits() != lattice.num_qubits()) {
    throw std::invalid_argument("register has " + std::to_string(state.num_qubits()) +
                                " qubits but the lattice has " + std::to_string(lattice.num_qubits()));
  }
  if (!correction_frame.empty() && correction_frame.size() != lattice.num_qubits()) {
    throw std::invalid_argument("correction frame size does not match the lattice");
  }
  for (std::size_t bus = 0; bus < state.num_buses(); ++bus) {
    if (!is_bus_disentangled(state, kDefaultTol, bus)) {
      throw PreconditionError("cannot verify the register while a bus is entangled with it");
    }
  }

  const auto amps = state.amplitudes();
  ClusterReport report;
  report.pass = true;
  for (std::size_t a = 0; a < lattice.num_qubits(); ++a) {
    std::uint64_t z_mask = 0;
    for (std::size_t b : lattice.neighbors(a)) z_mask |= std::uint64_t{1} << b;
    const std::uint64_t flip = std::uint64_t{1} << a;
    // Frame rotations on qubits other than a cancel between psi(z) and
    // psi(z ^ flip); on a they contribute exp(2 i theta_a z_a).
    const double theta = correction_frame.empty() ? 0.0 : correction_frame[a];
    const Complex rot_plus = std::polar(1.0, 2.0 * theta);
    const Complex rot_minus = std::polar(1.0, -2.0 * theta);
    Complex acc{};
    for (std::uint64_t z = 0; z < amps.size(); ++z) {
      Complex term = std::conj(amps[z ^ flip]) * amps[z];
      if (std::popcount(z & z_mask) & 1U) term = -term;
      acc += (z & flip) ? term * rot_minus : term * rot_plus;
    }
    report.stabilizer_values.push_back(acc.real());
    if (std::abs(acc - Complex{1.0, 0.0}) > tol) report.pass = false;
  }
  return report;
}

HybridState ideal_cluster_state(const LatticeSpec& lattice) {
  HybridState s = init_register(lattice.num_qubits());
  for (const Edge& e : lattice.edges()) s.apply_ideal_cz(e.first, e.second);
  return s;
}

}  // namespace qubus
