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

#ifndef QUBUS_CORE_PHASE_TABLE_HPP
#define QUBUS_CORE_PHASE_TABLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qubus/core/hybrid_state.hpp"

namespace qubus {

/// Per-branch phase (radians in (-pi, pi]) of a diagonal operation, indexed by
/// branch. Branches whose amplitude vanished are left undefined.
struct PhaseTable {
  std::size_t num_qubits = 0;
  std::vector<std::optional<double>> phases;

  std::optional<double> at(std::string_view bits) const { return phases.at(branch_from_string(bits)); }
};

/// Phase ratio after/before for every branch. Both states must have every bus
/// disentangled within tol; throws PreconditionError otherwise.
PhaseTable extract_diagonal_unitary(const HybridState& before, const HybridState& after,
                                    double tol = kDefaultTol);

/// True iff phi(00) - phi(01) - phi(10) + phi(11) is pi modulo 2 pi within
/// tol, i.e. the table is CPHASE up to local Z rotations and global phase.
/// Throws std::invalid_argument unless the table is a complete 2-qubit table.
bool is_cphase_equivalent(const PhaseTable& table, double tol = kDefaultTol);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double a);

}  // namespace qubus

#endif  // QUBUS_CORE_PHASE_TABLE_HPP
