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

#include "qubus/core/phase_table.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qubus {

double wrap_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::remainder(a, two_pi);  // [-pi, pi]
  if (r <= -std::numbers::pi) r += two_pi;
  return r;
}

PhaseTable extract_diagonal_unitary(const HybridState& before, const HybridState& after, double tol) {
  if (before.num_qubits() != after.num_qubits()) throw std::invalid_argument("register sizes differ");
  for (const HybridState* s : {&before, &after}) {
    for (std::size_t bus = 0; bus < s->num_buses(); ++bus) {
      if (!is_bus_disentangled(*s, tol, bus)) {
        throw PreconditionError("bus still entangled; the register operation is not a unitary on its own");
      }
    }
  }
  constexpr double kZeroAmp = 1e-12;
  PhaseTable t;
  t.num_qubits = before.num_qubits();
  t.phases.resize(before.num_branches());
  for (std::size_t b = 0; b < before.num_branches(); ++b) {
    const Complex x = before.amp(b);
    const Complex y = after.amp(b);
    if (std::abs(x) < kZeroAmp || std::abs(y) < kZeroAmp) continue;
    t.phases[b] = wrap_angle(std::arg(y / x));
  }
  return t;
}

bool is_cphase_equivalent(const PhaseTable& table, double tol) {
  if (table.num_qubits != 2 || table.phases.size() != 4) {
    throw std::invalid_argument("CPHASE test needs a 2-qubit phase table");
  }
  for (const auto& p : table.phases) {
    if (!p) throw std::invalid_argument("phase table has undefined entries");
  }
  const double sum = *table.at("00") - *table.at("01") - *table.at("10") + *table.at("11");
  return std::abs(std::abs(wrap_angle(sum)) - std::numbers::pi) <= tol;
}

}  // namespace qubus
