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

#ifndef QUBUS_CORE_TYPES_HPP
#define QUBUS_CORE_TYPES_HPP

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qubus {

/// Squared displacement amplitude that turns the four-step loop into a CPHASE.
inline constexpr double kCphaseBetaSq = std::numbers::pi / 8.0;

/// Default tolerance for disentanglement and phase checks.
inline constexpr double kDefaultTol = 1e-9;

/// Raised when an operation is called on a state that does not satisfy its
/// documented precondition (e.g. reading a gate off an entangled bus).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Bus field quadrature a qubit couples to. Position displaces the bus along
/// the real axis of its amplitude, Momentum along the imaginary axis.
enum class Quadrature { Position, Momentum };

constexpr Quadrature opposite(Quadrature q) {
  return q == Quadrature::Position ? Quadrature::Momentum : Quadrature::Position;
}

/// "x" / "p".
std::string_view to_string(Quadrature q);
Quadrature quadrature_from_string(std::string_view s);

inline double beta_from_sq(double beta_sq) { return std::sqrt(beta_sq); }

/// One conditional displacement U_e(±x_j) or U_e(±p_k): the bus moves by
/// sign * z_j * magnitude along the chosen axis, z_j being the qubit's
/// sigma_z eigenvalue (+1 for bit 0, -1 for bit 1).
struct CondDisplacement {
  std::size_t qubit = 0;
  Quadrature quad = Quadrature::Position;
  int sign = +1;
  double magnitude = beta_from_sq(kCphaseBetaSq);

  CondDisplacement negated() const { return {qubit, quad, -sign, magnitude}; }
};

}  // namespace qubus

#endif  // QUBUS_CORE_TYPES_HPP
