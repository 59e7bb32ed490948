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

#ifndef QUBUS_CORE_HYBRID_STATE_HPP
#define QUBUS_CORE_HYBRID_STATE_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qubus/core/types.hpp"

namespace qubus {

using Complex = std::complex<double>;

/// Largest register the dense representation will allocate (2^26 amplitudes,
/// 1 GiB). Front ends apply their own, tighter cap.
inline constexpr std::size_t kMaxQubits = 26;

/// Exact joint state of an n-qubit register and one or more bus modes.
///
/// Every computational-basis branch z carries a complex amplitude and, per
/// bus, the coherent displacement alpha(z) of that bus away from vacuum. The
/// register starts in |+>^n with every bus at vacuum.
///
/// Conditional displacements are linear in the sigma_z eigenvalues, so the
/// branch displacement is always of the form alpha(z) = sum_q c_q z_q. The
/// state stores the per-qubit coefficients c_q instead of 2^n alphas; alpha()
/// reconstructs any branch exactly. Amplitudes are stored densely.
///
/// Branch index bit q is qubit q. Basis strings list qubit 0 first.
class HybridState {
 public:
  /// |+>^n with all buses at vacuum. Throws std::invalid_argument for n == 0,
  /// n > kMaxQubits or num_buses == 0.
  static HybridState plus_register(std::size_t num_qubits, std::size_t num_buses = 1);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t num_buses() const { return num_buses_; }
  std::size_t num_branches() const { return amps_.size(); }

  Complex amp(std::uint64_t branch) const { return amps_.at(branch); }
  std::span<const Complex> amplitudes() const { return amps_; }

  /// Bus displacement of one branch.
  Complex alpha(std::uint64_t branch, std::size_t bus = 0) const;

  /// Coefficient of z_q in alpha(z) for the given bus.
  Complex displacement_coefficient(std::size_t qubit, std::size_t bus = 0) const;

  /// max_z |alpha(z)| for one bus.
  double max_displacement(std::size_t bus = 0) const;

  double norm_sq() const;

  /// amp <- amp * exp(i Im(d conj(alpha))), then alpha <- alpha + d, per branch.
  void apply(const CondDisplacement& op, std::size_t bus = 0);

  /// Multiplies every branch by exp(i angle z_q).
  void apply_z_rotation(std::size_t qubit, double angle);

  /// Ideal CZ between two register qubits, no bus involved. Reference path for
  /// verification.
  void apply_ideal_cz(std::size_t a, std::size_t b);

  /// Replaces a bus with a fresh vacuum mode. The bus must be disentangled
  /// within tol; throws PreconditionError otherwise.
  void reset_bus(std::size_t bus, double tol = kDefaultTol);

 private:
  HybridState(std::size_t num_qubits, std::size_t num_buses);

  void check_qubit(std::size_t qubit) const;
  void check_bus(std::size_t bus) const;

  std::size_t num_qubits_;
  std::size_t num_buses_;
  std::vector<Complex> amps_;
  // coeff_[bus * num_qubits_ + q]
  std::vector<Complex> coeff_;
};

/// Fresh |+>^n register, one bus at vacuum.
HybridState init_register(std::size_t n);

/// Value-semantics wrapper around HybridState::apply.
HybridState apply_cdisp(HybridState state, const CondDisplacement& op, std::size_t bus = 0);

bool is_bus_disentangled(const HybridState& state, double tol = kDefaultTol, std::size_t bus = 0);

/// Basis string of a branch, qubit 0 first ("01" is qubit 0 = 0, qubit 1 = 1).
std::string basis_string(std::uint64_t branch, std::size_t num_qubits);
std::uint64_t branch_from_string(std::string_view bits);

/// |<a|b>|, i.e. overlap modulo global phase. Buses are ignored.
double overlap_magnitude(const HybridState& a, const HybridState& b);

}  // namespace qubus

#endif  // QUBUS_CORE_HYBRID_STATE_HPP
