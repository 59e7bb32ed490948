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

#include "qubus/core/hybrid_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qubus {

namespace {

// +1 for bit 0, -1 for bit 1.
inline double z_of(std::uint64_t branch, std::size_t qubit) {
  return ((branch >> qubit) & 1U) ? -1.0 : 1.0;
}

Complex axis(Quadrature q) {
  return q == Quadrature::Position ? Complex{1.0, 0.0} : Complex{0.0, 1.0};
}

}  // namespace

std::string_view to_string(Quadrature q) {
  return q == Quadrature::Position ? "x" : "p";
}

Quadrature quadrature_from_string(std::string_view s) {
  if (s == "x") return Quadrature::Position;
  if (s == "p") return Quadrature::Momentum;
  throw std::invalid_argument("unknown quadrature '" + std::string(s) + "' (expected x or p)");
}

HybridState::HybridState(std::size_t num_qubits, std::size_t num_buses)
    : num_qubits_(num_qubits), num_buses_(num_buses) {}

HybridState HybridState::plus_register(std::size_t num_qubits, std::size_t num_buses) {
  if (num_qubits == 0) {
    throw std::invalid_argument("register needs at least one qubit");
  }
  if (num_qubits > kMaxQubits) {
    throw std::invalid_argument("register of " + std::to_string(num_qubits) +
                                " qubits exceeds the dense limit of " + std::to_string(kMaxQubits));
  }
  if (num_buses == 0) {
    throw std::invalid_argument("need at least one bus");
  }
  HybridState s(num_qubits, num_buses);
  const std::size_t dim = std::size_t{1} << num_qubits;
  s.amps_.assign(dim, Complex{std::pow(2.0, -0.5 * static_cast<double>(num_qubits)), 0.0});
  s.coeff_.assign(num_buses * num_qubits, Complex{});
  return s;
}

void HybridState::check_qubit(std::size_t qubit) const {
  if (qubit >= num_qubits_) {
    throw std::out_of_range("qubit " + std::to_string(qubit) + " out of range for " +
                            std::to_string(num_qubits_) + "-qubit register");
  }
}

void HybridState::check_bus(std::size_t bus) const {
  if (bus >= num_buses_) {
    throw std::out_of_range("bus " + std::to_string(bus) + " out of range");
  }
}

Complex HybridState::alpha(std::uint64_t branch, std::size_t bus) const {
  check_bus(bus);
  if (branch >= amps_.size()) throw std::out_of_range("branch out of range");
  Complex a{};
  const Complex* c = coeff_.data() + bus * num_qubits_;
  for (std::size_t q = 0; q < num_qubits_; ++q) a += c[q] * z_of(branch, q);
  return a;
}

Complex HybridState::displacement_coefficient(std::size_t qubit, std::size_t bus) const {
  check_qubit(qubit);
  check_bus(bus);
  return coeff_[bus * num_qubits_ + qubit];
}

double HybridState::max_displacement(std::size_t bus) const {
  check_bus(bus);
  std::vector<Complex> active;
  for (std::size_t q = 0; q < num_qubits_; ++q) {
    const Complex c = coeff_[bus * num_qubits_ + q];
    if (c != Complex{}) active.push_back(c);
  }
  // alpha only depends on the qubits with a nonzero coefficient; the global
  // sign flip maps alpha to -alpha so half of the patterns suffice.
  if (active.empty()) return 0.0;
  const std::uint64_t patterns = std::uint64_t{1} << (active.size() - 1);
  double best = 0.0;
  for (std::uint64_t m = 0; m < patterns; ++m) {
    Complex a{};
    for (std::size_t k = 0; k < active.size(); ++k) a += ((m >> k) & 1U) ? -active[k] : active[k];
    best = std::max(best, std::abs(a));
  }
  return best;
}

double HybridState::norm_sq() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

void HybridState::apply(const CondDisplacement& op, std::size_t bus) {
  check_qubit(op.qubit);
  check_bus(bus);
  if (op.sign != 1 && op.sign != -1) throw std::invalid_argument("displacement sign must be +1 or -1");
  if (!(op.magnitude > 0.0) || !std::isfinite(op.magnitude)) {
    throw std::invalid_argument("displacement magnitude must be positive and finite");
  }

  // d(z) = step * z_q with step = sign * magnitude * axis.
  // Im(d conj(alpha)) = z_q * sum_r z_r * Im(step * conj(c_r)).
  const Complex step = static_cast<double>(op.sign) * op.magnitude * axis(op.quad);
  Complex* c = coeff_.data() + bus * num_qubits_;

  std::vector<std::size_t> bits{op.qubit};
  std::vector<double> weight{0.0};
  for (std::size_t r = 0; r < num_qubits_; ++r) {
    const double w = (step * std::conj(c[r])).imag();
    if (w == 0.0) continue;
    if (r == op.qubit) {
      weight[0] = w;
    } else {
      bits.push_back(r);
      weight.push_back(w);
    }
  }

  if (bits.size() > 1 || weight[0] != 0.0) {
    // Phase factor for every pattern of the involved bits; bit k of the key is
    // qubit bits[k].
    const std::size_t k = bits.size();
    std::vector<Complex> table(std::size_t{1} << k);
    for (std::size_t key = 0; key < table.size(); ++key) {
      const double zq = (key & 1U) ? -1.0 : 1.0;
      double phase = weight[0];  // z_q * z_q * w_q
      for (std::size_t j = 1; j < k; ++j) phase += zq * (((key >> j) & 1U) ? -1.0 : 1.0) * weight[j];
      table[key] = std::polar(1.0, phase);
    }
    const std::size_t dim = amps_.size();
    for (std::size_t b = 0; b < dim; ++b) {
      std::size_t key = 0;
      for (std::size_t j = 0; j < k; ++j) key |= ((b >> bits[j]) & 1U) << j;
      amps_[b] *= table[key];
    }
  }
  c[op.qubit] += step;
}

void HybridState::apply_z_rotation(std::size_t qubit, double angle) {
  check_qubit(qubit);
  const Complex plus = std::polar(1.0, angle);
  const Complex minus = std::polar(1.0, -angle);
  for (std::size_t b = 0; b < amps_.size(); ++b) amps_[b] *= ((b >> qubit) & 1U) ? minus : plus;
}

void HybridState::apply_ideal_cz(std::size_t a, std::size_t b) {
  check_qubit(a);
  check_qubit(b);
  if (a == b) throw std::invalid_argument("CZ needs two distinct qubits");
  const std::uint64_t mask = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & mask) == mask) amps_[i] = -amps_[i];
  }
}

void HybridState::reset_bus(std::size_t bus, double tol) {
  check_bus(bus);
  if (max_displacement(bus) > tol) {
    throw PreconditionError("cannot replace bus " + std::to_string(bus) + ": still entangled with the register");
  }
  std::fill_n(coeff_.begin() + static_cast<std::ptrdiff_t>(bus * num_qubits_), num_qubits_, Complex{});
}

HybridState init_register(std::size_t n) { return HybridState::plus_register(n, 1); }

HybridState apply_cdisp(HybridState state, const CondDisplacement& op, std::size_t bus) {
  state.apply(op, bus);
  return state;
}

bool is_bus_disentangled(const HybridState& state, double tol, std::size_t bus) {
  return state.max_displacement(bus) <= tol;
}

std::string basis_string(std::uint64_t branch, std::size_t num_qubits) {
  std::string s(num_qubits, '0');
  for (std::size_t q = 0; q < num_qubits; ++q) {
    if ((branch >> q) & 1U) s[q] = '1';
  }
  return s;
}

std::uint64_t branch_from_string(std::string_view bits) {
  std::uint64_t b = 0;
  for (std::size_t q = 0; q < bits.size(); ++q) {
    if (bits[q] == '1') {
      b |= std::uint64_t{1} << q;
    } else if (bits[q] != '0') {
      throw std::invalid_argument("basis string may only contain 0 and 1");
    }
  }
  return b;
}

double overlap_magnitude(const HybridState& a, const HybridState& b) {
  if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("register sizes differ");
  Complex s{};
  auto x = a.amplitudes();
  auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return std::abs(s);
}

}  // namespace qubus
