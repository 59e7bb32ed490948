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

#include "qubus/budget/error_budget.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qubus::budget {

namespace {

using SolveFn = double (*)(const NoiseParams&, std::size_t);

// Floors the real-valued bound, then nudges it until b passes and b + 1 fails.
std::size_t settle(const NoiseParams& p, double x, SolveFn eps) {
  if (std::isinf(x) && x > 0) return kNoLimit;
  if (!(x >= 0.0)) return 0;
  if (x > 1e18) return kNoLimit;
  auto b = static_cast<std::size_t>(std::floor(x));
  while (b > 0 && eps(p, b) > p.epsilon) --b;
  while (eps(p, b + 1) <= p.epsilon) ++b;
  return b;
}

}  // namespace

void NoiseParams::validate() const {
  if (!std::isfinite(gamma_tau) || !std::isfinite(eta) || !std::isfinite(beta_sq) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("noise parameters must be finite");
  }
  if (gamma_tau < 0.0) throw std::invalid_argument("gamma_tau must be non-negative");
  if (eta < 0.0) throw std::invalid_argument("eta must be non-negative");
  if (beta_sq <= 0.0) throw std::invalid_argument("beta_sq must be positive");
  if (!(epsilon > 0.0 && epsilon < 0.5)) throw std::invalid_argument("epsilon must lie in (0, 1/2)");
}

double dephasing_prob(const NoiseParams& p, double num_ops, double num_gates) {
  if (num_ops < 0.0 || num_gates < 0.0) throw std::invalid_argument("operation and gate counts must be non-negative");
  const double exponent = num_ops * p.gamma_tau + 4.0 * num_gates * p.eta * p.beta_sq;
  return -0.5 * std::expm1(-exponent);
}

double exponent_budget(const NoiseParams& p) { return -std::log1p(-2.0 * p.epsilon); }

double lego_exponent(const NoiseParams& p, std::size_t b) {
  const auto bb = static_cast<double>(b);
  return (6.0 * bb + 4.0) * p.gamma_tau + 16.0 * bb * p.eta * p.beta_sq;
}

double no_reuse_exponent(const NoiseParams& p, std::size_t b) {
  return 16.0 * static_cast<double>(b) * p.gamma_tau + 4.0 * p.eta * p.beta_sq;
}

double lego_epsilon(const NoiseParams& p, std::size_t b) { return -0.5 * std::expm1(-lego_exponent(p, b)); }

double no_reuse_epsilon(const NoiseParams& p, std::size_t b) {
  return -0.5 * std::expm1(-no_reuse_exponent(p, b));
}

double lego_bound_real(const NoiseParams& p) {
  const double rate = 6.0 * p.gamma_tau + 16.0 * p.eta * p.beta_sq;
  const double room = exponent_budget(p) - 4.0 * p.gamma_tau;
  if (rate == 0.0) return room >= 0.0 ? INFINITY : -INFINITY;
  return room / rate;
}

double no_reuse_bound_real(const NoiseParams& p) {
  const double rate = 16.0 * p.gamma_tau;
  const double room = exponent_budget(p) - 4.0 * p.eta * p.beta_sq;
  if (rate == 0.0) return room >= 0.0 ? INFINITY : -INFINITY;
  return room / rate;
}

std::size_t max_brick_size(const NoiseParams& p) {
  p.validate();
  return settle(p, lego_bound_real(p), &lego_epsilon);
}

std::size_t max_brick_size_no_reuse(const NoiseParams& p) {
  p.validate();
  return settle(p, no_reuse_bound_real(p), &no_reuse_epsilon);
}

ReuseAdvantage reuse_advantage(const NoiseParams& p) {
  ReuseAdvantage r;
  const double loss = p.eta * p.beta_sq;
  r.margin = 10.0 * p.gamma_tau - 16.0 * loss;
  r.lego_better = r.margin > 0.0;
  r.rule_of_thumb = p.gamma_tau > 0.0 && loss <= p.gamma_tau / 2.0;
  const double xl = lego_bound_real(p);
  const double xn = no_reuse_bound_real(p);
  const bool close = std::isfinite(xl) && std::isfinite(xn) && std::abs(std::max(xl, 0.0) - std::max(xn, 0.0)) < 1.0;
  r.in_margin_band = r.lego_better != r.rule_of_thumb || close;
  return r;
}

std::size_t qubits_in_brick(std::size_t b) { return 3 * b + 2; }
std::size_t gates_in_brick(std::size_t b) { return 4 * b; }

BudgetReport evaluate_budget(const NoiseParams& p) {
  BudgetReport r;
  r.b_lego = max_brick_size(p);
  r.b_no_reuse = max_brick_size_no_reuse(p);
  if (r.b_lego == kNoLimit) {
    r.qubits_connected = kNoLimit;
    r.gates = kNoLimit;
  } else {
    r.epsilon_at_b = lego_epsilon(p, r.b_lego);
    r.qubits_connected = qubits_in_brick(r.b_lego);
    r.gates = gates_in_brick(r.b_lego);
  }
  return r;
}

std::string format_bound(std::size_t b) { return b == kNoLimit ? "no-limit" : std::to_string(b); }

nlohmann::ordered_json to_json(const BudgetReport& r) {
  auto count = [](std::size_t v) -> nlohmann::ordered_json {
    if (v == kNoLimit) return "no-limit";
    return v;
  };
  nlohmann::ordered_json j;
  j["b_lego"] = count(r.b_lego);
  j["b_no_reuse"] = count(r.b_no_reuse);
  if (r.b_lego == kNoLimit) {
    j["epsilon_at_b"] = nullptr;
  } else {
    j["epsilon_at_b"] = r.epsilon_at_b;
  }
  j["qubits_connected"] = count(r.qubits_connected);
  j["gates"] = count(r.gates);
  return j;
}

}  // namespace qubus::budget
