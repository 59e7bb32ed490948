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

#ifndef QUBUS_BUDGET_ERROR_BUDGET_HPP
#define QUBUS_BUDGET_ERROR_BUDGET_HPP

#include <cstddef>
#include <limits>
#include <string>

#include "json.hpp"

namespace qubus::budget {

/// Dephasing and bus-loss parameters. gamma_tau is the dephasing per bus
/// operation (gamma times the operation time), eta the bus loss parameter,
/// beta_sq the displacement area unit, epsilon the error threshold.
struct NoiseParams {
  double gamma_tau = 0.0;
  double eta = 0.0;
  double beta_sq = 0.39269908169872414;  // pi/8
  double epsilon = 0.01;

  /// Throws std::invalid_argument unless all values are finite, gamma_tau and
  /// eta are non-negative, beta_sq is positive and epsilon lies in (0, 1/2).
  void validate() const;
};

/// Returned by the brick-size solvers when no finite bound exists.
inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

/// 1/2 (1 - exp(-N gamma_tau - 4 C eta beta^2)), for N operations and C gates.
double dephasing_prob(const NoiseParams& p, double num_ops, double num_gates);

/// -ln(1 - 2 epsilon): the largest exponent a brick may accumulate.
double exponent_budget(const NoiseParams& p);

/// One bus per brick: (6b + 4) gamma_tau + 16 b eta beta^2.
double lego_exponent(const NoiseParams& p, std::size_t b);
/// One bus per gate: 16 b gamma_tau + 4 eta beta^2.
double no_reuse_exponent(const NoiseParams& p, std::size_t b);

double lego_epsilon(const NoiseParams& p, std::size_t b);
double no_reuse_epsilon(const NoiseParams& p, std::size_t b);

/// Largest b with lego_epsilon(b) <= epsilon; 0 when even b = 0 fails the
/// budget, kNoLimit when noise vanishes.
std::size_t max_brick_size(const NoiseParams& p);
/// Largest b with no_reuse_epsilon(b) <= epsilon, same conventions.
std::size_t max_brick_size_no_reuse(const NoiseParams& p);

/// Real-valued solutions of the two threshold equations (may be negative or
/// infinite).
double lego_bound_real(const NoiseParams& p);
double no_reuse_bound_real(const NoiseParams& p);

struct ReuseAdvantage {
  /// Per-gate exponent rate comparison: 16 eta beta^2 < 10 gamma_tau.
  bool lego_better = false;
  /// Rule of thumb: eta beta^2 <= gamma_tau / 2.
  bool rule_of_thumb = false;
  /// 10 gamma_tau - 16 eta beta^2; positive favours reuse.
  double margin = 0.0;
  /// Integer brick sizes may disagree with the rate comparison here: the two
  /// rules disagree, or the real-valued bounds are less than one brick apart.
  bool in_margin_band = false;
};

ReuseAdvantage reuse_advantage(const NoiseParams& p);

std::size_t qubits_in_brick(std::size_t b);  // 3b + 2
std::size_t gates_in_brick(std::size_t b);   // 4b

struct BudgetReport {
  std::size_t b_lego = 0;
  std::size_t b_no_reuse = 0;
  double epsilon_at_b = 0.0;  // lego_epsilon(b_lego); 0 when unbounded
  std::size_t qubits_connected = 0;
  std::size_t gates = 0;
};

BudgetReport evaluate_budget(const NoiseParams& p);

/// {"b_lego", "b_no_reuse", "epsilon_at_b", "qubits_connected", "gates"}.
/// Unbounded entries are written as the string "no-limit".
nlohmann::ordered_json to_json(const BudgetReport& r);

std::string format_bound(std::size_t b);

}  // namespace qubus::budget

#endif  // QUBUS_BUDGET_ERROR_BUDGET_HPP
