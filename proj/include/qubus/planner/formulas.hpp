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

#ifndef QUBUS_PLANNER_FORMULAS_HPP
#define QUBUS_PLANNER_FORMULAS_HPP

#include <cstdint>

// Closed-form bus-operation counts for an m x n cluster. All functions throw
// std::invalid_argument when their dimension preconditions are violated.

namespace qubus {

/// Exact rational count, kept in lowest terms with a positive denominator.
struct OpCount {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  static OpCount of(std::int64_t num, std::int64_t den);
  bool is_integral() const { return denominator == 1; }
  /// Throws std::domain_error when not integral.
  std::int64_t value() const;
  double approx() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }

  friend bool operator==(const OpCount&, const OpCount&) = default;
};

/// One bus per CPHASE: 8mn - 4(m+n), i.e. four operations per edge. m, n >= 1.
std::int64_t ops_no_reuse(std::int64_t m, std::int64_t n);

/// At most one qubit per quadrature: 4mn - 8. m, n >= 2.
std::int64_t ops_width1_min(std::int64_t m, std::int64_t n);

/// Two-partition bus lower bound: 3mn - 2(m+n) + 4. m, n >= 2.
std::int64_t ops_width2_min(std::int64_t m, std::int64_t n);

/// Bricks of length b, one bus each: (3 + 2/b)mn - 2(m+n). m, n, b >= 1.
OpCount ops_bricks(std::int64_t m, std::int64_t n, std::int64_t b);

/// Edges a width-1 path visiting every qubit once can create: mn - 1.
std::int64_t width1_path_edges(std::int64_t m, std::int64_t n);

/// Edges a width-2 path visiting every qubit once can create: 3mn/2 - 2.
/// Requires mn even.
std::int64_t width2_path_edges(std::int64_t m, std::int64_t n);

/// Edges left after the width-2 pass: mn/2 - (m+n) + 2. Requires mn even.
std::int64_t remaining_edges_width2(std::int64_t m, std::int64_t n);

/// m(n-1) + n(m-1).
std::int64_t lattice_edge_count(std::int64_t m, std::int64_t n);

}  // namespace qubus

#endif  // QUBUS_PLANNER_FORMULAS_HPP
