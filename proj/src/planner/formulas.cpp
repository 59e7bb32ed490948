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

#include "qubus/planner/formulas.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace qubus {

namespace {

void require_at_least(std::int64_t m, std::int64_t n, std::int64_t lo) {
  if (m < lo || n < lo) {
    throw std::invalid_argument("lattice dimensions must be at least " + std::to_string(lo) + ", got " +
                                std::to_string(m) + "x" + std::to_string(n));
  }
}

void require_even_area(std::int64_t m, std::int64_t n) {
  if ((m * n) % 2 != 0) throw std::invalid_argument("width-2 path bound is only defined for even mn");
}

}  // namespace

OpCount OpCount::of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return g > 1 ? OpCount{num / g, den / g} : OpCount{num, den};
}

std::int64_t OpCount::value() const {
  if (!is_integral()) {
    throw std::domain_error("operation count " + std::to_string(numerator) + "/" + std::to_string(denominator) +
                            " is not an integer");
  }
  return numerator;
}

std::int64_t ops_no_reuse(std::int64_t m, std::int64_t n) {
  require_at_least(m, n, 1);
  return 8 * m * n - 4 * (m + n);
}

std::int64_t ops_width1_min(std::int64_t m, std::int64_t n) {
  require_at_least(m, n, 2);
  return 4 * m * n - 8;
}

std::int64_t ops_width2_min(std::int64_t m, std::int64_t n) {
  require_at_least(m, n, 2);
  return 3 * m * n - 2 * (m + n) + 4;
}

OpCount ops_bricks(std::int64_t m, std::int64_t n, std::int64_t b) {
  require_at_least(m, n, 1);
  if (b < 1) throw std::invalid_argument("brick length must be at least 1");
  // ((3b + 2) mn - 2b(m+n)) / b
  return OpCount::of((3 * b + 2) * m * n - 2 * b * (m + n), b);
}

std::int64_t width1_path_edges(std::int64_t m, std::int64_t n) {
  require_at_least(m, n, 1);
  return m * n - 1;
}

std::int64_t width2_path_edges(std::int64_t m, std::int64_t n) {
  require_at_least(m, n, 1);
  require_even_area(m, n);
  return 3 * m * n / 2 - 2;
}

std::int64_t remaining_edges_width2(std::int64_t m, std::int64_t n) {
  require_at_least(m, n, 1);
  require_even_area(m, n);
  return m * n / 2 - (m + n) + 2;
}

std::int64_t lattice_edge_count(std::int64_t m, std::int64_t n) {
  require_at_least(m, n, 1);
  return m * (n - 1) + n * (m - 1);
}

}  // namespace qubus
