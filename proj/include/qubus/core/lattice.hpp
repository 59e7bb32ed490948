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

#ifndef QUBUS_CORE_LATTICE_HPP
#define QUBUS_CORE_LATTICE_HPP

#include <cstddef>
#include <utility>
#include <vector>

namespace qubus {

struct Coord {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const Coord&, const Coord&) = default;
};

/// Unordered qubit pair, stored with first < second.
struct Edge {
  std::size_t first = 0;
  std::size_t second = 0;

  static Edge of(std::size_t a, std::size_t b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Rectangular m x n cluster target. Qubits are numbered row-major from 0;
/// edges join horizontal and vertical nearest neighbours.
class LatticeSpec {
 public:
  LatticeSpec(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t num_qubits() const { return rows_ * cols_; }
  std::size_t num_edges() const { return rows_ * (cols_ - 1) + cols_ * (rows_ - 1); }

  std::size_t index(std::size_t row, std::size_t col) const;
  std::size_t index(Coord c) const { return index(c.row, c.col); }
  Coord coord(std::size_t qubit) const;

  bool is_edge(std::size_t a, std::size_t b) const;
  std::vector<std::size_t> neighbors(std::size_t qubit) const;
  /// All edges, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
};

}  // namespace qubus

#endif  // QUBUS_CORE_LATTICE_HPP
