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

#include "qubus/core/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qubus {

LatticeSpec::LatticeSpec(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("lattice dimensions must be at least 1");
}

std::size_t LatticeSpec::index(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) {
    throw std::out_of_range("coordinate (" + std::to_string(row) + "," + std::to_string(col) +
                            ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                            " lattice");
  }
  return row * cols_ + col;
}

Coord LatticeSpec::coord(std::size_t qubit) const {
  if (qubit >= num_qubits()) throw std::out_of_range("qubit outside lattice");
  return {qubit / cols_, qubit % cols_};
}

bool LatticeSpec::is_edge(std::size_t a, std::size_t b) const {
  if (a >= num_qubits() || b >= num_qubits() || a == b) return false;
  const Coord ca = coord(a);
  const Coord cb = coord(b);
  const std::size_t dr = ca.row > cb.row ? ca.row - cb.row : cb.row - ca.row;
  const std::size_t dc = ca.col > cb.col ? ca.col - cb.col : cb.col - ca.col;
  return dr + dc == 1;
}

std::vector<std::size_t> LatticeSpec::neighbors(std::size_t qubit) const {
  const Coord c = coord(qubit);
  std::vector<std::size_t> out;
  if (c.row > 0) out.push_back(index(c.row - 1, c.col));
  if (c.col > 0) out.push_back(index(c.row, c.col - 1));
  if (c.col + 1 < cols_) out.push_back(index(c.row, c.col + 1));
  if (c.row + 1 < rows_) out.push_back(index(c.row + 1, c.col));
  return out;
}

std::vector<Edge> LatticeSpec::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c + 1 < cols_) out.push_back(Edge::of(index(r, c), index(r, c + 1)));
      if (r + 1 < rows_) out.push_back(Edge::of(index(r, c), index(r + 1, c)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qubus
