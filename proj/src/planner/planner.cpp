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

#include "qubus/planner/planner.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qubus/planner/validate.hpp"

namespace qubus {

namespace {

void require_planar(const LatticeSpec& lattice) {
  if (lattice.rows() < 2 || lattice.cols() < 2) {
    throw std::invalid_argument("planning needs a lattice of at least 2x2, got " +
                                std::to_string(lattice.rows()) + "x" + std::to_string(lattice.cols()));
  }
}

BusOp attach(const LatticeSpec& lattice, std::size_t q) {
  return BusOp::attach(q, checkerboard_quadrature(lattice, q));
}

BusOp detach(const LatticeSpec& lattice, std::size_t q) {
  return BusOp::detach(q, checkerboard_quadrature(lattice, q));
}

void append(std::vector<BusOp>& out, const std::vector<SlottedOp>& ops) {
  for (const auto& o : ops) out.push_back(o.op);
}

std::vector<std::size_t> band_row(const LatticeSpec& lattice, const BandLayout& layout, std::size_t vrow,
                                  std::size_t begin, std::size_t end, bool reverse) {
  std::vector<std::size_t> row;
  for (std::size_t c = begin; c < end; ++c) row.push_back(layout.qubit(lattice, vrow, c));
  if (reverse) std::reverse(row.begin(), row.end());
  return row;
}

Schedule plan_no_reuse(const LatticeSpec& lattice) {
  std::vector<BusOp> ops;
  bool first = true;
  for (const Edge& e : lattice.edges()) {
    if (!first) ops.push_back(BusOp::new_bus());
    first = false;
    ops.push_back(attach(lattice, e.first));
    ops.push_back(attach(lattice, e.second));
    ops.push_back(detach(lattice, e.first));
    ops.push_back(detach(lattice, e.second));
  }
  return make_schedule(lattice, Strategy::no_reuse(), std::move(ops));
}

// Euler-trail cover: odd-degree boundary sites are paired along the perimeter
// with virtual edges, the augmented graph gets one Euler circuit, and the
// circuit is cut at the virtual edges. Each trail is one bus at width 1.
Schedule plan_line(const LatticeSpec& lattice) {
  struct GEdge {
    std::size_t a, b;
    bool real;
  };
  std::vector<GEdge> edges;
  for (const Edge& e : lattice.edges()) edges.push_back({e.first, e.second, true});

  const std::size_t m = lattice.rows(), n = lattice.cols();
  std::vector<std::size_t> perimeter;
  for (std::size_t c = 0; c < n; ++c) perimeter.push_back(lattice.index(0, c));
  for (std::size_t r = 1; r < m; ++r) perimeter.push_back(lattice.index(r, n - 1));
  for (std::size_t c = n - 1; c-- > 0;) perimeter.push_back(lattice.index(m - 1, c));
  for (std::size_t r = m - 1; r-- > 1;) perimeter.push_back(lattice.index(r, 0));
  std::vector<std::size_t> odd;
  for (std::size_t q : perimeter) {
    if (lattice.neighbors(q).size() % 2 == 1) odd.push_back(q);
  }
  for (std::size_t i = 0; i + 1 < odd.size(); i += 2) edges.push_back({odd[i], odd[i + 1], false});

  std::vector<std::vector<std::size_t>> incident(lattice.num_qubits());
  for (std::size_t id = 0; id < edges.size(); ++id) {
    incident[edges[id].a].push_back(id);
    incident[edges[id].b].push_back(id);
  }

  // Hierholzer, iterative. Records the circuit as (edge id, vertex reached).
  std::vector<bool> used(edges.size(), false);
  std::vector<std::size_t> next(lattice.num_qubits(), 0);
  const std::size_t start = odd.empty() ? 0 : odd.front();
  std::vector<std::pair<std::size_t, std::size_t>> stack{{edges.size(), start}};
  std::vector<std::pair<std::size_t, std::size_t>> circuit;
  while (!stack.empty()) {
    const std::size_t v = stack.back().second;
    auto& it = next[v];
    while (it < incident[v].size() && used[incident[v][it]]) ++it;
    if (it == incident[v].size()) {
      circuit.push_back(stack.back());
      stack.pop_back();
      continue;
    }
    const std::size_t id = incident[v][it];
    used[id] = true;
    stack.push_back({id, edges[id].a == v ? edges[id].b : edges[id].a});
  }
  std::reverse(circuit.begin(), circuit.end());
  // circuit[0] is the start vertex with a sentinel edge; circuit[i] reached via an edge.

  std::vector<std::vector<std::size_t>> trails;
  if (odd.empty()) {
    std::vector<std::size_t> walk;
    for (const auto& [_, v] : circuit) walk.push_back(v);
    trails.push_back(walk);
  } else {
    // Rotate so the walk starts right after a virtual edge.
    const std::size_t len = circuit.size() - 1;  // number of edges
    std::size_t first_virtual = 1;
    while (edges[circuit[first_virtual].first].real) ++first_virtual;
    std::vector<std::size_t> current{circuit[first_virtual].second};
    for (std::size_t k = 1; k <= len; ++k) {
      const std::size_t pos = (first_virtual - 1 + k) % len + 1;
      const auto& [id, v] = circuit[pos];
      if (!edges[id].real) {
        trails.push_back(current);
        current = {v};
      } else {
        current.push_back(v);
      }
    }
  }

  std::vector<BusOp> ops;
  for (std::size_t t = 0; t < trails.size(); ++t) {
    const auto& walk = trails[t];
    if (t > 0) ops.push_back(BusOp::new_bus());
    ops.push_back(attach(lattice, walk[0]));
    for (std::size_t i = 1; i < walk.size(); ++i) {
      ops.push_back(attach(lattice, walk[i]));
      ops.push_back(detach(lattice, walk[i - 1]));
    }
    ops.push_back(detach(lattice, walk.back()));
  }
  return make_schedule(lattice, Strategy::line(), std::move(ops));
}

Schedule plan_zigzag(const LatticeSpec& lattice) {
  const BandLayout layout = BandLayout::choose(lattice);
  const std::size_t bands = layout.num_bands();
  const std::size_t len = layout.length;
  std::vector<BusOp> ops;
  std::optional<std::size_t> carry;
  for (std::size_t i = 0; i < bands; ++i) {
    const bool reverse = i % 2 == 1;
    BandSegment seg;
    seg.top = band_row(lattice, layout, 2 * i, 0, len, reverse);
    if (2 * i + 1 < layout.width) seg.bottom = band_row(lattice, layout, 2 * i + 1, 0, len, reverse);
    if (i > 0) {
      for (std::size_t q : band_row(lattice, layout, 2 * i - 1, 0, len, reverse)) seg.stitch.push_back(q);
    }
    seg.carry_in = carry;
    seg.carry_out = i + 1 < bands;
    append(ops, sweep_band(seg, lattice));
    carry = seg.carry_out ? std::optional<std::size_t>(seg.bottom.back()) : std::nullopt;
  }
  return make_schedule(lattice, Strategy::zigzag2(), std::move(ops), bands - 1);
}

}  // namespace

BandLayout BandLayout::choose(const LatticeSpec& lattice) {
  const std::size_t m = lattice.rows(), n = lattice.cols();
  const bool m_even = m % 2 == 0, n_even = n % 2 == 0;
  bool transposed;
  if (m_even != n_even) {
    transposed = n_even;
  } else {
    transposed = m > n;
  }
  return transposed ? BandLayout{true, n, m} : BandLayout{false, m, n};
}

std::size_t BandLayout::qubit(const LatticeSpec& lattice, std::size_t vrow, std::size_t vcol) const {
  return transposed ? lattice.index(vcol, vrow) : lattice.index(vrow, vcol);
}

BrickPlan plan_bricks(const LatticeSpec& lattice, std::size_t b) {
  require_planar(lattice);
  if (b < 1) throw std::invalid_argument("brick length must be at least 1");
  const BandLayout layout = BandLayout::choose(lattice);
  BrickPlan plan{lattice, b, {}, {}};
  std::map<std::size_t, std::vector<std::size_t>> touched;
  for (std::size_t i = 0; i < layout.num_bands(); ++i) {
    const std::size_t top_row = 2 * i;
    const bool two = top_row + 1 < layout.width;
    for (std::size_t begin = 0; begin < layout.length; begin += b) {
      const std::size_t end = std::min(begin + b, layout.length);
      Brick brick;
      brick.band = i;
      brick.col_begin = begin;
      brick.col_end = end;
      BandSegment seg;
      seg.top = band_row(lattice, layout, top_row, begin, end, false);
      if (two) seg.bottom = band_row(lattice, layout, top_row + 1, begin, end, false);
      brick.core = seg.top;
      brick.core.insert(brick.core.end(), seg.bottom.begin(), seg.bottom.end());
      if (begin > 0) {
        seg.lead_top = layout.qubit(lattice, top_row, begin - 1);
        brick.connections.push_back(*seg.lead_top);
        if (two) {
          seg.lead_bottom = layout.qubit(lattice, top_row + 1, begin - 1);
          brick.connections.push_back(*seg.lead_bottom);
        }
      }
      if (i > 0) {
        for (std::size_t q : band_row(lattice, layout, top_row - 1, begin, end, false)) {
          seg.stitch.push_back(q);
          brick.connections.push_back(q);
        }
      }
      brick.ops = strip_slots(sweep_band(seg, lattice));
      const ValidationReport r = validate_schedule(brick.ops, lattice, {.require_complete = false});
      brick.gates = r.created_edges.size();
      const std::size_t index = plan.bricks.size();
      for (std::size_t q : brick.core) touched[q].push_back(index);
      for (std::size_t q : brick.connections) touched[q].push_back(index);
      plan.bricks.push_back(std::move(brick));
    }
  }
  for (auto& [q, list] : touched) {
    std::sort(list.begin(), list.end());
    if (list.size() > 1) plan.shared_qubits.emplace(q, std::move(list));
  }
  return plan;
}

Schedule BrickPlan::schedule() const {
  std::vector<BusOp> ops;
  for (std::size_t i = 0; i < bricks.size(); ++i) {
    if (i > 0) ops.push_back(BusOp::new_bus());
    ops.insert(ops.end(), bricks[i].ops.begin(), bricks[i].ops.end());
  }
  return make_schedule(lattice, Strategy::bricks(brick_length), std::move(ops));
}

Schedule plan(const LatticeSpec& lattice, Strategy strategy) {
  require_planar(lattice);
  switch (strategy.kind) {
    case Strategy::Kind::NoReuse: return plan_no_reuse(lattice);
    case Strategy::Kind::Line: return plan_line(lattice);
    case Strategy::Kind::ZigZag2: return plan_zigzag(lattice);
    case Strategy::Kind::Bricks: return plan_bricks(lattice, strategy.brick_length).schedule();
    case Strategy::Kind::Search: break;
  }
  throw std::invalid_argument("strategy '" + strategy.name() + "' has no constructive planner");
}

}  // namespace qubus
