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

#include "qubus/planner/band_sweep.hpp"

#include <stdexcept>

namespace qubus {

namespace {

std::size_t start_slots(const BandSegment& s) {
  if (s.carry_in) return s.two_rows() ? 3 : 2;
  if (s.lead_top) return s.two_rows() ? 6 : 3;
  return s.two_rows() ? 2 : 1;
}

std::size_t end_slots(bool two_rows) { return two_rows ? 4 : 4; }

}  // namespace

std::size_t step_slots(bool two_rows) { return two_rows ? 6 : 4; }

std::size_t template_length(const BandSegment& s) {
  if (s.top.empty()) return 0;
  return start_slots(s) + (s.top.size() - 1) * step_slots(s.two_rows()) + end_slots(s.two_rows());
}

std::vector<SlottedOp> sweep_band(const BandSegment& s, const LatticeSpec& lattice) {
  const std::size_t len = s.top.size();
  if (len == 0) throw std::invalid_argument("band segment has no columns");
  const bool two = s.two_rows();
  if (two && s.bottom.size() != len) throw std::invalid_argument("band rows differ in length");
  if (!s.stitch.empty() && s.stitch.size() != len) throw std::invalid_argument("stitch list length mismatch");
  if (s.carry_out && !two) throw std::invalid_argument("only a two-row band can carry a qubit out");

  std::vector<SlottedOp> out;
  std::size_t base = 0;
  auto quad = [&](std::size_t q) { return checkerboard_quadrature(lattice, q); };
  auto attach = [&](std::size_t q, std::size_t at) { out.push_back({BusOp::attach(q, quad(q)), base + at}); };
  auto detach = [&](std::size_t q, std::size_t at) { out.push_back({BusOp::detach(q, quad(q)), base + at}); };
  auto stitch_of = [&](std::size_t c) -> std::optional<std::size_t> {
    if (s.stitch.empty()) return std::nullopt;
    if (c == 0 && s.carry_in) return std::nullopt;
    return s.stitch[c];
  };

  if (s.carry_in) {
    attach(s.top[0], 0);
    detach(*s.carry_in, 1);
    if (two) attach(s.bottom[0], 2);
  } else if (s.lead_top) {
    attach(*s.lead_top, 0);
    attach(s.top[0], 1);
    detach(*s.lead_top, 2);
    if (two) {
      if (s.lead_bottom) attach(*s.lead_bottom, 3);
      attach(s.bottom[0], 4);
      if (s.lead_bottom) detach(*s.lead_bottom, 5);
    }
  } else {
    attach(s.top[0], 0);
    if (two) attach(s.bottom[0], 1);
  }
  base += start_slots(s);

  for (std::size_t c = 0; c + 1 < len; ++c) {
    const auto u = stitch_of(c);
    if (two) {
      if (u) attach(*u, 0);
      attach(s.top[c + 1], 1);
      detach(s.top[c], 2);
      if (u) detach(*u, 3);
      attach(s.bottom[c + 1], 4);
      detach(s.bottom[c], 5);
    } else {
      attach(s.top[c + 1], 0);
      if (u) attach(*u, 1);
      detach(s.top[c], 2);
      if (u) detach(*u, 3);
    }
    base += step_slots(two);
  }

  const auto u = stitch_of(len - 1);
  if (two) {
    if (u) attach(*u, 0);
    detach(s.top[len - 1], 1);
    if (u) detach(*u, 2);
    if (!s.carry_out) detach(s.bottom[len - 1], 3);
  } else {
    if (u) attach(*u, 1);
    detach(s.top[len - 1], 2);
    if (u) detach(*u, 3);
  }
  return out;
}

std::vector<BusOp> strip_slots(const std::vector<SlottedOp>& ops) {
  std::vector<BusOp> out;
  out.reserve(ops.size());
  for (const auto& o : ops) out.push_back(o.op);
  return out;
}

}  // namespace qubus
