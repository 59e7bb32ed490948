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

#ifndef QUBUS_PLANNER_BAND_SWEEP_HPP
#define QUBUS_PLANNER_BAND_SWEEP_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "qubus/core/lattice.hpp"
#include "qubus/planner/schedule.hpp"

namespace qubus {

/// A one- or two-row strip of the lattice swept column by column with a
/// single bus.
///
/// `top` is the row on the stitching side: its qubits may each be joined to
/// an already-finished qubit across that side (`stitch`). `lead_*` are the
/// qubits of the column just before the segment, built by another bus, to
/// which the first column is joined. `carry_in` is a qubit left attached by
/// the previous segment on the same bus; it doubles as the stitch partner of
/// top[0].
struct BandSegment {
  std::vector<std::size_t> top;
  std::vector<std::size_t> bottom;  // empty for a one-row band
  std::vector<std::optional<std::size_t>> stitch;  // empty, or one entry per column
  std::optional<std::size_t> lead_top;
  std::optional<std::size_t> lead_bottom;
  std::optional<std::size_t> carry_in;
  bool carry_out = false;  // leave the last bottom qubit attached

  bool two_rows() const { return !bottom.empty(); }
};

/// Bus operation with its position in the fixed per-column slot template.
struct SlottedOp {
  BusOp op;
  std::size_t slot;
};

/// Number of template slots a column step occupies (6 for two rows, 4 for one).
std::size_t step_slots(bool two_rows);

/// Attach/detach sequence for one segment. Every qubit of the segment, lead,
/// and stitch set is attached exactly once, quadratures follow the
/// checkerboard colouring, and every attachment pair crosses.
///
/// Column step, two rows (slots 0..5):
///   attach stitch[c], attach top[c+1], detach top[c], detach stitch[c],
///   attach bottom[c+1], detach bottom[c]
/// Column step, one row (slots 0..3):
///   attach top[c+1], attach stitch[c], detach top[c], detach stitch[c]
/// Absent stitch qubits leave their slots idle.
std::vector<SlottedOp> sweep_band(const BandSegment& segment, const LatticeSpec& lattice);

/// Total template length of a segment.
std::size_t template_length(const BandSegment& segment);

std::vector<BusOp> strip_slots(const std::vector<SlottedOp>& ops);

}  // namespace qubus

#endif  // QUBUS_PLANNER_BAND_SWEEP_HPP
