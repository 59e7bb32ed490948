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

#include "qubus/planner/validate.hpp"

#include <algorithm>
#include <numbers>

#include "qubus/core/phase_table.hpp"

namespace qubus {

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::QubitOutOfRange: return "qubit-out-of-range";
    case ViolationKind::AttachWhileLive: return "attach-while-live";
    case ViolationKind::DetachWithoutAttach: return "detach-without-attach";
    case ViolationKind::QuadratureMismatch: return "quadrature-mismatch";
    case ViolationKind::UnwantedEntanglement: return "unwanted-entanglement";
    case ViolationKind::DuplicateEdge: return "duplicate-edge";
    case ViolationKind::CancelledPair: return "cancelled-pair";
    case ViolationKind::LiveAtBusSwitch: return "live-at-bus-switch";
    case ViolationKind::LiveAtEnd: return "live-at-end";
    case ViolationKind::MissingEdges: return "missing-edges";
  }
  return "unknown";
}

bool ValidationReport::has(ViolationKind k) const {
  return std::any_of(violations.begin(), violations.end(), [k](const Violation& v) { return v.kind == k; });
}

ScheduleChecker::ScheduleChecker(const LatticeSpec& lattice, std::size_t num_channels)
    : lattice_(lattice), channels_(num_channels) {
  report_.correction_frame.assign(lattice.num_qubits(), 0.0);
}

void ScheduleChecker::violate(ViolationKind k, std::size_t index, std::vector<std::size_t> qubits,
                              std::string msg) {
  report_.violations.push_back({k, index, std::move(qubits), std::move(msg)});
}

void ScheduleChecker::close_segment(Channel& ch, std::size_t index, ViolationKind kind) {
  if (!ch.live.empty()) {
    std::vector<std::size_t> qs;
    for (const auto& [q, _] : ch.live) qs.push_back(q);
    violate(kind, index, qs, std::to_string(qs.size()) + " qubit(s) still attached to the bus");
  }
  ch.live.clear();
  ch.pending.clear();
}

void ScheduleChecker::feed(const BusOp& op, std::size_t index, std::size_t channel) {
  Channel& ch = channels_.at(channel);
  if (op.kind == BusOpKind::NewBus) {
    close_segment(ch, index, ViolationKind::LiveAtBusSwitch);
    ch.segment_gates.push_back(0);
    return;
  }
  const std::size_t q = op.qubit;
  if (q >= lattice_.num_qubits()) {
    violate(ViolationKind::QubitOutOfRange, index, {q}, "qubit index outside the lattice");
    return;
  }

  if (op.kind == BusOpKind::Attach) {
    if (ch.live.contains(q)) {
      violate(ViolationKind::AttachWhileLive, index, {q}, "qubit is already attached to this bus");
      return;
    }
    for (const auto& [r, info] : ch.live) {
      if (info.quad == op.quad) continue;
      if (!lattice_.is_edge(r, q)) {
        violate(ViolationKind::UnwantedEntanglement, index, {r, q},
                "bus couples qubits that are not lattice neighbours");
        continue;
      }
      ch.pending.insert({r, q});
    }
    ch.live[q] = {op.quad, order_++};
    return;
  }

  // Detach
  auto it = ch.live.find(q);
  if (it == ch.live.end()) {
    violate(ViolationKind::DetachWithoutAttach, index, {q}, "qubit is not attached to this bus");
    return;
  }
  if (it->second.quad != op.quad) {
    violate(ViolationKind::QuadratureMismatch, index, {q}, "detach quadrature differs from the attachment");
  }
  const Quadrature quad = it->second.quad;
  for (auto p = ch.pending.begin(); p != ch.pending.end();) {
    const auto [earlier, later] = *p;
    if (earlier == q) {
      const Edge e = Edge::of(earlier, later);
      if (!created_set_.insert(e).second) {
        violate(ViolationKind::DuplicateEdge, index, {e.first, e.second}, "edge created a second time");
      } else {
        report_.created_edges.push_back(e);
        ch.segment_gates.back() += 1;
        // +pi/4 z z when the earlier qubit is on Position, -pi/4 otherwise.
        const double gate_phase = (quad == Quadrature::Position ? 1.0 : -1.0) * std::numbers::pi / 4.0;
        auto& frame = report_.correction_frame;
        frame[e.first] = wrap_angle(frame[e.first] - gate_phase);
        frame[e.second] = wrap_angle(frame[e.second] - gate_phase);
      }
      p = ch.pending.erase(p);
    } else if (later == q) {
      violate(ViolationKind::CancelledPair, index, {earlier, later},
              "later qubit detached first; the loop encloses no area");
      p = ch.pending.erase(p);
    } else {
      ++p;
    }
  }
  ch.live.erase(it);
}

ValidationReport ScheduleChecker::finish(std::size_t end_index, ValidationOptions options) {
  for (auto& ch : channels_) {
    close_segment(ch, end_index, ViolationKind::LiveAtEnd);
    report_.gates_per_segment.push_back(ch.segment_gates);
  }
  if (options.require_complete && created_set_.size() != lattice_.num_edges()) {
    std::vector<std::size_t> missing;
    for (const Edge& e : lattice_.edges()) {
      if (!created_set_.contains(e)) {
        missing.push_back(e.first);
        missing.push_back(e.second);
      }
    }
    violate(ViolationKind::MissingEdges, end_index, missing,
            std::to_string(created_set_.size()) + " of " + std::to_string(lattice_.num_edges()) +
                " edges created");
  }
  report_.valid = report_.violations.empty();
  return std::move(report_);
}

ValidationReport validate_schedule(std::span<const BusOp> ops, const LatticeSpec& lattice,
                                   ValidationOptions options) {
  ScheduleChecker checker(lattice);
  for (std::size_t i = 0; i < ops.size(); ++i) checker.feed(ops[i], i);
  return checker.finish(ops.size(), options);
}

ValidationReport validate_schedule(const Schedule& schedule, ValidationOptions options) {
  return validate_schedule(schedule.ops, schedule.lattice, options);
}

}  // namespace qubus
