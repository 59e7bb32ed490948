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

#include "qubus/planner/brute_force.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace qubus {

namespace {

struct LiveEntry {
  std::size_t qubit;
  Quadrature quad;
};

struct Move {
  BusOp op;
  std::size_t gain;
};

class EdgeSearch {
 public:
  EdgeSearch(const LatticeSpec& lattice, std::size_t width) : lattice_(lattice), width_(width) {
    full_ = (std::uint32_t{1} << lattice.num_qubits()) - 1;
  }

  EdgeSearchResult run() {
    EdgeSearchResult result;
    result.max_edges = best();
    // Replay the first optimal move at every step.
    std::size_t remaining = result.max_edges;
    while (mask_ != full_ || !live_.empty()) {
      for (const Move& mv : moves()) {
        apply(mv.op);
        if (mv.gain + best() == remaining) {
          remaining -= mv.gain;
          result.witness.push_back(mv.op);
          break;
        }
        undo(mv.op);
      }
    }
    return result;
  }

 private:
  std::uint64_t key() const {
    std::uint64_t k = mask_ | (std::uint64_t{live_.size()} << 12);
    std::size_t shift = 15;
    for (const LiveEntry& e : live_) {
      k |= (std::uint64_t{e.qubit} | (e.quad == Quadrature::Momentum ? 16u : 0u)) << shift;
      shift += 5;
    }
    return k;
  }

  std::size_t live_count(Quadrature q) const {
    std::size_t c = 0;
    for (const LiveEntry& e : live_) c += e.quad == q;
    return c;
  }

  std::vector<Move> moves() const {
    std::vector<Move> out;
    const std::size_t nq = lattice_.num_qubits();
    for (std::size_t q = 0; q < nq; ++q) {
      if (mask_ & (std::uint32_t{1} << q)) continue;
      for (Quadrature quad : {Quadrature::Position, Quadrature::Momentum}) {
        if (mask_ == 0 && quad == Quadrature::Momentum) continue;
        if (live_count(quad) >= width_) continue;
        std::size_t gain = 0;
        bool ok = true;
        for (const LiveEntry& e : live_) {
          if (e.quad == quad) continue;
          if (!lattice_.is_edge(e.qubit, q)) {
            ok = false;
            break;
          }
          ++gain;
        }
        if (ok) out.push_back({BusOp::attach(q, quad), gain});
      }
    }
    std::vector<Move> detaches;
    for (std::size_t i = 0; i < live_.size(); ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < i; ++j) {
        if (live_[j].quad != live_[i].quad) ok = false;
      }
      if (ok) detaches.push_back({BusOp::detach(live_[i].qubit, live_[i].quad), 0});
    }
    std::sort(detaches.begin(), detaches.end(),
              [](const Move& a, const Move& b) { return a.op.qubit < b.op.qubit; });
    out.insert(out.end(), detaches.begin(), detaches.end());
    return out;
  }

  void apply(const BusOp& op) {
    if (op.kind == BusOpKind::Attach) {
      mask_ |= std::uint32_t{1} << op.qubit;
      live_.push_back({op.qubit, op.quad});
    } else {
      for (std::size_t i = 0; i < live_.size(); ++i) {
        if (live_[i].qubit == op.qubit) {
          saved_.push_back({i, live_[i]});
          live_.erase(live_.begin() + static_cast<std::ptrdiff_t>(i));
          break;
        }
      }
    }
  }

  void undo(const BusOp& op) {
    if (op.kind == BusOpKind::Attach) {
      mask_ &= ~(std::uint32_t{1} << op.qubit);
      live_.pop_back();
    } else {
      const auto [i, entry] = saved_.back();
      saved_.pop_back();
      live_.insert(live_.begin() + static_cast<std::ptrdiff_t>(i), entry);
    }
  }

  std::size_t best() {
    if (mask_ == full_ && live_.empty()) return 0;
    const std::uint64_t k = key();
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    std::size_t value = 0;
    for (const Move& mv : moves()) {
      apply(mv.op);
      value = std::max(value, mv.gain + best());
      undo(mv.op);
    }
    memo_.emplace(k, value);
    return value;
  }

  const LatticeSpec& lattice_;
  std::size_t width_;
  std::uint32_t full_ = 0;
  std::uint32_t mask_ = 0;
  std::vector<LiveEntry> live_;
  std::vector<std::pair<std::size_t, LiveEntry>> saved_;
  std::unordered_map<std::uint64_t, std::size_t> memo_;
};

}  // namespace

EdgeSearchResult brute_force_max_edges(const LatticeSpec& lattice, std::size_t width_limit) {
  if (width_limit != 1 && width_limit != 2) throw std::invalid_argument("width limit must be 1 or 2");
  if (lattice.num_qubits() > kBruteForceMaxQubits) {
    throw std::invalid_argument("exhaustive search is limited to " + std::to_string(kBruteForceMaxQubits) +
                                " qubits, got " + std::to_string(lattice.num_qubits()));
  }
  return EdgeSearch(lattice, width_limit).run();
}

}  // namespace qubus
