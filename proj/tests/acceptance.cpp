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

// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status is non-zero when a criterion fails unexpectedly. Criterion 7
// contains a clause that cannot hold on a width-4 strip (see README); its
// line reports FAIL with the measured counts but does not fail the run.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qubus/budget/error_budget.hpp"
#include "qubus/core/cluster_check.hpp"
#include "qubus/core/hybrid_state.hpp"
#include "qubus/core/phase_table.hpp"
#include "qubus/multibus/scheduler.hpp"
#include "qubus/planner/brute_force.hpp"
#include "qubus/planner/formulas.hpp"
#include "qubus/planner/planner.hpp"
#include "qubus/planner/simulate.hpp"
#include "qubus/planner/validate.hpp"

namespace {

using namespace qubus;
constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
  bool known_infeasible = false;
};

double z(std::uint64_t branch, std::size_t q) { return ((branch >> q) & 1U) ? -1.0 : 1.0; }

CondDisplacement disp(std::size_t q, Quadrature quad, int sign) {
  return {q, quad, sign, beta_from_sq(kPi / 8)};
}

Outcome gate_correctness() {
  constexpr auto X = Quadrature::Position;
  constexpr auto P = Quadrature::Momentum;
  const HybridState before = init_register(2);
  HybridState after = before;
  for (const auto& op : {disp(0, P, +1), disp(1, X, -1), disp(0, P, -1), disp(1, X, +1)}) after.apply(op);
  const double residual = after.max_displacement();
  const PhaseTable t = extract_diagonal_unitary(before, after);
  const double sum = *t.at("00") - *t.at("01") - *t.at("10") + *t.at("11");
  const double err = std::abs(wrap_angle(sum - kPi));
  std::ostringstream d;
  d << "max|alpha|=" << residual << " entangling phase error=" << err;
  return {residual <= 1e-9 && err <= 1e-9, d.str()};
}

Outcome chained_gates() {
  constexpr auto X = Quadrature::Position;
  constexpr auto P = Quadrature::Momentum;
  const std::vector<CondDisplacement> chain{disp(0, X, +1), disp(1, P, +1), disp(0, X, -1),
                                            disp(2, X, -1), disp(1, P, -1), disp(2, X, +1)};
  const HybridState before = init_register(3);
  HybridState after = before;
  for (const auto& op : chain) after.apply(op);
  const PhaseTable t = extract_diagonal_unitary(before, after);

  auto gate = [&](std::size_t a, std::size_t b) {
    HybridState s = before;
    for (const auto& op : {disp(a, P, +1), disp(b, X, -1), disp(a, P, -1), disp(b, X, +1)}) s.apply(op);
    return extract_diagonal_unitary(before, s);
  };
  const PhaseTable g01 = gate(0, 1), g12 = gate(1, 2);
  double worst = 0.0, worst_composed = 0.0;
  for (std::uint64_t b = 0; b < 8; ++b) {
    const double expect = kPi / 4 * (z(b, 0) * z(b, 1) + z(b, 1) * z(b, 2));
    worst = std::max(worst, std::abs(wrap_angle(*t.phases[b] - expect)));
    worst_composed = std::max(worst_composed, std::abs(wrap_angle(*t.phases[b] - *g01.phases[b] - *g12.phases[b])));
  }
  const std::size_t separate_ops = 2 * 4;
  std::ostringstream d;
  d << "phase error=" << worst << " vs composed=" << worst_composed << " ops=" << chain.size() << " (separate "
    << separate_ops << ")";
  return {worst <= 1e-9 && worst_composed <= 1e-9 && chain.size() == 6 && chain.size() < separate_ops, d.str()};
}

Outcome cluster_build() {
  std::ostringstream d;
  bool pass = true;
  for (const auto& [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 4}}) {
    for (const Strategy& s : {Strategy::zigzag2(), Strategy::bricks(2)}) {
      const Schedule sch = plan(LatticeSpec(m, n), s);
      const auto report = build_and_verify(sch, 1e-6);
      const bool ok = report && report->pass;
      if (!ok) d << m << "x" << n << " " << s.name() << " failed; ";
      pass = pass && ok;
    }
  }
  d << "10 plans checked";
  return {pass, d.str()};
}

Outcome formulas() {
  std::size_t mismatches = 0, checked = 0;
  for (std::int64_t m = 2; m <= 50; ++m) {
    for (std::int64_t n = 2; n <= 50; ++n) {
      const std::int64_t edges = lattice_edge_count(m, n);
      ++checked;
      // Independent restatements of each count.
      if (ops_no_reuse(m, n) != 4 * (2 * m * n - m - n)) ++mismatches;
      if (ops_no_reuse(m, n) != 4 * edges) ++mismatches;
      if (ops_width1_min(m, n) != 4 * m * n - 8) ++mismatches;
      if (ops_width2_min(m, n) != 3 * m * n - 2 * (m + n) + 4) ++mismatches;
      if (ops_bricks(m, n, 1).value() != 5 * m * n - 2 * (m + n)) ++mismatches;
      for (std::int64_t b = 1; b <= 12; ++b) {
        const OpCount c = ops_bricks(m, n, b);
        // b * N = (3b + 2) mn - 2b(m + n), compared without division.
        if (c.numerator * b != ((3 * b + 2) * m * n - 2 * b * (m + n)) * c.denominator) ++mismatches;
      }
    }
  }
  std::ostringstream d;
  d << checked << " lattices, " << mismatches << " mismatches";
  return {mismatches == 0, d.str()};
}

Outcome edge_bound() {
  std::size_t cases = 0, failures = 0;
  std::ostringstream d;
  for (std::size_t m = 1; m <= 12; ++m) {
    for (std::size_t n = 1; m * n <= 12; ++n) {
      if (m * n < 2) continue;
      const LatticeSpec l(m, n);
      for (std::size_t width : {1u, 2u}) {
        const std::size_t expect = width == 1 ? m * n - 1 : 3 * m * n / 2 - 2;
        if (width == 2 && ((m * n) % 2 != 0 || m < 2 || n < 2)) continue;
        const EdgeSearchResult r = brute_force_max_edges(l, width);
        const ValidationReport v = validate_schedule(r.witness, l, {.require_complete = false});
        ++cases;
        if (r.max_edges != expect || !v.valid || v.created_edges.size() != r.max_edges) {
          ++failures;
          d << m << "x" << n << " w" << width << " got " << r.max_edges << " want " << expect << "; ";
        }
      }
    }
  }
  d << cases << " cases, " << failures << " failures";
  return {failures == 0, d.str()};
}

Outcome worked_example() {
  const budget::NoiseParams p{5e-4, 1e-4, kPi / 8, 0.01};
  const std::size_t b = budget::max_brick_size(p);
  const std::size_t bn = budget::max_brick_size_no_reuse(p);
  const double e5 = budget::dephasing_prob(p, 6 * 5 + 4, 4 * 5);
  const double e6 = budget::dephasing_prob(p, 6 * 6 + 4, 4 * 6);
  std::ostringstream d;
  d.precision(6);
  d << "b_lego=" << b << " (" << budget::qubits_in_brick(b) << " qubits, " << budget::gates_in_brick(b)
    << " gates) b_no_reuse=" << bn << " (" << budget::qubits_in_brick(bn) << " qubits, "
    << budget::gates_in_brick(bn) << " gates) eps(5)=" << e5 << " eps(6)=" << e6;
  const bool pass = b == 5 && budget::qubits_in_brick(b) == 17 && budget::gates_in_brick(b) == 20 && bn == 2 &&
                    budget::qubits_in_brick(bn) == 8 && budget::gates_in_brick(bn) == 8 && e5 <= 0.01 && 0.01 < e6;
  return {pass, d.str()};
}

Outcome parallel_schedule() {
  using namespace qubus::multibus;
  const StripSpec strip{4, 6, 2, Pitch::OnePerTwoRows, 5, kMinStagger};
  const ParallelSchedule s = schedule_parallel(strip);
  const bool collision_free = check_conflicts(s).empty();
  const bool stagger = s.start_slots.size() == 2 && s.start_slots[1] - s.start_slots[0] >= 6;
  const auto cluster = verify_parallel(s, 1e-6);
  const bool simulated = cluster && cluster->pass;
  // Gates per bus in its full b = 5 brick (the last brick of each band).
  std::vector<std::size_t> full;
  for (const auto& bricks : s.gates_per_brick) full.push_back(bricks.back());
  bool twenty_each = true;
  for (std::size_t g : full) twenty_each = twenty_each && g == 20;

  std::ostringstream d;
  d << "collision-free=" << collision_free << " stagger=" << (s.start_slots[1] - s.start_slots[0])
    << " merged-sim=" << simulated << " gates per bus in b=5 brick=[" << full[0] << ", " << full[1] << "]";
  Outcome o{collision_free && stagger && simulated && twenty_each, d.str()};
  if (!twenty_each && collision_free && stagger && simulated) {
    o.known_infeasible = true;
    o.detail += "; a width-4 strip has 35 edges per 5 columns, fewer than 2 x 20";
  }
  return o;
}

Outcome reuse_property() {
  std::mt19937_64 rng(20261017);
  std::uniform_real_distribution<double> lg(-6.0, -2.0);
  const double beta_sq = kPi / 8;
  std::size_t agree = 0, band = 0, band_disagree = 0, outside_disagree = 0, ties = 0;
  for (int i = 0; i < 1000; ++i) {
    const double gamma_tau = std::pow(10.0, lg(rng));
    const double loss = std::pow(10.0, lg(rng));
    const budget::NoiseParams p{gamma_tau, loss / beta_sq, beta_sq, 0.01};
    const budget::ReuseAdvantage adv = budget::reuse_advantage(p);
    const std::size_t lego = budget::qubits_in_brick(budget::max_brick_size(p));
    const std::size_t single = budget::qubits_in_brick(budget::max_brick_size_no_reuse(p));
    const bool direct = lego > single;
    const bool same = adv.lego_better == direct;
    agree += same;
    band += adv.in_margin_band;
    if (!same) {
      (adv.in_margin_band ? band_disagree : outside_disagree) += 1;
      ties += lego == single;
    }
  }
  std::ostringstream d;
  d << "1000 draws, " << agree << " agree, " << band << " in margin band, " << band_disagree
    << " disagreements in band (reported, " << ties << " with equal brick sizes), " << outside_disagree
    << " outside";
  return {outside_disagree == 0, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"gate correctness", gate_correctness},     {"chained gates", chained_gates},
      {"end-to-end cluster build", cluster_build}, {"formula reproduction", formulas},
      {"edge-bound oracle", edge_bound},           {"worked budget example", worked_example},
      {"parallel schedule", parallel_schedule},    {"reuse advantage", reuse_property},
  };
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu %s: %s [%.1f ms]%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), ms, o.known_infeasible ? " (known infeasible, see README)" : "");
    if (!o.pass && !o.known_infeasible) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
