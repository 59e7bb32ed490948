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

#include <gtest/gtest.h>

#include <chrono>

#include "qubus/multibus/scheduler.hpp"
#include "qubus/multibus/serialize.hpp"
#include "qubus/planner/planner.hpp"

namespace qubus::multibus {
namespace {

StripSpec two_row_strip(std::size_t width, std::size_t horizon, std::size_t b = 5, std::size_t stagger = kMinStagger) {
  return {width, horizon, width / 2, Pitch::OnePerTwoRows, b, stagger};
}

StripSpec one_row_strip(std::size_t width, std::size_t horizon, std::size_t b = 5, std::size_t stagger = kMinStagger) {
  return {width, horizon, width, Pitch::OnePerRow, b, stagger};
}

TEST(StripSpec, Validate) {
  EXPECT_NO_THROW(two_row_strip(4, 6).validate());
  EXPECT_THROW((StripSpec{3, 6, 1, Pitch::OnePerTwoRows, 5, 6}.validate()), std::invalid_argument);
  EXPECT_THROW((StripSpec{1, 6, 1, Pitch::OnePerRow, 5, 6}.validate()), std::invalid_argument);
  EXPECT_THROW((StripSpec{4, 0, 2, Pitch::OnePerTwoRows, 5, 6}.validate()), std::invalid_argument);
  EXPECT_THROW((StripSpec{4, 6, 0, Pitch::OnePerTwoRows, 5, 6}.validate()), std::invalid_argument);
  EXPECT_THROW((StripSpec{4, 6, 3, Pitch::OnePerTwoRows, 5, 6}.validate()), std::invalid_argument);
  EXPECT_THROW((StripSpec{4, 6, 2, Pitch::OnePerTwoRows, 0, 6}.validate()), std::invalid_argument);
  EXPECT_EQ(pitch_from_string("one-per-row"), Pitch::OnePerRow);
  EXPECT_EQ(to_string(Pitch::OnePerTwoRows), "one-per-two-rows");
  EXPECT_THROW(pitch_from_string("diagonal"), std::invalid_argument);
}

TEST(Schedule, WidthFourTwoBuses) {
  const ParallelSchedule s = schedule_parallel(two_row_strip(4, 6));
  EXPECT_TRUE(check_conflicts(s).empty());
  EXPECT_EQ(s.start_slots, (std::vector<std::size_t>{0, 6}));
  EXPECT_EQ(s.op_count(), 68u);
  EXPECT_EQ(makespan(s).slots, 46u);
  // The upper bus also stitches the two bands together.
  EXPECT_EQ(s.gates_per_brick, (std::vector<std::vector<std::size_t>>{{2, 20}, {1, 15}}));
  EXPECT_EQ(s.gates_per_bus[0] + s.gates_per_bus[1], s.lattice.num_edges());
}

TEST(Schedule, InteriorBricksCarryTwentyGates) {
  // Three bands. Full bricks past the first one have a lead column and a
  // stitching row, the leading brick lacks the two lead edges.
  const ParallelSchedule s = schedule_parallel(two_row_strip(6, 10));
  EXPECT_TRUE(check_conflicts(s).empty());
  EXPECT_EQ(s.gates_per_brick[0], (std::vector<std::size_t>{18, 20}));
  EXPECT_EQ(s.gates_per_brick[1], (std::vector<std::size_t>{18, 20}));
  EXPECT_EQ(s.gates_per_brick[2], (std::vector<std::size_t>{13, 15}));
}

TEST(Schedule, ConflictFreeAcrossShapes) {
  for (std::size_t w = 2; w <= 8; ++w) {
    for (std::size_t h = 1; h <= 12; ++h) {
      for (std::size_t b = 1; b <= 6; ++b) {
        if (w % 2 == 0) {
          EXPECT_TRUE(check_conflicts(schedule_parallel(two_row_strip(w, h, b))).empty());
        }
        EXPECT_TRUE(check_conflicts(schedule_parallel(one_row_strip(w, h, b))).empty());
      }
    }
  }
}

TEST(Schedule, StaggerFiveCollides) {
  const ParallelSchedule s = schedule_parallel(two_row_strip(4, 6, 5, 5));
  const auto conflicts = check_conflicts(s);
  ASSERT_FALSE(conflicts.empty());
  bool collision = false;
  for (const Conflict& c : conflicts) {
    if (c.kind != ConflictKind::QubitCollision) continue;
    collision = true;
    // Collisions happen on the stitching row shared by the two bands.
    ASSERT_TRUE(c.qubit);
    EXPECT_EQ(*c.qubit / 6, 2u);
    EXPECT_EQ(c.buses, (std::vector<std::size_t>{0, 1}));
  }
  EXPECT_TRUE(collision);
}

TEST(Schedule, SingleBusIsTheZigzagBand) {
  for (std::size_t h = 2; h <= 5; ++h) {
    const ParallelSchedule s = schedule_parallel({2, h, 1, Pitch::OnePerTwoRows, 5, kMinStagger});
    const Schedule z = plan(LatticeSpec(2, h), Strategy::zigzag2());
    std::vector<BusOp> ops;
    for (const TimedOp& t : s.ops) ops.push_back(t.op);
    EXPECT_EQ(ops, z.ops) << h;
    EXPECT_EQ(makespan(s).slots, z.op_count);
  }
}

TEST(Conflicts, HandBuiltCollision) {
  ParallelSchedule s = schedule_parallel(two_row_strip(4, 2));
  s.ops = {{0, 3, BusOp::attach(5, Quadrature::Momentum)}, {1, 3, BusOp::attach(5, Quadrature::Momentum)}};
  s.start_slots = {3, 9};
  const auto conflicts = check_conflicts(s);
  ASSERT_EQ(conflicts.size(), 1u);
  EXPECT_EQ(conflicts[0].kind, ConflictKind::QubitCollision);
  EXPECT_EQ(conflicts[0].slot, 3u);
  EXPECT_EQ(conflicts[0].qubit, 5u);
}

TEST(Conflicts, BusOverlapAndStagger) {
  ParallelSchedule s = schedule_parallel(two_row_strip(4, 2));
  s.ops = {{0, 0, BusOp::attach(0, Quadrature::Position)}, {0, 0, BusOp::attach(1, Quadrature::Momentum)},
           {1, 2, BusOp::attach(4, Quadrature::Position)}};
  s.start_slots = {0, 2};
  const auto conflicts = check_conflicts(s);
  ASSERT_EQ(conflicts.size(), 2u);
  EXPECT_EQ(conflicts[0].kind, ConflictKind::BusOverlap);
  EXPECT_EQ(conflicts[1].kind, ConflictKind::StaggerTooSmall);
}

TEST(Makespan, Basics) {
  ParallelSchedule empty = schedule_parallel(two_row_strip(4, 2));
  empty.ops.clear();
  EXPECT_EQ(makespan(empty).slots, 0u);
  EXPECT_EQ(throughput(empty), 0.0);
  const ParallelSchedule single = schedule_parallel({2, 9, 1, Pitch::OnePerTwoRows, 4, kMinStagger});
  EXPECT_EQ(makespan(single).slots, single.op_count());
  const Makespan m = makespan(schedule_parallel(two_row_strip(4, 6)), 1e-6);
  EXPECT_EQ(m.slots, 46u);
  EXPECT_DOUBLE_EQ(m.seconds, 46e-6);
  EXPECT_EQ(makespan(schedule_parallel(one_row_strip(4, 6))).slots, 45u);
}

TEST(Makespan, MoreBusesNeverSlowerOnLongStrips) {
  for (std::size_t w = 4; w <= 8; w += 2) {
    for (std::size_t b = 1; b <= 6; ++b) {
      for (std::size_t h = 2 * w; h <= 40; ++h) {
        const ParallelSchedule fewer = schedule_parallel(two_row_strip(w, h, b));
        const ParallelSchedule more = schedule_parallel(one_row_strip(w, h, b));
        EXPECT_LE(makespan(more).slots, makespan(fewer).slots) << w << " " << b << " " << h;
        EXPECT_GE(throughput(more), throughput(fewer));
      }
    }
  }
  // Short strips are dominated by the stagger of the extra buses.
  EXPECT_GT(makespan(schedule_parallel(one_row_strip(4, 5))).slots,
            makespan(schedule_parallel(two_row_strip(4, 5))).slots);
}

TEST(Simulation, SmallStripsBuildTheCluster) {
  for (std::size_t h = 1; h <= 4; ++h) {
    for (std::size_t b = 1; b <= 3; ++b) {
      for (const StripSpec& strip : {two_row_strip(4, h, b), one_row_strip(4, h, b), one_row_strip(3, h, b)}) {
        const auto report = verify_parallel(schedule_parallel(strip));
        ASSERT_TRUE(report);
        EXPECT_TRUE(report->pass) << strip.width << "x" << h << " b=" << b;
      }
    }
  }
}

TEST(Simulation, FourBySixStrip) {
  const auto start = std::chrono::steady_clock::now();
  const ParallelSimulation sim = simulate_parallel(schedule_parallel(two_row_strip(4, 6)));
  EXPECT_TRUE(sim.schedule_valid);
  ASSERT_TRUE(sim.disentangled);
  const auto report = verify_cluster_state(sim.state, LatticeSpec(4, 6), sim.correction_frame, 1e-6);
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.stabilizer_values.size(), 24u);
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 30.0);
}

TEST(Simulation, RefusesLargeStrips) {
  EXPECT_THROW(simulate_parallel(schedule_parallel(two_row_strip(4, 7))), std::invalid_argument);
}

TEST(Serialize, Json) {
  const ParallelSchedule s = schedule_parallel(two_row_strip(4, 6));
  const auto j = to_json(s, 1.0);
  EXPECT_EQ(j["strip"].dump(),
            R"({"w":4,"k":2,"pitch":"one-per-two-rows","horizon":6,"brick_length":5,"stagger":6})");
  EXPECT_EQ(j["slots"].size(), 46u);
  EXPECT_EQ(j["makespan_slots"], 46);
  EXPECT_EQ(j["conflicts"], 0);
  std::size_t ops = 0;
  for (const auto& slot : j["slots"]) {
    for (const auto& entry : slot) {
      if (entry[1]["kind"] != "new_bus") ++ops;
    }
  }
  EXPECT_EQ(ops, s.op_count());
}

TEST(Serialize, OccupancyCsv) {
  const std::string csv = occupancy_csv(schedule_parallel(two_row_strip(4, 2)), 2.0);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "slot,time_s,bus_0,bus_1");
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  EXPECT_EQ(lines, 1 + makespan(schedule_parallel(two_row_strip(4, 2))).slots);
}

}  // namespace
}  // namespace qubus::multibus
