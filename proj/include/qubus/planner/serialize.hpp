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

#ifndef QUBUS_PLANNER_SERIALIZE_HPP
#define QUBUS_PLANNER_SERIALIZE_HPP

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "qubus/planner/schedule.hpp"

namespace qubus {

/// Malformed or inconsistent schedule document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"lattice": {"m", "n"}, "strategy", "ops": [...], "meta": {"N", "buses", "turns"}}
/// Ops are {"kind": "attach"|"detach", "qubit": [r, c], "quad": "x"|"p"} or
/// {"kind": "new_bus"}. Bricks schedules add meta.brick_length.
nlohmann::ordered_json schedule_to_json(const Schedule& schedule);
std::string schedule_to_string(const Schedule& schedule);

/// Inverse of schedule_to_json. The meta block is informational; counts are
/// recomputed from the ops. Throws FormatError.
Schedule schedule_from_json(const nlohmann::ordered_json& doc);
Schedule schedule_from_string(const std::string& text);

nlohmann::ordered_json bus_op_to_json(const BusOp& op, const LatticeSpec& lattice);
BusOp bus_op_from_json(const nlohmann::ordered_json& j, const LatticeSpec& lattice);

}  // namespace qubus

#endif  // QUBUS_PLANNER_SERIALIZE_HPP
