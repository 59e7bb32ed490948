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

#ifndef QUBUS_MULTIBUS_SERIALIZE_HPP
#define QUBUS_MULTIBUS_SERIALIZE_HPP

#include <string>

#include "json.hpp"
#include "qubus/multibus/scheduler.hpp"

namespace qubus::multibus {

/// {"strip": {"w", "k", "pitch", "horizon", "brick_length", "stagger"},
///  "slots": [[[bus, op], ...], ...], "makespan_slots", "makespan_seconds",
///  "gates_per_bus", "gates_per_brick", "conflicts"}. Slot i of "slots" lists the ops issued in
/// that slot; idle slots are empty arrays.
nlohmann::ordered_json to_json(const ParallelSchedule& schedule, double tau);

/// One row per slot: slot, time in seconds, then one cell per bus
/// ("attach r0c1 x", "detach r0c1 x", "new_bus attach r0c1 x", or empty).
std::string occupancy_csv(const ParallelSchedule& schedule, double tau);

}  // namespace qubus::multibus

#endif  // QUBUS_MULTIBUS_SERIALIZE_HPP
