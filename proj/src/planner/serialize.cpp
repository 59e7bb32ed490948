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

#include "qubus/planner/serialize.hpp"

namespace qubus {

using nlohmann::ordered_json;

namespace {

std::size_t read_count(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0) {
    throw FormatError(std::string("expected a non-negative integer '") + key + "'");
  }
  return j[key].get<std::size_t>();
}

}  // namespace

ordered_json bus_op_to_json(const BusOp& op, const LatticeSpec& lattice) {
  ordered_json j;
  j["kind"] = to_string(op.kind);
  if (op.kind != BusOpKind::NewBus) {
    const Coord c = lattice.coord(op.qubit);
    j["qubit"] = {c.row, c.col};
    j["quad"] = std::string(to_string(op.quad));
  }
  return j;
}

BusOp bus_op_from_json(const ordered_json& j, const LatticeSpec& lattice) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) throw FormatError("op without a kind");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "new_bus") return BusOp::new_bus();
  if (kind != "attach" && kind != "detach") throw FormatError("unknown op kind '" + kind + "'");
  const auto& q = j.value("qubit", ordered_json());
  if (!q.is_array() || q.size() != 2 || !q[0].is_number_unsigned() || !q[1].is_number_unsigned()) {
    throw FormatError("op qubit must be [row, col]");
  }
  const std::size_t r = q[0].get<std::size_t>(), c = q[1].get<std::size_t>();
  if (r >= lattice.rows() || c >= lattice.cols()) throw FormatError("op qubit outside the lattice");
  if (!j.contains("quad") || !j["quad"].is_string()) throw FormatError("op without a quadrature");
  Quadrature quad;
  try {
    quad = quadrature_from_string(j["quad"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  const std::size_t index = lattice.index(r, c);
  return kind == "attach" ? BusOp::attach(index, quad) : BusOp::detach(index, quad);
}

ordered_json schedule_to_json(const Schedule& s) {
  ordered_json doc;
  doc["lattice"] = {{"m", s.lattice.rows()}, {"n", s.lattice.cols()}};
  doc["strategy"] = s.strategy.name();
  ordered_json ops = ordered_json::array();
  for (const BusOp& op : s.ops) ops.push_back(bus_op_to_json(op, s.lattice));
  doc["ops"] = std::move(ops);
  ordered_json meta;
  meta["N"] = s.op_count;
  meta["buses"] = s.bus_count;
  meta["turns"] = s.turns;
  if (s.strategy.kind == Strategy::Kind::Bricks) meta["brick_length"] = s.strategy.brick_length;
  doc["meta"] = std::move(meta);
  return doc;
}

std::string schedule_to_string(const Schedule& s) { return schedule_to_json(s).dump(2) + "\n"; }

Schedule schedule_from_json(const ordered_json& doc) {
  if (!doc.is_object()) throw FormatError("schedule document must be an object");
  if (!doc.contains("lattice") || !doc["lattice"].is_object()) throw FormatError("missing lattice");
  const std::size_t m = read_count(doc["lattice"], "m");
  const std::size_t n = read_count(doc["lattice"], "n");
  if (m == 0 || n == 0) throw FormatError("lattice dimensions must be positive");
  const LatticeSpec lattice(m, n);

  if (!doc.contains("strategy") || !doc["strategy"].is_string()) throw FormatError("missing strategy");
  std::size_t brick_length = 0;
  std::size_t turns = 0;
  if (doc.contains("meta") && doc["meta"].is_object()) {
    const auto& meta = doc["meta"];
    if (meta.contains("brick_length")) brick_length = read_count(meta, "brick_length");
    if (meta.contains("turns")) turns = read_count(meta, "turns");
  }
  Strategy strategy;
  try {
    strategy = Strategy::parse(doc["strategy"].get<std::string>(), brick_length);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }

  if (!doc.contains("ops") || !doc["ops"].is_array()) throw FormatError("missing ops array");
  std::vector<BusOp> ops;
  for (const auto& j : doc["ops"]) ops.push_back(bus_op_from_json(j, lattice));
  return make_schedule(lattice, strategy, std::move(ops), turns);
}

Schedule schedule_from_string(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  return schedule_from_json(doc);
}

}  // namespace qubus
