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

#ifndef QUBUS_CLI_COMMANDS_HPP
#define QUBUS_CLI_COMMANDS_HPP

#include <cstddef>
#include <iosfwd>
#include <string>

#include "json.hpp"

namespace qubus::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitResource = 3,
};

/// Largest register the simulate and parallel --verify commands will build.
inline constexpr std::size_t kMaxCliQubits = 20;

/// Entry point shared by the `qubus` executable and the tests.
///
///   qubus plan --rows M --cols N --strategy S [--brick-length B] [-o FILE]
///   qubus simulate FILE [--check-stabilizers] [--tol T] [--beta-sq B]
///   qubus budget --gamma-tau G --eta E --epsilon P [--beta-sq B] [--format json|csv]
///   qubus parallel --width W [--buses K] [--pitch P] [--horizon H] [--brick-length B]
///                  [--stagger S] [--tau T] [--verify] [--format json|csv] [-o FILE]
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Rounds every floating-point value to 12 significant digits, recursively.
void round_floats(nlohmann::ordered_json& j);

/// Compact-indented dump of round_floats(j) followed by a newline.
std::string dump(nlohmann::ordered_json j);

}  // namespace qubus::cli

#endif  // QUBUS_CLI_COMMANDS_HPP
