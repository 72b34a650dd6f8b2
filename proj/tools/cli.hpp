// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gencirc::cli {

inline constexpr const char* kSeedEnv = "GENCIRC_SEED";
inline constexpr std::uint64_t kDefaultSeed = 20260101;

struct CommandConfig {
  std::string command;
  std::string input;
  std::optional<std::string> other;  ///< second ideal for fan-compare
  std::optional<std::string> field;
  std::string order = "drl";
  std::optional<std::string> weight;
  std::string tie = "drl";
  std::optional<std::uint32_t> trunc;
  std::optional<std::uint32_t> degree;
  std::optional<std::size_t> cap;
  std::optional<std::uint32_t> lexcap;
  std::uint64_t seed = kDefaultSeed;
  std::string seed_source = "default";
  std::uint64_t entry_bound = 10000;
  unsigned retries = 3;
  std::uint32_t gtrials = 2;
  std::uint32_t btrials = 5;
  bool identity_g = false;
  std::string convention = "column";
  std::string mode = "generic";
  long box = 3;
  long step = 1;
  std::vector<std::string> at = {"2", "3"};
  std::optional<std::string> output;
  bool timestamp = true;
};

/// Executes one command and writes its JSON document to `out` (or cfg.output).
/// Exit codes: 0 ok, 1 malformed input, 2 honest certification failure.
int run(const CommandConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs the command.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gencirc::cli
