// Copyright 2026 The slotelo Authors.
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

#ifndef SLOTELO_TOOLS_CLI_HPP_
#define SLOTELO_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "slotelo/domain.hpp"

namespace slotelo::cli {

enum ExitCode : int { kOk = 0, kDataError = 1, kUsageError = 2 };

struct CliConfig {
  ScenarioConfig scenario;
  std::string dataset = "data/matches.csv";
  std::string out = "results";
};

// Keys mirror ScenarioConfig plus "dataset" and "out". Unknown keys are
// rejected. Throws ConfigError.
void merge_json(CliConfig& cfg, const nlohmann::json& j);
CliConfig load_config(const std::string& path);
nlohmann::ordered_json to_json(const CliConfig& cfg);

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace slotelo::cli

#endif  // SLOTELO_TOOLS_CLI_HPP_
