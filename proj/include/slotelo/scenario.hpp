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

#ifndef SLOTELO_SCENARIO_HPP_
#define SLOTELO_SCENARIO_HPP_

#include <compare>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "slotelo/domain.hpp"

namespace slotelo {

struct SweepGrid {
  std::vector<int> end_editions;
  std::vector<Policy> policies;
  std::vector<SeedingScheme> seedings;
  std::vector<bool> last_round_options;

  size_t size() const {
    return end_editions.size() * policies.size() * seedings.size() *
           last_round_options.size();
  }
  // 1994-2022 x all policies x S0, S1, S2, last round excluded.
  static SweepGrid figures();
};

struct SweepKey {
  int end_edition = 0;
  Policy policy = Policy::Round;
  std::string seeding;
  bool last_round = false;

  auto operator<=>(const SweepKey&) const = default;
  std::string label() const;
};

using SweepResult = std::map<SweepKey, AllocationResult>;

// Filters, rates and allocates one scenario.
AllocationResult run_scenario(std::span<const Match> matches,
                              const ScenarioConfig& cfg);

// Grid points run on up to `threads` workers (0: hardware concurrency).
// Errors are rethrown with the failing grid point in the message.
SweepResult run_sweep(std::span<const Match> matches, const SweepGrid& grid,
                      const ScenarioConfig& base, unsigned threads = 0);

struct QuotaDelta {
  ConfedVector delta = ConfedVector::Zero();
  std::array<bool, kRatedCount> omitted{};
};

// b - a per confederation, keyed with last_round cleared. Capped
// confederations are omitted.
std::map<SweepKey, QuotaDelta> diff_sweeps(const SweepResult& a,
                                           const SweepResult& b);

// end_edition,policy,seeding,last_round,confed,quota,capped
void write_sweep_csv(std::ostream& out, const SweepResult& sweep);
// One row per (end_edition, confed); one column per scenario series.
void write_figure_series_csv(std::ostream& out, const SweepResult& sweep);
// end_edition,policy,seeding,confed,delta
void write_diff_csv(std::ostream& out,
                    const std::map<SweepKey, QuotaDelta>& diff);

}  // namespace slotelo

#endif  // SLOTELO_SCENARIO_HPP_
