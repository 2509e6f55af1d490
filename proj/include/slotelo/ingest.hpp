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

#ifndef SLOTELO_INGEST_HPP_
#define SLOTELO_INGEST_HPP_

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "slotelo/domain.hpp"

namespace slotelo {

inline constexpr const char* kCsvHeader =
    "edition,date_order,stage,round_index,team_a,team_b,confed_a,confed_b,"
    "score_a,score_b,w_a,shootout,last_group_round";

// Reads the match CSV. Rows come back sorted by (edition, date_order).
// Throws DataError naming the row (1-based file line) and field.
std::vector<Match> parse_matches(std::istream& in);
std::vector<Match> load_matches(const std::string& path);

// Empty when the match is admissible, else "field: reason".
std::optional<std::string> check_match(const Match& m);

void write_match_row(std::ostream& out, const Match& m);

std::vector<Match> apply_filters(std::span<const Match> matches,
                                 const ScenarioConfig& cfg);

// Unordered pairs of distinct rated confederations, lexicographic.
inline constexpr int kPairCount = 10;
std::array<Confederation, 2> pair_members(int pair);
std::optional<int> pair_of(Confederation a, Confederation b);
std::string pair_label(int pair);  // e.g. CONM–UEFA

using CountMatrix = Eigen::Matrix<int, kEntityCount, kEntityCount>;

struct EditionCounts {
  std::array<int, kPairCount> pairs{};
  int playoff_single_legs = 0;
  int playoff_two_leg_ties = 0;

  int total() const;
};

struct DatasetSummary {
  // Inter-confederation inventory: tournament matches per pair, play-off
  // ties counted once.
  std::map<int, EditionCounts> editions;
  // wins(i, j): matches entity i won against entity j. Draws are
  // symmetric; a diagonal draw is one match.
  CountMatrix wins = CountMatrix::Zero();
  CountMatrix draws = CountMatrix::Zero();
  int matches = 0;

  int pair_total(int pair) const;
  int inventory_total() const;
  int total_wins() const { return wins.sum(); }
  int total_draws() const;
};

DatasetSummary tabulate(std::span<const Match> matches,
                        const SeedingScheme& seeding);

// Published inventory and result tallies.
struct PublishedTallies {
  CountMatrix wins;
  CountMatrix draws;
};
const std::vector<int>& published_editions();
// Columns follow published_editions(); rows 0..9 are pairs, then the
// single-leg and two-legged play-off rows.
const std::vector<std::array<int, 18>>& published_inventory();
const PublishedTallies& published_tallies(const std::string& seeding);

struct CellCheck {
  std::string table;
  std::string cell;
  int expected = 0;
  int actual = 0;

  int diff() const { return actual - expected; }
};

struct Reconciliation {
  std::vector<CellCheck> cells;

  int max_abs_diff() const;
  std::vector<CellCheck> discrepancies() const;
};

// Compares a baseline-filtered, unseeded dataset with the published
// figures. Seeded tallies are recomputed from matches.
Reconciliation reconcile(std::span<const Match> baseline);

}  // namespace slotelo

#endif  // SLOTELO_INGEST_HPP_
