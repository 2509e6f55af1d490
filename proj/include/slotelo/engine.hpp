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

#ifndef SLOTELO_ENGINE_HPP_
#define SLOTELO_ENGINE_HPP_

#include <array>
#include <cmath>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slotelo/domain.hpp"

namespace slotelo {

inline constexpr double kEloScale = 600.0;

// Win expectancy of i against j. The smaller value is always computed
// directly and the larger as its complement, so that
// expected_score(a, b) + expected_score(b, a) rounds to 1.
template <typename Scalar>
Scalar expected_score(const Scalar& r_i, const Scalar& r_j) {
  using std::abs;
  using std::pow;
  const Scalar d = r_i - r_j;
  const Scalar low =
      Scalar(1) / (Scalar(1) + pow(Scalar(10), abs(d) / Scalar(kEloScale)));
  return d < Scalar(0) ? low : Scalar(1) - low;
}

// I * (W - W^E); knockout losses are floored at zero.
template <typename Scalar>
Scalar match_delta(const Scalar& r_i, const Scalar& r_j, const Scalar& w,
                   int importance, bool knockout) {
  const Scalar raw = Scalar(importance) * (w - expected_score(r_i, r_j));
  return knockout && raw < Scalar(0) ? Scalar(0) : raw;
}

// Throws DataError for a second group stage outside 1974, 1978, 1982.
int importance(const Match& m);

struct MatchUpdate {
  int importance = 0;
  double result = 0.0;
  double expected = 0.0;
  double delta = 0.0;
};

// Both sides' updates against the given ratings.
std::array<MatchUpdate, 2> match_updates(const Match& m, double r_a,
                                         double r_b);

// nullopt for OFC.
std::optional<Entity> entity_of(std::string_view team, Confederation confed,
                                const SeedingScheme& seeding);

std::string batch_key(const Match& m, Policy policy);

struct Batch {
  int edition = 0;
  std::string key;
  std::vector<Match> matches;
};

// Batches in chronological order; each holds its matches in
// (edition, date_order) order.
std::vector<Batch> partition(std::span<const Match> matches, Policy policy);

// Sum of per-match deltas against `start`, folded in the given order.
// Seeded-vs-seeded and OFC matches contribute nothing; other matches
// between two teams of one entity only when count_intra_entity is set.
EntityVector<double> accumulate_deltas(std::span<const Match> matches,
                                       const EntityVector<double>& start,
                                       const SeedingScheme& seeding,
                                       bool count_intra_entity = false);

// accumulate_deltas over a canonically sorted copy.
EntityVector<double> batch_deltas(std::span<const Match> matches,
                                  const EntityVector<double>& start,
                                  const SeedingScheme& seeding,
                                  bool count_intra_entity = false);

struct RatingTimeline {
  std::vector<RatingState> states;

  const RatingState& initial() const { return states.front(); }
  const RatingState& final() const { return states.back(); }
  size_t batches() const { return states.size() - 1; }
};

RatingState initial_state(const ScenarioConfig& cfg);

RatingTimeline run_policy(std::span<const Match> matches,
                          const ScenarioConfig& cfg);
RatingTimeline run_policy(std::span<const Match> matches,
                          const ScenarioConfig& cfg, const RatingState& start);

// edition,batch_key,entity,rating
void write_timeline_csv(std::ostream& out, const RatingTimeline& timeline);

}  // namespace slotelo

#endif  // SLOTELO_ENGINE_HPP_
