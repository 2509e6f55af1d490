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

#ifndef SLOTELO_TESTS_SUPPORT_HPP_
#define SLOTELO_TESTS_SUPPORT_HPP_

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "slotelo/domain.hpp"
#include "slotelo/ingest.hpp"

namespace slotelo::testing {

inline const std::vector<Match>& bundled() {
  static const std::vector<Match> all = load_matches(SLOTELO_DATASET);
  return all;
}

inline std::vector<Match> baseline() {
  return apply_filters(bundled(), ScenarioConfig{});
}

inline Match make(int edition, int order, Stage stage, const std::string& a,
                  Confederation ca, const std::string& b, Confederation cb,
                  double w_a, int round = 1) {
  Match m;
  m.edition = edition;
  m.date_order = order;
  m.stage = stage;
  m.round_index = round;
  m.team_a = a;
  m.team_b = b;
  m.confed_a = ca;
  m.confed_b = cb;
  m.w_a = w_a;
  m.shootout = w_a == 0.75 || (w_a == 0.5 && stage != Stage::Group1 &&
                               stage != Stage::Group2 &&
                               stage != Stage::PlayoffLeg);
  if (m.shootout) {
    m.score_a = m.score_b = 1;
  } else {
    m.score_a = w_a == 1.0 ? 1 : 0;
    m.score_b = w_a == 0.0 ? 1 : 0;
  }
  return m;
}

// Closed-form win expectancy written out independently of the library.
inline long double oracle_expected(long double r_i, long double r_j) {
  return 1.0L / (1.0L + std::pow(10.0L, -(r_i - r_j) / 600.0L));
}

inline RatingState state_of(double afc, double caf, double conc, double conm,
                            double uefa, double seeded = 0.0,
                            bool seeded_active = false) {
  RatingState s;
  s.ratings << afc, caf, conc, conm, uefa, seeded;
  s.seeded_active = seeded_active;
  return s;
}

// Random admissible match for round-trip and property tests.
inline Match random_match(std::mt19937_64& rng, int order) {
  static const Stage stages[] = {Stage::Group1, Stage::R16,        Stage::QF,
                                 Stage::SF,     Stage::ThirdPlace, Stage::Final,
                                 Stage::PlayoffLeg};
  static const Confederation confeds[] = {
      Confederation::AFC, Confederation::CAF, Confederation::CONCACAF,
      Confederation::CONMEBOL, Confederation::UEFA};
  std::uniform_int_distribution<int> pick(0, 1000);
  Match m;
  m.edition = 1954 + 4 * (pick(rng) % 18);
  m.date_order = order;
  m.stage = stages[pick(rng) % 7];
  m.round_index = 1 + pick(rng) % 3;
  m.team_a = "Team" + std::to_string(pick(rng));
  m.team_b = m.team_a + "x";
  m.confed_a = confeds[pick(rng) % 5];
  m.confed_b = confeds[pick(rng) % 5];
  int kind = pick(rng) % 5;
  bool can_shoot = m.stage != Stage::Group1;
  if (kind >= 3 && can_shoot) {
    m.shootout = true;
    m.score_a = m.score_b = pick(rng) % 4;
    m.w_a = kind == 3 ? 0.75 : 0.5;
  } else {
    m.score_a = pick(rng) % 5;
    m.score_b = pick(rng) % 5;
    m.w_a = m.score_a > m.score_b ? 1.0 : m.score_a < m.score_b ? 0.0 : 0.5;
  }
  m.last_group_round = m.stage == Stage::Group1 && m.round_index == 3;
  return m;
}

}  // namespace slotelo::testing

#endif  // SLOTELO_TESTS_SUPPORT_HPP_
