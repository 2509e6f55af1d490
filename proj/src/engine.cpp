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

#include "slotelo/engine.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>
#include <tuple>

namespace slotelo {
namespace {

std::vector<Match> sorted(std::span<const Match> matches) {
  std::vector<Match> out(matches.begin(), matches.end());
  std::stable_sort(out.begin(), out.end(), [](const Match& a, const Match& b) {
    return std::tie(a.edition, a.date_order) < std::tie(b.edition, b.date_order);
  });
  return out;
}

}  // namespace

int importance(const Match& m) {
  switch (m.stage) {
    case Stage::PlayoffLeg:
      return 25;
    case Stage::Group1:
    case Stage::R16:
      return 50;
    case Stage::Group2:
      if (m.edition == 1974 || m.edition == 1978) return 60;
      if (m.edition == 1982) return 50;
      throw DataError("no second group stage in " + std::to_string(m.edition));
    case Stage::QF:
    case Stage::SF:
    case Stage::ThirdPlace:
    case Stage::Final:
      return 60;
  }
  throw DataError("unknown stage");
}

std::array<MatchUpdate, 2> match_updates(const Match& m, double r_a,
                                         double r_b) {
  const int imp = importance(m);
  const bool ko = is_knockout(m.stage);
  MatchUpdate a{imp, m.w_a, expected_score(r_a, r_b),
                match_delta(r_a, r_b, m.w_a, imp, ko)};
  MatchUpdate b{imp, m.w_b(), expected_score(r_b, r_a),
                match_delta(r_b, r_a, m.w_b(), imp, ko)};
  return {a, b};
}

std::optional<Entity> entity_of(std::string_view team, Confederation confed,
                                const SeedingScheme& seeding) {
  if (confed == Confederation::OFC) return std::nullopt;
  if (seeding.contains(team)) return Entity::Seeded;
  return to_entity(confed);
}

std::string batch_key(const Match& m, Policy policy) {
  if (policy == Policy::FourYear) return "ALL";
  switch (m.stage) {
    case Stage::PlayoffLeg:
      return "PO";
    case Stage::Group1:
      return policy == Policy::Round ? "G1R" + std::to_string(m.round_index)
                                     : "G1";
    case Stage::Group2:
      return policy == Policy::Round ? "G2R" + std::to_string(m.round_index)
                                     : "G2";
    case Stage::R16:
      return "R16";
    case Stage::QF:
      return "QF";
    case Stage::SF:
      return "SF";
    case Stage::ThirdPlace:
    case Stage::Final:
      return "F";
  }
  return "?";
}

std::vector<Batch> partition(std::span<const Match> matches, Policy policy) {
  std::vector<Batch> out;
  std::map<std::pair<int, std::string>, size_t> slot;
  for (Match& m : sorted(matches)) {
    auto key = std::make_pair(m.edition, batch_key(m, policy));
    auto [it, fresh] = slot.emplace(key, out.size());
    if (fresh) out.push_back({key.first, key.second, {}});
    out[it->second].matches.push_back(std::move(m));
  }
  return out;
}

EntityVector<double> accumulate_deltas(std::span<const Match> matches,
                                       const EntityVector<double>& start,
                                       const SeedingScheme& seeding,
                                       bool count_intra_entity) {
  EntityVector<double> acc = EntityVector<double>::Zero();
  for (const Match& m : matches) {
    auto a = entity_of(m.team_a, m.confed_a, seeding);
    auto b = entity_of(m.team_b, m.confed_b, seeding);
    if (!a || !b) continue;
    if (*a == Entity::Seeded && *b == Entity::Seeded) continue;
    if (*a == *b && !count_intra_entity) continue;
    auto [ua, ub] = match_updates(m, start(index(*a)), start(index(*b)));
    acc(index(*a)) += ua.delta;
    acc(index(*b)) += ub.delta;
  }
  return acc;
}

EntityVector<double> batch_deltas(std::span<const Match> matches,
                                  const EntityVector<double>& start,
                                  const SeedingScheme& seeding,
                                  bool count_intra_entity) {
  return accumulate_deltas(sorted(matches), start, seeding, count_intra_entity);
}

RatingState initial_state(const ScenarioConfig& cfg) {
  RatingState s;
  s.ratings.setConstant(cfg.initial_rating);
  s.seeded_active = !cfg.seeding.empty();
  if (!s.seeded_active) s.ratings(index(Entity::Seeded)) = 0.0;
  return s;
}

RatingTimeline run_policy(std::span<const Match> matches,
                          const ScenarioConfig& cfg) {
  return run_policy(matches, cfg, initial_state(cfg));
}

RatingTimeline run_policy(std::span<const Match> matches,
                          const ScenarioConfig& cfg, const RatingState& start) {
  RatingTimeline t;
  t.states.push_back(start);
  for (const Batch& batch : partition(matches, cfg.policy)) {
    RatingState next = t.states.back();
    next.ratings += accumulate_deltas(batch.matches, next.ratings, cfg.seeding,
                                      cfg.count_intra_entity);
    next.edition = batch.edition;
    next.batch_key = batch.key;
    t.states.push_back(std::move(next));
  }
  return t;
}

void write_timeline_csv(std::ostream& out, const RatingTimeline& timeline) {
  out << "edition,batch_key,entity,rating\n";
  char buf[64];
  for (const RatingState& s : timeline.states) {
    for (Entity e : s.active()) {
      std::snprintf(buf, sizeof buf, "%.6f", s[e]);
      out << s.edition << ',' << s.batch_key << ',' << to_string(e) << ','
          << buf << '\n';
    }
  }
}

}  // namespace slotelo
