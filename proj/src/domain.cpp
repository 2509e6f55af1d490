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

#include "slotelo/domain.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace slotelo {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::vector<SeededCountry> first_four() {
  return {{"Argentina", Confederation::CONMEBOL, {}},
          {"Brazil", Confederation::CONMEBOL, {}},
          {"England", Confederation::UEFA, {}},
          {"Germany", Confederation::UEFA, {"West Germany"}}};
}

}  // namespace

std::string_view to_string(Confederation c) {
  switch (c) {
    case Confederation::AFC: return "AFC";
    case Confederation::CAF: return "CAF";
    case Confederation::CONCACAF: return "CONCACAF";
    case Confederation::CONMEBOL: return "CONMEBOL";
    case Confederation::OFC: return "OFC";
    case Confederation::UEFA: return "UEFA";
  }
  return "?";
}

std::string_view short_name(Confederation c) {
  if (c == Confederation::CONCACAF) return "CONC";
  if (c == Confederation::CONMEBOL) return "CONM";
  return to_string(c);
}

std::string_view to_string(Entity e) {
  if (e == Entity::Seeded) return "SEEDED";
  return to_string(kRated[index(e)]);
}

std::optional<Confederation> parse_confederation(std::string_view s) {
  for (Confederation c : kConfederations)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

std::optional<Entity> to_entity(Confederation c) {
  switch (c) {
    case Confederation::AFC: return Entity::AFC;
    case Confederation::CAF: return Entity::CAF;
    case Confederation::CONCACAF: return Entity::CONCACAF;
    case Confederation::CONMEBOL: return Entity::CONMEBOL;
    case Confederation::UEFA: return Entity::UEFA;
    case Confederation::OFC: break;
  }
  return std::nullopt;
}

int rated_index(Confederation c) {
  auto e = to_entity(c);
  if (!e) throw std::out_of_range("OFC is not a rated confederation");
  return index(*e);
}

std::string_view to_string(Stage s) {
  switch (s) {
    case Stage::Group1: return "GROUP1";
    case Stage::Group2: return "GROUP2";
    case Stage::R16: return "R16";
    case Stage::QF: return "QF";
    case Stage::SF: return "SF";
    case Stage::ThirdPlace: return "TP";
    case Stage::Final: return "F";
    case Stage::PlayoffLeg: return "PLAYOFF";
  }
  return "?";
}

std::optional<Stage> parse_stage(std::string_view s) {
  for (Stage st : {Stage::Group1, Stage::Group2, Stage::R16, Stage::QF,
                   Stage::SF, Stage::ThirdPlace, Stage::Final,
                   Stage::PlayoffLeg})
    if (to_string(st) == s) return st;
  return std::nullopt;
}

bool is_knockout(Stage s) {
  switch (s) {
    case Stage::R16:
    case Stage::QF:
    case Stage::SF:
    case Stage::ThirdPlace:
    case Stage::Final:
      return true;
    default:
      return false;
  }
}

std::string_view to_string(Policy p) {
  switch (p) {
    case Policy::Round: return "round";
    case Policy::Stage: return "stage";
    case Policy::FourYear: return "4year";
  }
  return "?";
}

std::optional<Policy> parse_policy(std::string_view s) {
  const std::string l = lower(s);
  if (l == "round") return Policy::Round;
  if (l == "stage") return Policy::Stage;
  if (l == "4year" || l == "fouryear" || l == "4-year") return Policy::FourYear;
  return std::nullopt;
}

SeedingScheme::SeedingScheme(std::string name,
                             std::vector<SeededCountry> countries)
    : name_(std::move(name)), countries_(std::move(countries)) {
  for (const auto& c : countries_) {
    if (c.confed == Confederation::OFC)
      throw ConfigError("seeded country " + c.name + " belongs to OFC");
    seed_counts_(rated_index(c.confed)) += 1.0;
  }
}

SeedingScheme SeedingScheme::S0() { return SeedingScheme("S0", {}); }

SeedingScheme SeedingScheme::S1() { return SeedingScheme("S1", first_four()); }

SeedingScheme SeedingScheme::S2() {
  auto countries = first_four();
  countries.push_back({"France", Confederation::UEFA, {}});
  countries.push_back({"Italy", Confederation::UEFA, {}});
  countries.push_back({"Mexico", Confederation::CONCACAF, {}});
  countries.push_back({"Spain", Confederation::UEFA, {}});
  return SeedingScheme("S2", std::move(countries));
}

std::optional<SeedingScheme> SeedingScheme::named(std::string_view name) {
  const std::string l = lower(name);
  if (l == "s0") return S0();
  if (l == "s1") return S1();
  if (l == "s2") return S2();
  return std::nullopt;
}

int SeedingScheme::count(Confederation c) const {
  if (c == Confederation::OFC) return 0;
  return static_cast<int>(seed_counts_(rated_index(c)));
}

bool SeedingScheme::contains(std::string_view team) const {
  for (const auto& c : countries_) {
    if (c.name == team) return true;
    for (const auto& a : c.aliases)
      if (a == team) return true;
  }
  return false;
}

void ScenarioConfig::validate() const {
  if (!(pool() > 0.0))
    throw ConfigError("total_slots - ofc_quota - |S| must be positive");
  if (!std::isfinite(total_slots) || !std::isfinite(ofc_quota) ||
      ofc_quota < 0.0)
    throw ConfigError("slot totals must be finite and non-negative");
  if (!std::isfinite(initial_rating))
    throw ConfigError("initial_rating must be finite");
  for (const auto& [c, cap] : caps) {
    if (c == Confederation::OFC)
      throw ConfigError("OFC has a fixed quota and cannot be capped");
    if (!(cap > 0.0) || !std::isfinite(cap))
      throw ConfigError("cap for " + std::string(to_string(c)) +
                        " must be positive");
  }
}

std::vector<Entity> RatingState::active() const {
  std::vector<Entity> out(kEntities.begin(), kEntities.end() - 1);
  if (seeded_active) out.push_back(Entity::Seeded);
  return out;
}

}  // namespace slotelo
