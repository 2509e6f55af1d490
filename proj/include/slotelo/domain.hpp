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

#ifndef SLOTELO_DOMAIN_HPP_
#define SLOTELO_DOMAIN_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace slotelo {

// Bad input data or a broken dataset invariant.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad configuration or arguments.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Confederation : std::uint8_t { AFC, CAF, CONCACAF, CONMEBOL, OFC, UEFA };

inline constexpr std::array<Confederation, 6> kConfederations = {
    Confederation::AFC,      Confederation::CAF, Confederation::CONCACAF,
    Confederation::CONMEBOL, Confederation::OFC, Confederation::UEFA};

// The rated confederations, in the order used by every ConfedVector.
inline constexpr int kRatedCount = 5;
inline constexpr std::array<Confederation, kRatedCount> kRated = {
    Confederation::AFC, Confederation::CAF, Confederation::CONCACAF,
    Confederation::CONMEBOL, Confederation::UEFA};

// A rating entity is one of the rated confederations or the seeded block.
// The first five values share their index with kRated.
enum class Entity : std::uint8_t { AFC, CAF, CONCACAF, CONMEBOL, UEFA, Seeded };

inline constexpr int kEntityCount = 6;
inline constexpr std::array<Entity, kEntityCount> kEntities = {
    Entity::AFC,  Entity::CAF,  Entity::CONCACAF,
    Entity::CONMEBOL, Entity::UEFA, Entity::Seeded};

template <typename Scalar>
using EntityVector = Eigen::Array<Scalar, kEntityCount, 1>;
template <typename Scalar>
using ConfedArray = Eigen::Array<Scalar, kRatedCount, 1>;
using ConfedVector = ConfedArray<double>;

std::string_view to_string(Confederation c);
std::string_view to_string(Entity e);
std::string_view short_name(Confederation c);  // CONC, CONM
std::optional<Confederation> parse_confederation(std::string_view s);

// OFC has no rating entity.
std::optional<Entity> to_entity(Confederation c);
// Index into ConfedVector; throws for OFC.
int rated_index(Confederation c);
inline int index(Entity e) { return static_cast<int>(e); }

enum class Stage : std::uint8_t {
  Group1, Group2, R16, QF, SF, ThirdPlace, Final, PlayoffLeg
};

std::string_view to_string(Stage s);  // dataset codes: GROUP1 ... PLAYOFF
std::optional<Stage> parse_stage(std::string_view s);
bool is_knockout(Stage s);

struct Match {
  int edition = 0;
  int date_order = 0;
  Stage stage = Stage::Group1;
  int round_index = 1;
  std::string team_a;
  std::string team_b;
  Confederation confed_a = Confederation::UEFA;
  Confederation confed_b = Confederation::UEFA;
  int score_a = 0;
  int score_b = 0;
  double w_a = 0.5;
  bool shootout = false;
  bool last_group_round = false;

  // 0.5 for a lost shootout, 1 - w_a otherwise.
  double w_b() const { return shootout ? 1.25 - w_a : 1.0 - w_a; }

  bool operator==(const Match&) const = default;
};

enum class Policy : std::uint8_t { Round, Stage, FourYear };

std::string_view to_string(Policy p);  // round, stage, 4year
std::optional<Policy> parse_policy(std::string_view s);

struct SeededCountry {
  std::string name;
  Confederation confed;
  std::vector<std::string> aliases;
};

class SeedingScheme {
 public:
  SeedingScheme() = default;
  SeedingScheme(std::string name, std::vector<SeededCountry> countries);

  static SeedingScheme S0();
  static SeedingScheme S1();
  static SeedingScheme S2();
  // s0, s1, s2 (case-insensitive).
  static std::optional<SeedingScheme> named(std::string_view name);

  const std::string& name() const { return name_; }
  const std::vector<SeededCountry>& countries() const { return countries_; }
  bool empty() const { return countries_.empty(); }
  int size() const { return static_cast<int>(countries_.size()); }
  // |S_i| for each rated confederation.
  const ConfedVector& seed_counts() const { return seed_counts_; }
  int count(Confederation c) const;
  bool contains(std::string_view team) const;

 private:
  std::string name_ = "S0";
  std::vector<SeededCountry> countries_;
  ConfedVector seed_counts_ = ConfedVector::Zero();
};

struct ScenarioConfig {
  Policy policy = Policy::Round;
  SeedingScheme seeding = SeedingScheme::S2();
  int end_edition = 2022;
  bool include_last_group_round = false;
  double total_slots = 48.0;
  double ofc_quota = 4.0 / 3.0;
  std::map<Confederation, double> caps = {{Confederation::CONMEBOL, 8.0}};
  double initial_rating = 1500.0;
  bool redistribute_cap_excess = true;
  // Rate matches between two teams of the same confederation. Only the
  // knockout floor and shootouts make these differ from a no-op.
  bool count_intra_entity = false;

  // Slots shared out in proportion to the ratios.
  double pool() const {
    return total_slots - ofc_quota - static_cast<double>(seeding.size());
  }
  // Throws ConfigError.
  void validate() const;
};

struct RatingState {
  int edition = 0;
  std::string batch_key = "INIT";
  EntityVector<double> ratings = EntityVector<double>::Zero();
  bool seeded_active = false;

  double operator[](Entity e) const { return ratings(index(e)); }
  std::vector<Entity> active() const;
};

struct AllocationResult {
  ConfedVector quotas = ConfedVector::Zero();
  double ofc = 0.0;
  std::array<bool, kRatedCount> capped{};
  Entity reference = Entity::AFC;
  EntityVector<double> ratios = EntityVector<double>::Zero();
  bool seeded_active = false;

  double quota(Confederation c) const { return quotas(rated_index(c)); }
  bool is_capped(Confederation c) const { return capped[rated_index(c)]; }
  double total() const { return quotas.sum() + ofc; }
};

}  // namespace slotelo

#endif  // SLOTELO_DOMAIN_HPP_
