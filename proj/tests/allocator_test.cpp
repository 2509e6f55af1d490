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

#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "slotelo/allocator.hpp"
#include "support.hpp"

namespace slotelo {
namespace {

using doctest::Approx;
using testing::state_of;

const RatingState kAnchor =
    state_of(1576.56, 1734.71, 1574.12, 1590.36, 1806.89, 2000.0, true);

// Quota by direct evaluation: 10^(r/600) weights over the pool.
ConfedVector oracle_quotas(const RatingState& s, const ScenarioConfig& cfg) {
  long double w[kRatedCount], sum = 0;
  for (int i = 0; i < kRatedCount; ++i)
    sum += w[i] = std::pow(10.0L, (s.ratings(i) - 1500.0L) / 600.0L);
  ConfedVector q;
  for (int i = 0; i < kRatedCount; ++i)
    q(i) = static_cast<double>(w[i] / sum * cfg.pool()) +
           cfg.seeding.seed_counts()(i);
  return q;
}

ScenarioConfig toy() {
  ScenarioConfig cfg;
  cfg.seeding = SeedingScheme::S0();
  cfg.total_slots = 12.0;
  cfg.ofc_quota = 0.0;
  return cfg;
}

TEST_CASE("pairwise ratios") {
  CHECK(pairwise_ratio(1500.0, 1500.0) == 1.0);
  CHECK(pairwise_ratio(2100.0, 1500.0) == Approx(10.0));
  CHECK(pairwise_ratio(1500.0, 2100.0) == Approx(0.1));
  const RatioVector r = ratios(kAnchor, Entity::AFC);
  CHECK(r.values(index(Entity::AFC)) == 1.0);
  CHECK(r.values(index(Entity::CAF)) == Approx(1.83).epsilon(0.005 / 1.83));
  CHECK(r.values(index(Entity::CONCACAF)) == Approx(0.99).epsilon(0.005 / 0.99));
  CHECK(r.values(index(Entity::CONMEBOL)) == Approx(1.05).epsilon(0.005 / 1.05));
  CHECK(r.values(index(Entity::UEFA)) == Approx(2.42).epsilon(0.005 / 2.42));
}

TEST_CASE("ratios are transitive") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> r(1000.0, 2500.0);
  for (int n = 0; n < 10000; ++n) {
    const double ri = r(rng), rj = r(rng), rk = r(rng);
    const double aik = pairwise_ratio(ri, rk);
    const double chain = pairwise_ratio(ri, rj) * pairwise_ratio(rj, rk);
    CHECK(std::abs(aik - chain) / aik <= 1e-12);
  }
}

TEST_CASE("raw quotas") {
  ScenarioConfig cfg;
  cfg.seeding = SeedingScheme::S0();
  const auto equal = raw_quotas(state_of(1500, 1500, 1500, 1500, 1500), cfg);
  for (int i = 0; i < kRatedCount; ++i)
    CHECK(equal(i) == Approx(9.3333).epsilon(1e-4));

  cfg = ScenarioConfig{};
  const auto q = raw_quotas(kAnchor, cfg);
  const auto o = oracle_quotas(kAnchor, cfg);
  CHECK(((q - o).abs() <= 1e-12).all());
  CHECK(q(rated_index(Confederation::AFC)) == Approx(5.3).epsilon(0.02 / 5.3));
  CHECK(q(rated_index(Confederation::UEFA)) == Approx(17.82).epsilon(0.02 / 17.82));
  CHECK(q(rated_index(Confederation::CAF)) == Approx(9.72).epsilon(0.02 / 9.72));
}

TEST_CASE("raw quotas do not depend on the reference or a common shift") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> r(1200.0, 2200.0);
  const ScenarioConfig cfg;
  for (int n = 0; n < 500; ++n) {
    const RatingState s = state_of(r(rng), r(rng), r(rng), r(rng), r(rng),
                                   r(rng), true);
    const auto base = raw_quotas(s, cfg);
    for (Entity e : kEntities)
      CHECK(((raw_quotas(s, cfg, e) - base).abs() <= 1e-9).all());
    RatingState shifted = s;
    shifted.ratings += 313.0;
    CHECK(((raw_quotas(shifted, cfg) - base).abs() <= 1e-9).all());
  }
}

TEST_CASE("budget holds with and without binding caps") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> r(1200.0, 2200.0);
  int bound = 0;
  for (int n = 0; n < 2000; ++n) {
    ScenarioConfig cfg;
    cfg.seeding = *SeedingScheme::named(n % 3 == 0 ? "s0" : n % 3 == 1 ? "s1" : "s2");
    if (n % 2) cfg.caps[Confederation::UEFA] = 12.0;
    const RatingState s = state_of(r(rng), r(rng), r(rng), r(rng), r(rng));
    CHECK(std::abs(raw_quotas(s, cfg).sum() + 4.0 / 3.0 - 48.0) <= 1e-9);
    const AllocationResult a = allocate(s, cfg);
    CHECK(std::abs(a.total() - 48.0) <= 1e-9);
    CHECK((a.quotas >= 0.0).all());
    for (const auto& [c, cap] : cfg.caps) CHECK(a.quota(c) <= cap + 1e-12);
    bound += a.is_capped(Confederation::CONMEBOL) || a.is_capped(Confederation::UEFA);
  }
  CHECK(bound > 100);
}

TEST_CASE("a higher rating never lowers a quota") {
  const ScenarioConfig cfg;
  RatingState s = kAnchor;
  double prev = 0.0;
  for (int step = 0; step < 40; ++step) {
    s.ratings(index(Entity::CAF)) = 1400.0 + 20.0 * step;
    const double q = allocate(s, cfg).quota(Confederation::CAF);
    CHECK(q >= prev);
    prev = q;
  }
}

TEST_CASE("two-confederation cap toy") {
  ScenarioConfig cfg = toy();
  ConfedVector raw = ConfedVector::Zero();
  raw(rated_index(Confederation::CONMEBOL)) = 10.0;
  raw(rated_index(Confederation::UEFA)) = 2.0;
  const AllocationResult a = apply_caps(raw, cfg);
  CHECK(a.quota(Confederation::CONMEBOL) == 8.0);
  CHECK(a.quota(Confederation::UEFA) == Approx(4.0));
  CHECK(a.is_capped(Confederation::CONMEBOL));
  CHECK_FALSE(a.is_capped(Confederation::UEFA));

  cfg.redistribute_cap_excess = false;
  const AllocationResult b = apply_caps(raw, cfg);
  CHECK(b.quota(Confederation::CONMEBOL) == 8.0);
  CHECK(b.quota(Confederation::UEFA) == 2.0);
  CHECK(b.is_capped(Confederation::CONMEBOL));
}

TEST_CASE("caps that do not bind change nothing") {
  ScenarioConfig cfg;
  cfg.caps[Confederation::CONMEBOL] = 12.0;
  const RatingState s = state_of(1500, 1500, 1500, 1500, 1500, 1500, true);
  const auto raw = raw_quotas(s, cfg);
  REQUIRE(raw(rated_index(Confederation::CONMEBOL)) < 12.0);
  const AllocationResult a = apply_caps(raw, cfg);
  CHECK(a.quotas.isApprox(raw, 0.0));
  CHECK_FALSE(a.is_capped(Confederation::CONMEBOL));
}

TEST_CASE("infeasible caps are rejected") {
  ScenarioConfig cfg = toy();
  for (Confederation c : kRated) cfg.caps[c] = 2.0;
  ConfedVector raw = ConfedVector::Constant(12.0 / 5);
  CHECK_THROWS_AS(apply_caps(raw, cfg), ConfigError);

  cfg = ScenarioConfig{};
  cfg.caps[Confederation::UEFA] = 2.0;  // S2 seeds five UEFA teams
  CHECK_THROWS_AS(apply_caps(raw_quotas(kAnchor, cfg), cfg), ConfigError);
}

// Fixing a capped set and re-solving the proportional rule over the rest
// must reproduce the water-filled result.
TEST_CASE("water-filling equals a re-solve over the uncapped set") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> r(1200.0, 2200.0);
  for (int n = 0; n < 1000; ++n) {
    ScenarioConfig cfg;
    cfg.caps[Confederation::UEFA] = 14.0;
    cfg.caps[Confederation::CAF] = 9.0;
    const RatingState s = state_of(r(rng), r(rng), r(rng), r(rng), r(rng));
    const auto raw = raw_quotas(s, cfg);
    const AllocationResult a = apply_caps(raw, cfg);

    const ConfedVector seeds = cfg.seeding.seed_counts();
    double remaining = cfg.pool();
    long double weight = 0;
    for (int i = 0; i < kRatedCount; ++i) {
      if (a.capped[i])
        remaining -= a.quotas(i) - seeds(i);
      else
        weight += std::pow(10.0L, s.ratings(i) / 600.0L);
    }
    for (int i = 0; i < kRatedCount; ++i) {
      if (a.capped[i]) continue;
      const double expect =
          seeds(i) + static_cast<double>(std::pow(10.0L, s.ratings(i) / 600.0L) /
                                         weight) * remaining;
      CHECK(a.quotas(i) == Approx(expect).epsilon(1e-10));
    }
    // Uncapped confederations keep their non-seed proportions.
    for (int i = 0; i < kRatedCount; ++i)
      for (int j = 0; j < kRatedCount; ++j)
        if (!a.capped[i] && !a.capped[j])
          CHECK((a.quotas(i) - seeds(i)) / (a.quotas(j) - seeds(j)) ==
                Approx((raw(i) - seeds(i)) / (raw(j) - seeds(j))).epsilon(1e-10));
  }
}

TEST_CASE("allocation JSON") {
  std::ostringstream out;
  write_allocation_json(out, allocate(kAnchor, ScenarioConfig{}));
  const auto j = nlohmann::json::parse(out.str());
  CHECK(j.at("quotas").size() == 5);
  CHECK(j.at("ofc").get<double>() == Approx(4.0 / 3.0).epsilon(1e-6));
  CHECK(j.at("reference") == "AFC");
  CHECK(j.at("ratios").contains("SEEDED"));
  CHECK(j.at("capped").is_array());
}

}  // namespace
}  // namespace slotelo
