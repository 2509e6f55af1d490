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

#include <sstream>

#include "doctest.h"
#include "slotelo/allocator.hpp"
#include "slotelo/engine.hpp"
#include "slotelo/scenario.hpp"
#include "support.hpp"

namespace slotelo {
namespace {

using doctest::Approx;
using testing::bundled;

SweepGrid small_grid() {
  return {{2022},
          {Policy::Round, Policy::Stage, Policy::FourYear},
          {SeedingScheme::S0(), SeedingScheme::S1(), SeedingScheme::S2()},
          {false}};
}

SweepGrid table6_grid(bool last) {
  SweepGrid g = small_grid();
  g.last_round_options = {last};
  return g;
}

TEST_CASE("grid cardinality") {
  CHECK(small_grid().size() == 9);
  CHECK(run_sweep(bundled(), small_grid(), ScenarioConfig{}).size() == 9);
  CHECK(SweepGrid::figures().size() == 72);
}

TEST_CASE("a one-point sweep equals run_scenario") {
  ScenarioConfig cfg;
  cfg.policy = Policy::Stage;
  cfg.seeding = SeedingScheme::S1();
  cfg.end_edition = 2010;
  const SweepGrid g{{2010}, {Policy::Stage}, {SeedingScheme::S1()}, {false}};
  const SweepResult r = run_sweep(bundled(), g, ScenarioConfig{});
  REQUIRE(r.size() == 1);
  const AllocationResult direct = run_scenario(bundled(), cfg);
  CHECK((r.begin()->second.quotas == direct.quotas).all());

  // run_scenario is the filtered pipeline spelled out.
  const auto kept = apply_filters(bundled(), cfg);
  const auto manual = allocate(run_policy(kept, cfg).final(), cfg);
  CHECK((manual.quotas == direct.quotas).all());
}

TEST_CASE("parallel and sequential sweeps agree exactly") {
  const SweepGrid g = SweepGrid::figures();
  const auto one = run_sweep(bundled(), g, ScenarioConfig{}, 1);
  const auto many = run_sweep(bundled(), g, ScenarioConfig{}, 8);
  REQUIRE(one.size() == many.size());
  std::ostringstream a, b;
  write_sweep_csv(a, one);
  write_sweep_csv(b, many);
  CHECK(a.str() == b.str());
  for (const auto& [key, res] : one) {
    CHECK((res.quotas == many.at(key).quotas).all());
    CHECK(std::abs(res.total() - 48.0) <= 1e-9);
  }
}

TEST_CASE("capped CONMEBOL is exactly 8") {
  ScenarioConfig uncapped;
  uncapped.caps.clear();
  const auto g = SweepGrid::figures();
  const auto capped = run_sweep(bundled(), g, ScenarioConfig{});
  const auto raw = run_sweep(bundled(), g, uncapped);
  int binding = 0;
  for (const auto& [key, res] : raw) {
    if (res.quota(Confederation::CONMEBOL) > 8.0) {
      ++binding;
      CHECK(capped.at(key).quota(Confederation::CONMEBOL) == 8.0);
      CHECK(capped.at(key).is_capped(Confederation::CONMEBOL));
    }
  }
  CHECK(binding > 0);
}

TEST_CASE("diffing") {
  const auto a = run_sweep(bundled(), small_grid(), ScenarioConfig{});
  for (const auto& [key, d] : diff_sweeps(a, a)) CHECK((d.delta == 0.0).all());

  SweepGrid other = small_grid();
  other.end_editions = {2018};
  const auto b = run_sweep(bundled(), other, ScenarioConfig{});
  CHECK_THROWS_AS(diff_sweeps(a, b), ConfigError);
}

TEST_CASE("bad grids are rejected") {
  SweepGrid g = small_grid();
  g.policies.clear();
  CHECK_THROWS_AS(run_sweep(bundled(), g, ScenarioConfig{}), ConfigError);
  g = small_grid();
  g.end_editions = {2026};
  CHECK_THROWS_AS(run_sweep(bundled(), g, ScenarioConfig{}), ConfigError);
}

TEST_CASE("including the last group round") {
  const auto base = run_sweep(bundled(), table6_grid(false), ScenarioConfig{});
  const auto last = run_sweep(bundled(), table6_grid(true), ScenarioConfig{});
  const auto diff = diff_sweeps(base, last);
  REQUIRE(diff.size() == 9);
  const int afc = rated_index(Confederation::AFC);
  const int caf = rated_index(Confederation::CAF);
  const int uefa = rated_index(Confederation::UEFA);
  for (const auto& [key, d] : diff) {
    CHECK_MESSAGE(d.delta(uefa) < 0.0, key.label());
    CHECK_MESSAGE(d.delta(afc) > 0.0, key.label());
    CHECK_MESSAGE(d.delta(caf) > 0.0, key.label());
    CHECK(d.omitted[rated_index(Confederation::CONMEBOL)]);
  }
  const auto& round_s2 = diff.at({2022, Policy::Round, "S2", false});
  CHECK(round_s2.delta(uefa) == Approx(-3.85).epsilon(0.75 / 3.85));
  const auto& four_s1 = diff.at({2022, Policy::FourYear, "S1", false});
  CHECK(four_s1.delta(caf) == Approx(7.05).epsilon(0.75 / 7.05));

  std::ostringstream csv;
  write_diff_csv(csv, diff);
  CHECK(csv.str().rfind("end_edition,policy,seeding,confed,delta\n", 0) == 0);
}

TEST_CASE("export shapes") {
  const auto r = run_sweep(bundled(), small_grid(), ScenarioConfig{});
  std::ostringstream sweep, series;
  write_sweep_csv(sweep, r);
  write_figure_series_csv(series, r);
  std::string line;
  std::istringstream in(sweep.str());
  std::getline(in, line);
  CHECK(line == "end_edition,policy,seeding,last_round,confed,quota,capped");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 9 * 6);
  std::istringstream s(series.str());
  rows = 0;
  while (std::getline(s, line)) ++rows;
  CHECK(rows == 1 + kRatedCount);
}

}  // namespace
}  // namespace slotelo
