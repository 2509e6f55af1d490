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

#include "slotelo/allocator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "json.hpp"

namespace slotelo {
namespace {

double round6(double x) { return std::round(x * 1e6) / 1e6; }

void check_reference(const RatingState& state, Entity reference) {
  if (reference == Entity::Seeded && !state.seeded_active)
    throw ConfigError("the seeded entity is not active in this scenario");
}

}  // namespace

RatioVector ratios(const RatingState& state, Entity reference) {
  check_reference(state, reference);
  RatioVector out;
  out.reference = reference;
  out.seeded_active = state.seeded_active;
  out.values = pairwise_ratio(state.ratings, state[reference]);
  if (!state.seeded_active) out.values(index(Entity::Seeded)) = 0.0;
  out.values(index(reference)) = 1.0;
  return out;
}

ConfedVector raw_quotas(const RatingState& state, const ScenarioConfig& cfg,
                        Entity reference) {
  cfg.validate();
  check_reference(state, reference);
  const ConfedVector a = pairwise_ratio(
      state.ratings.head<kRatedCount>(), state[reference]);
  return a / a.sum() * cfg.pool() + cfg.seeding.seed_counts();
}

AllocationResult apply_caps(const ConfedVector& quotas,
                            const ScenarioConfig& cfg) {
  cfg.validate();
  const ConfedVector seeds = cfg.seeding.seed_counts();
  ConfedVector cap = ConfedVector::Constant(
      std::numeric_limits<double>::infinity());
  for (const auto& [c, value] : cfg.caps) cap(rated_index(c)) = value;

  AllocationResult out;
  out.ofc = cfg.ofc_quota;
  out.quotas = quotas;

  if (!cfg.redistribute_cap_excess) {
    for (int i = 0; i < kRatedCount; ++i) {
      if (quotas(i) > cap(i)) {
        out.quotas(i) = cap(i);
        out.capped[i] = true;
      }
    }
    return out;
  }

  for (int i = 0; i < kRatedCount; ++i)
    if (cap(i) < seeds(i))
      throw ConfigError("cap of " + std::string(to_string(kRated[i])) +
                        " is below its seed count");

  // Non-seed shares keep their proportions among the uncapped.
  const ConfedVector share = quotas - seeds;
  const double pool = share.sum();
  std::array<bool, kRatedCount> fixed{};
  while (true) {
    double free_pool = pool;
    double weight = 0.0;
    for (int i = 0; i < kRatedCount; ++i) {
      if (fixed[i])
        free_pool -= cap(i) - seeds(i);
      else
        weight += share(i);
    }
    if (weight <= 0.0) {
      if (std::abs(free_pool) > 1e-9 * std::max(1.0, pool))
        throw ConfigError("infeasible caps: every confederation is capped but " +
                          std::to_string(free_pool) + " slots remain");
      break;
    }
    int worst = -1;
    double worst_excess = 0.0;
    for (int i = 0; i < kRatedCount; ++i) {
      if (fixed[i]) {
        out.quotas(i) = cap(i);
        continue;
      }
      out.quotas(i) = seeds(i) + share(i) / weight * free_pool;
      double excess = out.quotas(i) - cap(i);
      if (excess > worst_excess) {
        worst = i;
        worst_excess = excess;
      }
    }
    if (worst < 0) break;
    fixed[worst] = true;
  }
  out.capped = fixed;
  return out;
}

AllocationResult allocate(const RatingState& state, const ScenarioConfig& cfg,
                          Entity reference) {
  AllocationResult out = apply_caps(raw_quotas(state, cfg, reference), cfg);
  RatioVector r = ratios(state, reference);
  out.reference = reference;
  out.ratios = r.values;
  out.seeded_active = state.seeded_active;
  return out;
}

void write_allocation_json(std::ostream& out, const AllocationResult& result) {
  nlohmann::ordered_json j;
  j["quotas"] = nlohmann::ordered_json::object();
  for (Confederation c : kRated)
    j["quotas"][std::string(to_string(c))] = round6(result.quota(c));
  j["ofc"] = round6(result.ofc);
  j["capped"] = nlohmann::ordered_json::array();
  for (Confederation c : kRated)
    if (result.is_capped(c)) j["capped"].push_back(std::string(to_string(c)));
  j["reference"] = std::string(to_string(result.reference));
  j["ratios"] = nlohmann::ordered_json::object();
  for (Entity e : kEntities) {
    if (e == Entity::Seeded && !result.seeded_active) continue;
    j["ratios"][std::string(to_string(e))] = round6(result.ratios(index(e)));
  }
  out << j.dump(2) << '\n';
}

}  // namespace slotelo
