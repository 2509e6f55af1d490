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

#ifndef SLOTELO_ALLOCATOR_HPP_
#define SLOTELO_ALLOCATOR_HPP_

#include <cmath>
#include <iosfwd>

#include "slotelo/domain.hpp"
#include "slotelo/engine.hpp"

namespace slotelo {

// 10^((r_i - r_k)/600), the odds W^E_ik / W^E_ki.
template <typename Scalar>
Scalar pairwise_ratio(const Scalar& r_i, const Scalar& r_k) {
  using std::pow;
  return pow(Scalar(10), (r_i - r_k) / Scalar(kEloScale));
}

// Coefficient-wise over a rating array.
template <typename Derived>
auto pairwise_ratio(const Eigen::ArrayBase<Derived>& ratings,
                    typename Derived::Scalar r_k) {
  using Scalar = typename Derived::Scalar;
  return Eigen::pow(Scalar(10), (ratings - r_k) / Scalar(kEloScale));
}

struct RatioVector {
  Entity reference = Entity::AFC;
  EntityVector<double> values = EntityVector<double>::Zero();
  bool seeded_active = false;
};

RatioVector ratios(const RatingState& state, Entity reference);

// Quotas of the five rated confederations before caps.
ConfedVector raw_quotas(const RatingState& state, const ScenarioConfig& cfg,
                        Entity reference = Entity::AFC);

// Water-filling against cfg.caps. Without redistribution the excess is
// simply dropped. Throws ConfigError when the caps cannot absorb the pool.
AllocationResult apply_caps(const ConfedVector& quotas,
                            const ScenarioConfig& cfg);

AllocationResult allocate(const RatingState& state, const ScenarioConfig& cfg,
                          Entity reference = Entity::AFC);

void write_allocation_json(std::ostream& out, const AllocationResult& result);

}  // namespace slotelo

#endif  // SLOTELO_ALLOCATOR_HPP_
