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

#include "slotelo/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <set>
#include <thread>

#include "slotelo/allocator.hpp"
#include "slotelo/engine.hpp"
#include "slotelo/ingest.hpp"

namespace slotelo {
namespace {

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

struct Point {
  SweepKey key;
  ScenarioConfig cfg;
};

std::vector<Point> expand(const SweepGrid& grid, const ScenarioConfig& base) {
  std::vector<Point> points;
  for (int end : grid.end_editions)
    for (Policy p : grid.policies)
      for (const SeedingScheme& s : grid.seedings)
        for (bool last : grid.last_round_options) {
          ScenarioConfig cfg = base;
          cfg.end_edition = end;
          cfg.policy = p;
          cfg.seeding = s;
          cfg.include_last_group_round = last;
          points.push_back({{end, p, s.name(), last}, std::move(cfg)});
        }
  return points;
}

void check_grid(std::span<const Match> matches, const SweepGrid& grid) {
  if (grid.end_editions.empty() || grid.policies.empty() ||
      grid.seedings.empty() || grid.last_round_options.empty())
    throw ConfigError("sweep grid has an empty axis");
  std::set<int> editions;
  for (const Match& m : matches) editions.insert(m.edition);
  for (int end : grid.end_editions)
    if (!editions.count(end))
      throw ConfigError("end edition " + std::to_string(end) +
                        " is not in the dataset");
}

}  // namespace

SweepGrid SweepGrid::figures() {
  SweepGrid g;
  for (int y = 1994; y <= 2022; y += 4) g.end_editions.push_back(y);
  g.policies = {Policy::Round, Policy::Stage, Policy::FourYear};
  g.seedings = {SeedingScheme::S0(), SeedingScheme::S1(), SeedingScheme::S2()};
  g.last_round_options = {false};
  return g;
}

std::string SweepKey::label() const {
  return "(" + std::to_string(end_edition) + ", " +
         std::string(to_string(policy)) + ", " + seeding +
         ", last_round=" + (last_round ? "true" : "false") + ")";
}

AllocationResult run_scenario(std::span<const Match> matches,
                              const ScenarioConfig& cfg) {
  cfg.validate();
  const std::vector<Match> kept = apply_filters(matches, cfg);
  return allocate(run_policy(kept, cfg).final(), cfg);
}

SweepResult run_sweep(std::span<const Match> matches, const SweepGrid& grid,
                      const ScenarioConfig& base, unsigned threads) {
  check_grid(matches, grid);
  const std::vector<Point> points = expand(grid, base);
  std::vector<AllocationResult> results(points.size());
  std::vector<std::exception_ptr> errors(points.size());

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(points.size()));
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < points.size(); i = next++) {
      try {
        results[i] = run_scenario(matches, points[i].cfg);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  SweepResult out;
  for (size_t i = 0; i < points.size(); ++i) {
    if (errors[i]) {
      const std::string where = "grid point " + points[i].key.label() + ": ";
      try {
        std::rethrow_exception(errors[i]);
      } catch (const ConfigError& e) {
        throw ConfigError(where + e.what());
      } catch (const std::exception& e) {
        throw DataError(where + e.what());
      }
    }
    out.emplace(points[i].key, results[i]);
  }
  return out;
}

std::map<SweepKey, QuotaDelta> diff_sweeps(const SweepResult& a,
                                           const SweepResult& b) {
  auto reduce = [](const SweepResult& s, const char* side) {
    std::map<SweepKey, const AllocationResult*> out;
    for (const auto& [key, result] : s) {
      SweepKey k = key;
      k.last_round = false;
      if (!out.emplace(k, &result).second)
        throw ConfigError(std::string("sweep ") + side +
                          " has two rows for " + k.label());
    }
    return out;
  };
  const auto ra = reduce(a, "a");
  const auto rb = reduce(b, "b");
  if (ra.size() != rb.size())
    throw ConfigError("sweeps cover different grid keys");
  std::map<SweepKey, QuotaDelta> out;
  for (const auto& [key, left] : ra) {
    auto it = rb.find(key);
    if (it == rb.end())
      throw ConfigError("grid key " + key.label() + " missing from sweep b");
    const AllocationResult* right = it->second;
    QuotaDelta d;
    d.delta = right->quotas - left->quotas;
    for (int i = 0; i < kRatedCount; ++i) {
      d.omitted[i] = left->capped[i] || right->capped[i];
      if (d.omitted[i]) d.delta(i) = 0.0;
    }
    out.emplace(key, d);
  }
  return out;
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep) {
  out << "end_edition,policy,seeding,last_round,confed,quota,capped\n";
  for (const auto& [key, r] : sweep) {
    auto row = [&](std::string_view confed, double q, bool capped) {
      out << key.end_edition << ',' << to_string(key.policy) << ','
          << key.seeding << ',' << (key.last_round ? "true" : "false") << ','
          << confed << ',' << fixed6(q) << ',' << (capped ? "true" : "false")
          << '\n';
    };
    for (Confederation c : kRated) row(to_string(c), r.quota(c), r.is_capped(c));
    row(to_string(Confederation::OFC), r.ofc, false);
  }
}

void write_figure_series_csv(std::ostream& out, const SweepResult& sweep) {
  std::set<std::tuple<Policy, std::string, bool>> series;
  std::set<int> ends;
  for (const auto& [key, _] : sweep) {
    series.emplace(key.policy, key.seeding, key.last_round);
    ends.insert(key.end_edition);
  }
  out << "end_edition,confed";
  for (const auto& [p, s, last] : series)
    out << ',' << to_string(p) << '_' << s << (last ? "_lastround" : "");
  out << '\n';
  for (int end : ends) {
    for (Confederation c : kRated) {
      out << end << ',' << to_string(c);
      for (const auto& [p, s, last] : series) {
        auto it = sweep.find({end, p, s, last});
        out << ',';
        if (it != sweep.end()) out << fixed6(it->second.quota(c));
      }
      out << '\n';
    }
  }
}

void write_diff_csv(std::ostream& out,
                    const std::map<SweepKey, QuotaDelta>& diff) {
  out << "end_edition,policy,seeding,confed,delta\n";
  for (const auto& [key, d] : diff) {
    for (int i = 0; i < kRatedCount; ++i) {
      if (d.omitted[i]) continue;
      out << key.end_edition << ',' << to_string(key.policy) << ','
          << key.seeding << ',' << to_string(kRated[i]) << ','
          << fixed6(d.delta(i)) << '\n';
    }
  }
}

}  // namespace slotelo
