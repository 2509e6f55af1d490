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

#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "slotelo/allocator.hpp"
#include "slotelo/engine.hpp"
#include "slotelo/ingest.hpp"
#include "slotelo/scenario.hpp"

namespace slotelo::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::string pad(std::string s, size_t width) {
  // Labels may hold a multi-byte dash; pad by code points.
  size_t glyphs = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++glyphs;
  if (glyphs < width) s.append(width - glyphs, ' ');
  return s;
}

std::string rpad(const std::string& s, size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

Policy policy_or_throw(const std::string& s) {
  auto p = parse_policy(s);
  if (!p) throw ConfigError("unknown policy '" + s + "' (round|stage|4year)");
  return *p;
}

SeedingScheme seeding_or_throw(const std::string& s) {
  auto sc = SeedingScheme::named(s);
  if (!sc) throw ConfigError("unknown seeding '" + s + "' (s0|s1|s2)");
  return *sc;
}

Confederation confed_or_throw(const std::string& s) {
  auto c = parse_confederation(s);
  if (!c) throw ConfigError("unknown confederation '" + s + "'");
  return *c;
}

SeedingScheme seeding_from_json(const json& j) {
  if (j.is_string()) return seeding_or_throw(j.get<std::string>());
  if (!j.is_object() || !j.contains("countries"))
    throw ConfigError("seeding must be s0|s1|s2 or {name, countries}");
  std::vector<SeededCountry> countries;
  for (const json& c : j.at("countries")) {
    SeededCountry sc{c.at("name").get<std::string>(),
                     confed_or_throw(c.at("confed").get<std::string>()),
                     {}};
    if (c.contains("aliases"))
      sc.aliases = c.at("aliases").get<std::vector<std::string>>();
    countries.push_back(std::move(sc));
  }
  return SeedingScheme(j.value("name", "custom"), std::move(countries));
}

void write_file(const fs::path& path,
                const std::function<void(std::ostream&)>& body) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path.string());
  body(f);
  if (!f) throw ConfigError("failed writing " + path.string());
}

struct GridFlags {
  std::string ends;
  std::string policies = "round,stage,4year";
  std::string seedings = "s0,s1,s2";
  std::string last_round;
};

SweepGrid grid_from(const GridFlags& flags, const CliConfig& cfg,
                    bool default_figures) {
  SweepGrid g;
  if (flags.ends.empty()) {
    g.end_editions = default_figures ? SweepGrid::figures().end_editions
                                     : std::vector<int>{cfg.scenario.end_edition};
  } else {
    for (const auto& y : split_list(flags.ends)) {
      try {
        g.end_editions.push_back(std::stoi(y));
      } catch (const std::exception&) {
        throw ConfigError("bad end edition '" + y + "'");
      }
    }
  }
  for (const auto& p : split_list(flags.policies))
    g.policies.push_back(policy_or_throw(p));
  for (const auto& s : split_list(flags.seedings))
    g.seedings.push_back(seeding_or_throw(s));
  if (flags.last_round.empty() || flags.last_round == "default")
    g.last_round_options = {cfg.scenario.include_last_group_round};
  else if (flags.last_round == "exclude")
    g.last_round_options = {false};
  else if (flags.last_round == "include")
    g.last_round_options = {true};
  else if (flags.last_round == "both")
    g.last_round_options = {false, true};
  if (g.end_editions.empty() || g.policies.empty() || g.seedings.empty() ||
      g.last_round_options.empty())
    throw ConfigError("sweep grid has an empty axis");
  return g;
}

void print_state(std::ostream& out, const RatingState& s) {
  for (Entity e : s.active())
    out << "  " << pad(std::string(to_string(e)), 9) << fmt("%.2f", s[e])
        << '\n';
}

void print_allocation(std::ostream& out, const AllocationResult& r) {
  for (Confederation c : kRated)
    out << "  " << pad(std::string(to_string(c)), 9)
        << rpad(fmt("%.2f", r.quota(c)), 6) << (r.is_capped(c) ? "  capped" : "")
        << '\n';
  out << "  " << pad("OFC", 9) << rpad(fmt("%.2f", r.ofc), 6) << '\n';
  out << "  " << pad("total", 9) << rpad(fmt("%.2f", r.total()), 6) << '\n';
}

void print_inventory(std::ostream& out, const DatasetSummary& s) {
  out << pad("pair", 18);
  for (const auto& [year, _] : s.editions) {
    char yy[8];
    std::snprintf(yy, sizeof yy, "%02d", year % 100);
    out << rpad(yy, 4);
  }
  out << "   sum\n";
  auto row = [&](const std::string& label, auto cell) {
    out << pad(label, 18);
    int total = 0;
    for (const auto& [_, e] : s.editions) {
      int v = cell(e);
      total += v;
      out << rpad(std::to_string(v), 4);
    }
    out << rpad(std::to_string(total), 6) << '\n';
  };
  for (int p = 0; p < kPairCount; ++p)
    row(pair_label(p), [p](const EditionCounts& e) { return e.pairs[p]; });
  row("Playoffs (1 leg)",
      [](const EditionCounts& e) { return e.playoff_single_legs; });
  row("Playoffs (2 legs)",
      [](const EditionCounts& e) { return e.playoff_two_leg_ties; });
  row("sum", [](const EditionCounts& e) { return e.total(); });
}

void print_tallies(std::ostream& out, const DatasetSummary& s, bool seeded) {
  const int n = seeded ? kEntityCount : kRatedCount;
  out << pad("", 10);
  for (int j = 0; j < n; ++j)
    out << rpad(std::string(to_string(kEntities[j])), 10);
  out << '\n';
  for (int i = 0; i < n; ++i) {
    out << pad(std::string(to_string(kEntities[i])), 10);
    for (int j = 0; j < n; ++j)
      out << rpad(std::to_string(s.wins(i, j)) + " (" +
                      std::to_string(s.draws(i, j)) + ")",
                  10);
    out << '\n';
  }
  out << "total " << s.total_wins() << " (" << s.total_draws() << ")\n";
}

int cmd_validate(const CliConfig& cfg, std::ostream& out) {
  const auto all = load_matches(cfg.dataset);
  ScenarioConfig base;
  base.end_edition = 2022;
  const auto kept = apply_filters(all, base);
  const DatasetSummary s0 = tabulate(kept, SeedingScheme::S0());

  out << "# Dataset validation\n\n";
  out << "rows parsed: " << all.size() << "\n";
  out << "after baseline filtering: " << kept.size()
      << " matches (OFC and last group round removed)\n";
  out << "inter-confederation inventory (play-off ties counted once): "
      << s0.inventory_total() << "\n\n";

  out << "## Matches by pair of confederations\n\n```\n";
  print_inventory(out, s0);
  out << "```\n\n## Results by pair\n\n";
  for (const char* name : {"S0", "S1", "S2"}) {
    out << "### " << name << "\n\n```\n";
    print_tallies(out, tabulate(kept, *SeedingScheme::named(name)),
                  std::string(name) != "S0");
    out << "```\n\n";
  }

  const Reconciliation rec = reconcile(kept);
  out << "## Reconciliation with the published counts\n\n```\n";
  for (const auto& c : rec.cells) {
    bool headline = c.table == "pairs"
                        ? (c.cell.ends_with(" total") || c.cell == "grand total")
                        : c.cell.starts_with("total");
    if (!headline) continue;
    std::string label = c.table == "pairs" ? c.cell : c.table + " " + c.cell;
    if (c.table == "pairs" && c.cell != "grand total" &&
        c.cell.ends_with(" total"))
      label = c.cell.substr(0, c.cell.size() - 6);
    out << label << ' ' << c.actual << " (published " << c.expected << ")"
        << (c.diff() == 0 ? "" : "  differs") << '\n';
  }
  out << "```\n\n## Discrepancies\n\n";
  const auto diffs = rec.discrepancies();
  if (diffs.empty()) out << "none\n";
  for (const auto& c : diffs)
    out << "- " << c.table << ", " << c.cell << ": dataset " << c.actual
        << ", published " << c.expected << " (" << (c.diff() > 0 ? "+" : "")
        << c.diff() << ")\n";
  out << "\nlargest cell difference: " << rec.max_abs_diff()
      << (rec.max_abs_diff() <= 2 ? " (within 2)" : " (exceeds 2)") << '\n';
  return kOk;
}

int cmd_rate(const CliConfig& cfg, std::ostream& out) {
  const auto all = load_matches(cfg.dataset);
  const auto kept = apply_filters(all, cfg.scenario);
  const RatingTimeline t = run_policy(kept, cfg.scenario);
  const fs::path path = fs::path(cfg.out) / "timeline.csv";
  write_file(path, [&](std::ostream& f) { write_timeline_csv(f, t); });
  const RatingState& last = t.final();
  out << "policy " << to_string(cfg.scenario.policy) << ", seeding "
      << cfg.scenario.seeding.name() << ", end " << cfg.scenario.end_edition
      << ": " << t.batches() << " batches over " << kept.size()
      << " matches\n";
  out << "ratings after " << last.edition << ' ' << last.batch_key << ":\n";
  print_state(out, last);
  out << "wrote " << path.string() << '\n';
  return kOk;
}

int cmd_allocate(const CliConfig& cfg, std::ostream& out) {
  const auto all = load_matches(cfg.dataset);
  const AllocationResult r = run_scenario(all, cfg.scenario);
  const fs::path path = fs::path(cfg.out) / "allocation.json";
  write_file(path, [&](std::ostream& f) { write_allocation_json(f, r); });
  out << "policy " << to_string(cfg.scenario.policy) << ", seeding "
      << cfg.scenario.seeding.name() << ", end " << cfg.scenario.end_edition
      << (cfg.scenario.include_last_group_round ? ", last round included" : "")
      << ":\n";
  print_allocation(out, r);
  out << "wrote " << path.string() << '\n';
  return kOk;
}

int cmd_sweep(const CliConfig& cfg, const GridFlags& flags, std::ostream& out) {
  const SweepGrid grid = grid_from(flags, cfg, true);
  const auto all = load_matches(cfg.dataset);
  const SweepResult sweep = run_sweep(all, grid, cfg.scenario);
  const fs::path dir(cfg.out);
  write_file(dir / "sweep.csv", [&](std::ostream& f) { write_sweep_csv(f, sweep); });
  write_file(dir / "figure_series.csv",
             [&](std::ostream& f) { write_figure_series_csv(f, sweep); });
  out << sweep.size() << " allocations\n";
  out << "wrote " << (dir / "sweep.csv").string() << " and "
      << (dir / "figure_series.csv").string() << '\n';
  return kOk;
}

int cmd_diff(const CliConfig& cfg, const GridFlags& flags, std::ostream& out) {
  SweepGrid grid = grid_from(flags, cfg, false);
  const auto all = load_matches(cfg.dataset);
  grid.last_round_options = {false};
  const SweepResult base = run_sweep(all, grid, cfg.scenario);
  grid.last_round_options = {true};
  const SweepResult with_last = run_sweep(all, grid, cfg.scenario);
  const auto diff = diff_sweeps(base, with_last);
  const fs::path path = fs::path(cfg.out) / "diff.csv";
  write_file(path, [&](std::ostream& f) { write_diff_csv(f, diff); });

  out << "quota change from including the last group round\n";
  out << pad("", 22);
  for (Confederation c : kRated) out << rpad(std::string(short_name(c)), 8);
  out << '\n';
  for (const auto& [key, d] : diff) {
    out << pad(std::to_string(key.end_edition) + " " +
                   std::string(to_string(key.policy)) + " " + key.seeding,
               22);
    for (int i = 0; i < kRatedCount; ++i)
      out << rpad(d.omitted[i] ? "-" : fmt("%.2f", d.delta(i)), 8);
    out << '\n';
  }
  out << "wrote " << path.string() << '\n';
  return kOk;
}

}  // namespace

void merge_json(CliConfig& cfg, const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  ScenarioConfig& s = cfg.scenario;
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "policy") {
        s.policy = policy_or_throw(v.get<std::string>());
      } else if (key == "seeding") {
        s.seeding = seeding_from_json(v);
      } else if (key == "end_edition") {
        s.end_edition = v.get<int>();
      } else if (key == "include_last_group_round") {
        s.include_last_group_round = v.get<bool>();
      } else if (key == "total_slots") {
        s.total_slots = v.get<double>();
      } else if (key == "ofc_quota") {
        s.ofc_quota = v.get<double>();
      } else if (key == "caps") {
        s.caps.clear();
        for (const auto& [c, cap] : v.items())
          s.caps[confed_or_throw(c)] = cap.get<double>();
      } else if (key == "initial_rating") {
        s.initial_rating = v.get<double>();
      } else if (key == "redistribute_cap_excess") {
        s.redistribute_cap_excess = v.get<bool>();
      } else if (key == "count_intra_entity") {
        s.count_intra_entity = v.get<bool>();
      } else if (key == "dataset") {
        cfg.dataset = v.get<std::string>();
      } else if (key == "out") {
        cfg.out = v.get<std::string>();
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

CliConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config not found: " + path);
  CliConfig cfg;
  try {
    merge_json(cfg, json::parse(in));
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return cfg;
}

nlohmann::ordered_json to_json(const CliConfig& cfg) {
  const ScenarioConfig& s = cfg.scenario;
  nlohmann::ordered_json j;
  j["policy"] = std::string(to_string(s.policy));
  const std::string name = s.seeding.name();
  if (SeedingScheme::named(name)) {
    j["seeding"] = name;
  } else {
    nlohmann::ordered_json countries = nlohmann::ordered_json::array();
    for (const auto& c : s.seeding.countries())
      countries.push_back({{"name", c.name},
                           {"confed", std::string(to_string(c.confed))},
                           {"aliases", c.aliases}});
    j["seeding"] = {{"name", name}, {"countries", countries}};
  }
  j["end_edition"] = s.end_edition;
  j["include_last_group_round"] = s.include_last_group_round;
  j["total_slots"] = s.total_slots;
  j["ofc_quota"] = s.ofc_quota;
  j["caps"] = nlohmann::ordered_json::object();
  for (const auto& [c, cap] : s.caps) j["caps"][std::string(to_string(c))] = cap;
  j["initial_rating"] = s.initial_rating;
  j["redistribute_cap_excess"] = s.redistribute_cap_excess;
  j["count_intra_entity"] = s.count_intra_entity;
  j["dataset"] = cfg.dataset;
  j["out"] = cfg.out;
  return j;
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Confederation Elo ratings and World Cup slot allocation",
               "slotelo"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string dataset, config, policy, seeding, out_dir;
  int end = 0;
  bool last_round = false, no_redistribute = false, intra = false;
  auto* o_dataset = app.add_option("--dataset", dataset, "match CSV");
  app.add_option("--config", config, "JSON config file");
  auto* o_policy = app.add_option("--policy", policy, "round|stage|4year");
  auto* o_seeding = app.add_option("--seeding", seeding, "s0|s1|s2");
  auto* o_end = app.add_option("--end", end, "last edition in the sample");
  auto* o_last = app.add_flag("--include-last-round", last_round,
                              "keep last group round matches");
  auto* o_nored = app.add_flag("--no-redistribute-cap-excess", no_redistribute,
                               "drop slots cut by a cap");
  auto* o_intra = app.add_flag("--count-intra-entity", intra,
                               "rate matches within one confederation");
  auto* o_out = app.add_option("--out", out_dir, "output directory");

  GridFlags grid;
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--ends", grid.ends, "comma-separated end editions");
    sub->add_option("--policies", grid.policies, "comma-separated policies");
    sub->add_option("--seedings", grid.seedings, "comma-separated seedings");
  };
  auto* validate = app.add_subcommand("validate", "check the dataset");
  auto* rate = app.add_subcommand("rate", "rating timeline");
  auto* allocate = app.add_subcommand("allocate", "slot allocation");
  auto* sweep = app.add_subcommand("sweep", "scenario grid");
  auto* diff = app.add_subcommand("diff", "effect of the last group round");
  add_grid(sweep);
  add_grid(diff);
  sweep->add_option("--last-round", grid.last_round, "exclude|include|both")
      ->check(CLI::IsMember({"default", "exclude", "include", "both"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kUsageError;
  }

  try {
    CliConfig cfg = config.empty() ? CliConfig{} : load_config(config);
    if (o_dataset->count()) cfg.dataset = dataset;
    if (o_policy->count()) cfg.scenario.policy = policy_or_throw(policy);
    if (o_seeding->count()) cfg.scenario.seeding = seeding_or_throw(seeding);
    if (o_end->count()) cfg.scenario.end_edition = end;
    if (o_last->count()) cfg.scenario.include_last_group_round = true;
    if (o_nored->count()) cfg.scenario.redistribute_cap_excess = false;
    if (o_intra->count()) cfg.scenario.count_intra_entity = true;
    if (o_out->count()) cfg.out = out_dir;
    cfg.scenario.validate();

    if (validate->parsed()) return cmd_validate(cfg, out);
    if (rate->parsed()) return cmd_rate(cfg, out);
    if (allocate->parsed()) return cmd_allocate(cfg, out);
    if (sweep->parsed()) return cmd_sweep(cfg, grid, out);
    if (diff->parsed()) return cmd_diff(cfg, grid, out);
    return kUsageError;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
}

}  // namespace slotelo::cli
