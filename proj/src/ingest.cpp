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

#include "slotelo/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

namespace slotelo {
namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

[[noreturn]] void fail(int row, std::string_view field,
                       const std::string& why) {
  std::ostringstream msg;
  msg << "row " << row << ": field '" << field << "': " << why;
  throw DataError(msg.str());
}

int to_int(std::string_view s, int row, std::string_view field) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    fail(row, field, "not an integer: '" + std::string(s) + "'");
  return v;
}

bool to_bool(std::string_view s, int row, std::string_view field) {
  if (s == "true") return true;
  if (s == "false") return false;
  fail(row, field, "expected true or false, got '" + std::string(s) + "'");
}

double to_result(std::string_view s, int row) {
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() ||
      (v != 0.0 && v != 0.5 && v != 0.75 && v != 1.0))
    fail(row, "w_a", "must be 0, 0.5, 0.75 or 1, got '" + std::string(s) + "'");
  return v;
}

Confederation to_confed(std::string_view s, int row, std::string_view field) {
  auto c = parse_confederation(s);
  if (!c) fail(row, field, "unknown confederation '" + std::string(s) + "'");
  return *c;
}

std::string_view result_text(double w) {
  if (w == 1.0) return "1";
  if (w == 0.75) return "0.75";
  if (w == 0.5) return "0.5";
  return "0";
}

bool is_excluded_playoff(const Match& m) {
  if (m.stage != Stage::PlayoffLeg) return false;
  auto involves = [&](std::string_view x, std::string_view y) {
    return (m.team_a == x && m.team_b == y) || (m.team_a == y && m.team_b == x);
  };
  return (m.edition == 1958 && involves("Israel", "Wales")) ||
         (m.edition == 1974 && involves("Soviet Union", "Chile"));
}

std::optional<std::string> check_side(const std::string& team,
                                      Confederation c, int edition,
                                      Stage stage, std::string_view field) {
  std::string f(field);
  if (team == "Australia") {
    auto want = edition <= 2006 ? Confederation::OFC : Confederation::AFC;
    if (c != want)
      return f + ": Australia belongs to " + std::string(to_string(want)) +
             " in " + std::to_string(edition);
  }
  if (team == "Israel" && edition == 1990 && stage == Stage::PlayoffLeg &&
      c != Confederation::OFC)
    return f + ": Israel played the 1990 play-off as OFC";
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_match(const Match& m) {
  if (m.edition < 1954 || m.edition > 2022 || (m.edition - 1954) % 4 != 0)
    return "edition: not a World Cup year in 1954-2022";
  if (m.date_order < 1) return "date_order: must be positive";
  if (m.round_index < 1) return "round_index: must be positive";
  if (m.team_a.empty()) return "team_a: empty";
  if (m.team_b.empty()) return "team_b: empty";
  if (m.team_a == m.team_b) return "team_b: same team on both sides";
  if (m.score_a < 0) return "score_a: negative";
  if (m.score_b < 0) return "score_b: negative";
  if (m.w_a != 0.0 && m.w_a != 0.5 && m.w_a != 0.75 && m.w_a != 1.0)
    return "w_a: must be 0, 0.5, 0.75 or 1";
  if (m.shootout) {
    if (m.w_a != 0.75 && m.w_a != 0.5)
      return "w_a: a shootout result must be 0.75 or 0.5";
    if (!is_knockout(m.stage) && m.stage != Stage::PlayoffLeg)
      return "shootout: only knockout matches and play-offs go to penalties";
    if (m.score_a != m.score_b) return "shootout: score is not level";
  } else {
    if (m.w_a == 0.75) return "w_a: 0.75 requires a shootout";
    int sign = (m.score_a > m.score_b) - (m.score_a < m.score_b);
    double expect = sign > 0 ? 1.0 : sign < 0 ? 0.0 : 0.5;
    if (m.w_a != expect) return "w_a: disagrees with the score";
  }
  if (m.last_group_round && m.stage != Stage::Group1)
    return "last_group_round: only first group stage rounds are flagged";
  if (m.stage == Stage::Group2 && m.edition != 1974 && m.edition != 1978 &&
      m.edition != 1982)
    return "stage: no second group stage in " + std::to_string(m.edition);
  if (auto e = check_side(m.team_a, m.confed_a, m.edition, m.stage, "confed_a"))
    return e;
  if (auto e = check_side(m.team_b, m.confed_b, m.edition, m.stage, "confed_b"))
    return e;
  return std::nullopt;
}

std::vector<Match> parse_matches(std::istream& in) {
  std::vector<Match> out;
  std::string line;
  int row = 0;
  bool header_seen = false;
  std::set<std::pair<int, int>> keys;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!header_seen) {
      if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0)
        line.erase(0, 3);
      if (line != kCsvHeader)
        throw DataError("row 1: header does not match the expected columns");
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;
    auto f = split(line);
    if (f.size() != 13)
      fail(row, "row", "expected 13 fields, found " + std::to_string(f.size()));

    Match m;
    m.edition = to_int(f[0], row, "edition");
    m.date_order = to_int(f[1], row, "date_order");
    auto stage = parse_stage(f[2]);
    if (!stage) fail(row, "stage", "unknown stage '" + std::string(f[2]) + "'");
    m.stage = *stage;
    m.round_index = to_int(f[3], row, "round_index");
    m.team_a = std::string(f[4]);
    m.team_b = std::string(f[5]);
    m.confed_a = to_confed(f[6], row, "confed_a");
    m.confed_b = to_confed(f[7], row, "confed_b");
    m.score_a = to_int(f[8], row, "score_a");
    m.score_b = to_int(f[9], row, "score_b");
    m.w_a = to_result(f[10], row);
    m.shootout = to_bool(f[11], row, "shootout");
    m.last_group_round = to_bool(f[12], row, "last_group_round");

    if (auto err = check_match(m)) {
      auto colon = err->find(':');
      fail(row, err->substr(0, colon), err->substr(colon + 2));
    }
    if (!keys.emplace(m.edition, m.date_order).second)
      fail(row, "date_order",
           "duplicate (edition, date_order) = (" + std::to_string(m.edition) +
               ", " + std::to_string(m.date_order) + ")");
    out.push_back(std::move(m));
  }
  if (!header_seen) throw DataError("row 1: missing header");
  std::stable_sort(out.begin(), out.end(), [](const Match& a, const Match& b) {
    return std::tie(a.edition, a.date_order) < std::tie(b.edition, b.date_order);
  });
  return out;
}

std::vector<Match> load_matches(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("dataset not found: " + path);
  return parse_matches(in);
}

void write_match_row(std::ostream& out, const Match& m) {
  out << m.edition << ',' << m.date_order << ',' << to_string(m.stage) << ','
      << m.round_index << ',' << m.team_a << ',' << m.team_b << ','
      << to_string(m.confed_a) << ',' << to_string(m.confed_b) << ','
      << m.score_a << ',' << m.score_b << ',' << result_text(m.w_a) << ','
      << (m.shootout ? "true" : "false") << ','
      << (m.last_group_round ? "true" : "false") << '\n';
}

std::vector<Match> apply_filters(std::span<const Match> matches,
                                 const ScenarioConfig& cfg) {
  std::vector<Match> out;
  for (const Match& m : matches) {
    if (is_excluded_playoff(m))
      throw DataError("the " + std::to_string(m.edition) + " " + m.team_a +
                      "-" + m.team_b +
                      " play-off must not be part of the dataset");
    if (m.edition > cfg.end_edition) continue;
    if (m.confed_a == Confederation::OFC || m.confed_b == Confederation::OFC)
      continue;
    if (m.last_group_round && !cfg.include_last_group_round) continue;
    out.push_back(m);
  }
  return out;
}

std::array<Confederation, 2> pair_members(int pair) {
  int k = 0;
  for (int i = 0; i < kRatedCount; ++i)
    for (int j = i + 1; j < kRatedCount; ++j, ++k)
      if (k == pair) return {kRated[i], kRated[j]};
  throw std::out_of_range("pair index");
}

std::optional<int> pair_of(Confederation a, Confederation b) {
  if (a == b || a == Confederation::OFC || b == Confederation::OFC)
    return std::nullopt;
  int i = rated_index(a), j = rated_index(b);
  if (i > j) std::swap(i, j);
  // Position of (i, j) in the row-major upper triangle.
  return i * kRatedCount - i * (i + 1) / 2 + (j - i - 1);
}

std::string pair_label(int pair) {
  auto [a, b] = pair_members(pair);
  return std::string(short_name(a)) + "–" + std::string(short_name(b));
}

int EditionCounts::total() const {
  int t = playoff_single_legs + playoff_two_leg_ties;
  for (int c : pairs) t += c;
  return t;
}

int DatasetSummary::pair_total(int pair) const {
  int t = 0;
  for (const auto& [_, e] : editions) t += e.pairs[pair];
  return t;
}

int DatasetSummary::inventory_total() const {
  int t = 0;
  for (const auto& [_, e] : editions) t += e.total();
  return t;
}

int DatasetSummary::total_draws() const {
  return draws.triangularView<Eigen::Upper>().toDenseMatrix().sum();
}

DatasetSummary tabulate(std::span<const Match> matches,
                        const SeedingScheme& seeding) {
  DatasetSummary s;
  std::map<std::tuple<int, std::string, std::string>, int> legs;
  auto side = [&](const std::string& team, Confederation c) {
    return seeding.contains(team) ? Entity::Seeded : *to_entity(c);
  };
  for (const Match& m : matches) {
    if (m.confed_a == Confederation::OFC || m.confed_b == Confederation::OFC)
      continue;
    ++s.matches;
    if (m.stage == Stage::PlayoffLeg) {
      auto [x, y] = std::minmax(m.team_a, m.team_b);
      ++legs[{m.edition, x, y}];
    } else if (auto p = pair_of(m.confed_a, m.confed_b)) {
      ++s.editions[m.edition].pairs[*p];
    }
    int a = index(side(m.team_a, m.confed_a));
    int b = index(side(m.team_b, m.confed_b));
    if (m.w_a > m.w_b()) {
      ++s.wins(a, b);
    } else if (m.w_a < m.w_b()) {
      ++s.wins(b, a);
    } else {
      ++s.draws(a, b);
      if (a != b) ++s.draws(b, a);
    }
  }
  for (const auto& [key, n] : legs) {
    auto& e = s.editions[std::get<0>(key)];
    if (n == 1)
      ++e.playoff_single_legs;
    else
      ++e.playoff_two_leg_ties;
  }
  return s;
}

int Reconciliation::max_abs_diff() const {
  int worst = 0;
  for (const auto& c : cells) worst = std::max(worst, std::abs(c.diff()));
  return worst;
}

std::vector<CellCheck> Reconciliation::discrepancies() const {
  std::vector<CellCheck> out;
  std::copy_if(cells.begin(), cells.end(), std::back_inserter(out),
               [](const CellCheck& c) { return c.diff() != 0; });
  return out;
}

Reconciliation reconcile(std::span<const Match> baseline) {
  Reconciliation r;
  const auto& years = published_editions();
  const auto& inventory = published_inventory();
  DatasetSummary base = tabulate(baseline, SeedingScheme::S0());

  const std::string inv = "pairs";
  std::vector<int> column(years.size(), 0);
  int grand = 0;
  for (size_t row = 0; row < inventory.size(); ++row) {
    std::string label = row < kPairCount ? pair_label(static_cast<int>(row))
                        : row == kPairCount ? "Playoffs (1 leg)"
                                            : "Playoffs (2 legs)";
    int row_total = 0, row_expected = 0;
    for (size_t c = 0; c < years.size(); ++c) {
      int actual = 0;
      if (auto it = base.editions.find(years[c]); it != base.editions.end()) {
        const auto& e = it->second;
        actual = row < kPairCount    ? e.pairs[row]
                 : row == kPairCount ? e.playoff_single_legs
                                     : e.playoff_two_leg_ties;
      }
      int expected = inventory[row][c];
      r.cells.push_back(
          {inv, label + " " + std::to_string(years[c]), expected, actual});
      row_total += actual;
      row_expected += expected;
      column[c] += expected;
    }
    r.cells.push_back({inv, label + " total", row_expected, row_total});
    grand += row_expected;
  }
  for (size_t c = 0; c < years.size(); ++c) {
    int actual = 0;
    if (auto it = base.editions.find(years[c]); it != base.editions.end())
      actual = it->second.total();
    r.cells.push_back(
        {inv, "total " + std::to_string(years[c]), column[c], actual});
  }
  r.cells.push_back({inv, "grand total", grand, base.inventory_total()});

  for (const char* name : {"S0", "S1", "S2"}) {
    const auto& pub = published_tallies(name);
    auto seeding = *SeedingScheme::named(name);
    DatasetSummary s = tabulate(baseline, seeding);
    const int n = seeding.empty() ? kRatedCount : kEntityCount;
    const std::string table = std::string("results ") + name;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        std::string cell = std::string(to_string(kEntities[i])) + " v " +
                           std::string(to_string(kEntities[j]));
        r.cells.push_back({table, cell + " wins", pub.wins(i, j), s.wins(i, j)});
        r.cells.push_back(
            {table, cell + " draws", pub.draws(i, j), s.draws(i, j)});
      }
    }
    r.cells.push_back({table, "total wins", 568, s.total_wins()});
    r.cells.push_back({table, "total draws", 129, s.total_draws()});
  }
  return r;
}

}  // namespace slotelo
