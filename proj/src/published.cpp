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

// Published reference counts, used by `validate`.

#include "slotelo/ingest.hpp"

namespace slotelo {
namespace {

PublishedTallies make(std::initializer_list<std::initializer_list<int>> wins,
                      std::initializer_list<std::initializer_list<int>> draws) {
  PublishedTallies t{CountMatrix::Zero(), CountMatrix::Zero()};
  int i = 0;
  for (const auto& row : wins) {
    int j = 0;
    for (int v : row) t.wins(i, j++) = v;
    ++i;
  }
  i = 0;
  for (const auto& row : draws) {
    int j = 0;
    for (int v : row) t.draws(i, j++) = v;
    ++i;
  }
  return t;
}

}  // namespace

const std::vector<int>& published_editions() {
  static const std::vector<int> years = {1954, 1958, 1962, 1966, 1970, 1974,
                                         1978, 1982, 1986, 1990, 1994, 1998,
                                         2002, 2006, 2010, 2014, 2018, 2022};
  return years;
}

const std::vector<std::array<int, 18>>& published_inventory() {
  static const std::vector<std::array<int, 18>> rows = {
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 2, 2, 3, 2, 3},        // AFC-CAF
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 1, 0, 0, 1, 1},        // AFC-CONC
      {0, 0, 0, 1, 1, 0, 0, 0, 2, 1, 1, 1, 1, 0, 4, 2, 2, 5},        // AFC-CONM
      {2, 0, 0, 2, 1, 0, 2, 2, 2, 3, 3, 5, 9, 4, 4, 3, 6, 6},        // AFC-UEFA
      {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 2, 2, 0, 0},        // CAF-CONC
      {0, 0, 0, 0, 1, 0, 0, 1, 1, 2, 2, 2, 2, 2, 4, 1, 1, 0},        // CAF-CONM
      {0, 0, 0, 0, 1, 2, 1, 3, 4, 4, 4, 9, 9, 6, 6, 6, 7, 12},       // CAF-UEFA
      {1, 0, 1, 0, 0, 0, 0, 0, 1, 1, 2, 1, 1, 2, 2, 3, 2, 1},        // CONC-CONM
      {1, 2, 1, 2, 3, 2, 1, 4, 5, 4, 4, 4, 4, 5, 4, 7, 4, 7},        // CONC-UEFA
      {7, 9, 11, 9, 7, 13, 11, 9, 10, 9, 8, 12, 11, 8, 9, 12, 11, 8},  // CONM-UEFA
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},        // 1 leg
      {0, 0, 6, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 0},        // 2 legs
  };
  return rows;
}

const PublishedTallies& published_tallies(const std::string& seeding) {
  // Rows and columns: AFC, CAF, CONCACAF, CONMEBOL, UEFA, SEEDED.
  static const PublishedTallies s0 = make(
      {{0, 6, 2, 3, 9},
       {5, 0, 2, 2, 16},
       {6, 2, 2, 4, 10},
       {17, 15, 14, 15, 77},
       {41, 41, 38, 68, 173}},
      {{0, 5, 3, 4, 12},
       {5, 0, 2, 2, 19},
       {3, 2, 0, 4, 16},
       {4, 2, 4, 1, 31},
       {12, 19, 16, 31, 30}});
  static const PublishedTallies s1 = make(
      {{0, 6, 2, 2, 8, 2},
       {5, 0, 2, 1, 15, 2},
       {6, 2, 2, 4, 9, 1},
       {9, 6, 4, 2, 18, 2},
       {36, 34, 29, 28, 110, 42},
       {13, 16, 19, 21, 86, 24}},
      {{0, 5, 3, 4, 12, 0},
       {5, 0, 2, 2, 16, 3},
       {3, 2, 0, 3, 14, 3},
       {4, 2, 3, 0, 14, 3},
       {12, 16, 14, 14, 14, 26},
       {0, 3, 3, 3, 26, 5}});
  static const PublishedTallies s2 = make(
      {{0, 6, 2, 2, 6, 4},
       {5, 0, 1, 1, 12, 6},
       {3, 1, 0, 2, 3, 2},
       {9, 6, 4, 2, 15, 5},
       {28, 25, 16, 19, 56, 49},
       {24, 26, 16, 32, 107, 73}},
      {{0, 5, 3, 4, 10, 2},
       {5, 0, 0, 2, 16, 5},
       {3, 0, 0, 1, 7, 4},
       {4, 2, 1, 0, 6, 13},
       {10, 16, 7, 6, 9, 27},
       {2, 5, 4, 13, 27, 15}});
  if (seeding == "S0") return s0;
  if (seeding == "S1") return s1;
  if (seeding == "S2") return s2;
  throw std::out_of_range("no published tallies for seeding " + seeding);
}

}  // namespace slotelo
