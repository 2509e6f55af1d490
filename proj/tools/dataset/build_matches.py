#!/usr/bin/env python3
# Copyright 2026 The slotelo Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Builds data/matches.csv from the curated data/worldcup_source.txt."""

import argparse
import csv
import re
import sys
from pathlib import Path

CONFEDERATION = {
    "AFC": ["China", "Iran", "Iraq", "Israel", "Japan", "Jordan", "Kuwait",
            "North Korea", "Qatar", "Saudi Arabia", "South Korea", "Bahrain",
            "United Arab Emirates", "Australia"],
    "CAF": ["Algeria", "Angola", "Cameroon", "Egypt", "Ethiopia", "Ghana",
            "Ivory Coast", "Morocco", "Nigeria", "Senegal", "South Africa",
            "Togo", "Tunisia", "Zaire"],
    "CONCACAF": ["Canada", "Costa Rica", "El Salvador", "Haiti", "Honduras",
                 "Jamaica", "Mexico", "Panama", "Trinidad and Tobago",
                 "United States"],
    "CONMEBOL": ["Argentina", "Bolivia", "Brazil", "Chile", "Colombia",
                 "Ecuador", "Paraguay", "Peru", "Uruguay"],
    "OFC": ["New Zealand"],
    "UEFA": ["Austria", "Belgium", "Bosnia and Herzegovina", "Bulgaria",
             "Croatia", "Cyprus", "Czech Republic", "Czechoslovakia",
             "Denmark", "East Germany", "England", "France", "Germany",
             "Greece", "Hungary", "Iceland", "Italy", "Netherlands",
             "Northern Ireland", "Norway", "Poland", "Portugal",
             "Republic of Ireland", "Romania", "Russia", "Scotland", "Serbia",
             "Serbia and Montenegro", "Slovakia", "Slovenia", "Soviet Union",
             "Spain", "Sweden", "Switzerland", "Turkey", "Ukraine", "Wales", "West Germany",
             "Yugoslavia"],
}
TEAM_CONFED = {t: c for c, teams in CONFEDERATION.items() for t in teams}

STAGE_CODE = {"PO": "PLAYOFF", "G1": "GROUP1", "G2": "GROUP2", "R16": "R16",
              "QF": "QF", "SF": "SF", "TP": "TP", "F": "F"}
STAGE_RANK = {"PO": 0, "G1": 1, "G2": 2, "R16": 3, "QF": 4, "SF": 5, "TP": 6,
              "F": 7}

LINE = re.compile(
    r"^(?P<stage>PO|G1|G2|R16|QF|SF|TP|F)(?: (?P<round>\d+))?: "
    r"(?P<a>.+?) (?P<ga>\d+)-(?P<gb>\d+)(?: \((?P<pa>\d+)-(?P<pb>\d+)p\))? "
    r"(?P<b>.+)$")


def confederation_at(team, edition):
    # Australia played in the Oceanian zone through 2006; Israel won the 1990
    # Oceanian qualification.
    if team == "Australia" and edition <= 2006:
        return "OFC"
    if team == "Israel" and edition == 1990:
        return "OFC"
    try:
        return TEAM_CONFED[team]
    except KeyError:
        sys.exit(f"unknown team: {team}")


def parse(source):
    edition = None
    rows = []
    for lineno, raw in enumerate(source.read_text().splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("@"):
            edition = int(line[1:])
            continue
        m = LINE.match(line)
        if not m or edition is None:
            sys.exit(f"{source}:{lineno}: cannot parse '{line}'")
        rows.append((edition, lineno, m))
    return rows


def build(rows):
    out = []
    for edition in sorted({r[0] for r in rows}):
        matches = [r for r in rows if r[0] == edition]
        # Canonical order: play-offs, group matchdays across all groups, then
        # knockout rounds; source order breaks ties.
        matches.sort(key=lambda r: (STAGE_RANK[r[2]["stage"]],
                                    int(r[2]["round"] or 1), r[1]))
        for order, (_, lineno, m) in enumerate(matches, 1):
            stage = m["stage"]
            round_index = int(m["round"] or 1)
            ga, gb = int(m["ga"]), int(m["gb"])
            shootout = m["pa"] is not None
            if shootout:
                if ga != gb:
                    sys.exit(f"line {lineno}: shootout after a decided match")
                w_a = "0.75" if int(m["pa"]) > int(m["pb"]) else "0.5"
            else:
                w_a = "1" if ga > gb else ("0" if ga < gb else "0.5")
            # 1954 groups had only two matchdays; the third entry is the
            # tie-break play-off, not a final matchday.
            last_round = stage == "G1" and round_index == 3 and edition != 1954
            out.append({
                "edition": edition,
                "date_order": order,
                "stage": STAGE_CODE[stage],
                "round_index": round_index,
                "team_a": m["a"],
                "team_b": m["b"],
                "confed_a": confederation_at(m["a"], edition),
                "confed_b": confederation_at(m["b"], edition),
                "score_a": ga,
                "score_b": gb,
                "w_a": w_a,
                "shootout": "true" if shootout else "false",
                "last_group_round": "true" if last_round else "false",
            })
    return out


def main():
    root = Path(__file__).resolve().parents[2]
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--source", type=Path,
                    default=root / "data" / "worldcup_source.txt")
    ap.add_argument("--out", type=Path, default=root / "data" / "matches.csv")
    args = ap.parse_args()

    rows = build(parse(args.source))
    with args.out.open("w", newline="") as f:
        w = csv.DictWriter(f, fieldnames=list(rows[0].keys()),
                           lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    print(f"wrote {len(rows)} matches to {args.out}")


if __name__ == "__main__":
    main()
