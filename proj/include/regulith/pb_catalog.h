// Copyright 2026 The Regulith Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REGULITH_PB_CATALOG_H_
#define REGULITH_PB_CATALOG_H_

// The 12-run Plackett-Burman design, its 5-column projections, and the
// catalog of 12-run strength-2 orthogonal arrays in five two-level factors
// built as unions of three disjoint 4-run regular fractions.

#include <array>
#include <string>
#include <vector>

#include "regulith/polynomial.h"
#include "regulith/regular_spec.h"

namespace regulith {

inline constexpr int kPbRuns = 12;
inline constexpr int kPbColumns = 11;

// Rows of the design over 11 factors (columns A..K), in construction order.
struct PBDesign {
  std::array<Point, kPbRuns> rows;
};

// Row 1 is the key ++-+++---+-, rows 2..11 shift it one position to the
// right each time, row 12 is all minus.
PBDesign BuildPb12();

// Column labels 'A'..'K' map to 0..10. Throws std::invalid_argument for
// anything else.
int PbColumnIndex(char label);
std::vector<int> ParsePbColumns(const std::string& labels);  // "A,B,F,H,I"
std::string PbColumnLabels(const std::vector<int>& columns);

// Runs of the design restricted to the given distinct 0-based columns, as a
// multiset over m = columns.size() factors; factor j is columns[j].
Fraction Project(const PBDesign& design, const std::vector<int>& columns);

// Projections onto 5 columns grouped by equality of their run multisets.
struct ProjectionClass {
  int class_id;  // 1-based, in order of first appearance
  int member_count;
  int distinct_run_count;
  std::vector<std::vector<int>> members;  // column sets, lexicographic
  Fraction design;
};

// All C(11,5) = 462 projections, column sets visited lexicographically.
std::vector<ProjectionClass> ClassifyProjections(const PBDesign& design);

// alpha_1..alpha_6 over five factors. R1 is generated by alpha_1, alpha_2,
// alpha_4; R2 by alpha_1, alpha_3, alpha_5; R3 by alpha_2, alpha_3,
// alpha_6. alpha_1..alpha_3 have weight below three, while every other
// element of the three generated subgroups has weight three or more.
struct AlphaPattern {
  std::array<Mask, 6> alphas;

  friend bool operator==(const AlphaPattern&, const AlphaPattern&) = default;
  friend auto operator<=>(const AlphaPattern&, const AlphaPattern&) = default;
};

// Every pattern meeting the weight rule, up to relabelling the roles of
// alpha_1..alpha_3 and re-choosing alpha_4..alpha_6 inside their cosets:
// alpha_1 is the weight-one index, alpha_2 holds the smaller lowest factor
// of the two pairs, and each of alpha_4..alpha_6 is the smallest mask in
// its coset. Sorted by (alpha_1, lowest factor of alpha_2).
std::vector<AlphaPattern> AlphaPatterns();

// The three regular parts for one pattern and sign vector e_1..e_6:
// R1 = (alpha_1, alpha_2, alpha_4 ; e1, e2, e4),
// R2 = (alpha_1, alpha_3, alpha_5 ; -e1, e3, e5),
// R3 = (alpha_2, alpha_3, alpha_6 ; -e2, -e3, e6).
std::array<RegularSpec, 3> CatalogParts(const AlphaPattern& pattern,
                                        const std::array<int, 6>& signs);

struct CatalogEntry {
  CountingPolynomial indicator;
  int pattern_index;          // 0-based index into AlphaPatterns()
  std::array<int, 6> signs;   // first sign vector that produced it
  std::array<RegularSpec, 3> parts;
};

// Sweeps every pattern and all 64 sign vectors (vector s has e_{j+1} = -1
// when bit j of s is set), keeps the sums R1 + R2 + R3 that are 12-run
// indicators, and drops repeats. Entries are in order of first appearance.
std::vector<CatalogEntry> BuildStrength2Catalog();

// Indicators of BuildStrength2Catalog().
std::vector<CountingPolynomial> GenerateStrength2Catalog();

}  // namespace regulith

#endif  // REGULITH_PB_CATALOG_H_
