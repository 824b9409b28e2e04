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

#include "regulith/pb_catalog.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "regulith/regular.h"

namespace regulith {

namespace {

constexpr char kPbKey[] = "++-+++---+-";
constexpr int kPatternFactors = 5;

PBDesign MakeDesign() {
  std::array<int, kPbColumns> key{};
  for (int j = 0; j < kPbColumns; ++j) key[j] = kPbKey[j] == '+' ? 1 : -1;
  auto row = [&](int shift) {
    std::array<int, kPbColumns> levels{};
    for (int j = 0; j < kPbColumns; ++j) {
      levels[j] = key[(j - shift + kPbColumns) % kPbColumns];
    }
    return Point::FromLevels(std::span<const int>(levels));
  };
  return PBDesign{{row(0), row(1), row(2), row(3), row(4), row(5), row(6),
                   row(7), row(8), row(9), row(10),
                   Point(kPbColumns, FullMask(kPbColumns))}};
}

Mask LowestBit(Mask x) { return x & -x; }

// Smallest mask in x + <a, b>.
Mask CosetMin(Mask x, Mask a, Mask b) {
  return std::min({x, x ^ a, x ^ b, x ^ a ^ b});
}

// Every element of x + <a, b> has weight >= 3.
bool HeavyCoset(Mask x, Mask a, Mask b) {
  for (Mask y : {x, x ^ a, x ^ b, x ^ a ^ b}) {
    if (std::popcount(y) < 3) return false;
  }
  return true;
}

}  // namespace

PBDesign BuildPb12() {
  static const PBDesign design = MakeDesign();
  return design;
}

int PbColumnIndex(char label) {
  if (label >= 'A' && label < 'A' + kPbColumns) return label - 'A';
  if (label >= 'a' && label < 'a' + kPbColumns) return label - 'a';
  throw std::invalid_argument(std::string("unknown column label '") + label +
                              "'");
}

std::vector<int> ParsePbColumns(const std::string& labels) {
  std::vector<int> out;
  std::istringstream in(labels);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    piece.erase(std::remove_if(piece.begin(), piece.end(),
                               [](unsigned char c) { return std::isspace(c); }),
                piece.end());
    if (piece.size() != 1) {
      throw std::invalid_argument("unknown column label '" + piece + "'");
    }
    out.push_back(PbColumnIndex(piece[0]));
  }
  return out;
}

std::string PbColumnLabels(const std::vector<int>& columns) {
  std::string out;
  for (int c : columns) {
    if (!out.empty()) out += ',';
    out += static_cast<char>('A' + c);
  }
  return out;
}

Fraction Project(const PBDesign& design, const std::vector<int>& columns) {
  const int m = static_cast<int>(columns.size());
  CheckFactorCount(m);
  std::set<int> distinct;
  for (int c : columns) {
    if (c < 0 || c >= kPbColumns) {
      throw std::invalid_argument("column index out of range");
    }
    if (!distinct.insert(c).second) {
      throw std::invalid_argument("columns must be distinct");
    }
  }
  Fraction out(m);
  for (const Point& row : design.rows) {
    Mask bits = 0;
    for (int j = 0; j < m; ++j) {
      if ((row.bits() >> columns[j]) & 1) bits |= Mask{1} << j;
    }
    out.Add(Point(m, bits));
  }
  return out;
}

std::vector<ProjectionClass> ClassifyProjections(const PBDesign& design) {
  std::vector<ProjectionClass> classes;
  std::map<std::map<Mask, std::int64_t>, std::size_t> index;
  std::vector<int> cols{0, 1, 2, 3, 4};
  while (true) {
    Fraction f = Project(design, cols);
    auto [it, inserted] = index.try_emplace(f.counts(), classes.size());
    if (inserted) {
      classes.push_back(ProjectionClass{
          static_cast<int>(classes.size()) + 1, 0,
          static_cast<int>(f.DistinctRunCount()), {}, f});
    }
    ProjectionClass& cls = classes[it->second];
    ++cls.member_count;
    cls.members.push_back(cols);

    int i = 4;
    while (i >= 0 && cols[i] == kPbColumns - 5 + i) --i;
    if (i < 0) break;
    ++cols[i];
    for (int j = i + 1; j < 5; ++j) cols[j] = cols[j - 1] + 1;
  }
  return classes;
}

std::vector<AlphaPattern> AlphaPatterns() {
  const Mask n = Mask{1} << kPatternFactors;
  std::set<AlphaPattern> found;
  for (Mask a1 = 0; a1 < n; ++a1) {
    for (Mask a2 = 0; a2 < n; ++a2) {
      for (Mask a3 = 0; a3 < n; ++a3) {
        if (std::popcount(a1) >= 3 || std::popcount(a2) >= 3 ||
            std::popcount(a3) >= 3) {
          continue;
        }
        if (std::popcount(a1 ^ a2) < 3 || std::popcount(a1 ^ a3) < 3 ||
            std::popcount(a2 ^ a3) < 3) {
          continue;
        }
        const std::array<Mask, 3> low{a1, a2, a3};
        // Extra generator for each pair of low-weight roles.
        std::array<std::vector<Mask>, 3> extra;  // pairs (0,1), (0,2), (1,2)
        const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
        for (int p = 0; p < 3; ++p) {
          for (Mask x = 0; x < n; ++x) {
            if (HeavyCoset(x, low[pairs[p].first], low[pairs[p].second])) {
              extra[p].push_back(x);
            }
          }
        }
        // Relabel roles so alpha_1 has weight one and alpha_2 carries the
        // smaller lowest factor of the remaining two.
        std::array<int, 3> role{0, 1, 2};
        std::stable_sort(role.begin(), role.end(), [&](int x, int y) {
          const int wx = std::popcount(low[x]), wy = std::popcount(low[y]);
          if (wx != wy) return wx < wy;
          return LowestBit(low[x]) < LowestBit(low[y]);
        });
        auto pair_slot = [&](int x, int y) {
          const int lo = std::min(role[x], role[y]);
          const int hi = std::max(role[x], role[y]);
          return lo == 0 ? (hi == 1 ? 0 : 1) : 2;
        };
        const Mask b1 = low[role[0]], b2 = low[role[1]], b3 = low[role[2]];
        for (Mask x4 : extra[pair_slot(0, 1)]) {
          for (Mask x5 : extra[pair_slot(0, 2)]) {
            for (Mask x6 : extra[pair_slot(1, 2)]) {
              found.insert(AlphaPattern{{b1, b2, b3, CosetMin(x4, b1, b2),
                                         CosetMin(x5, b1, b3),
                                         CosetMin(x6, b2, b3)}});
            }
          }
        }
      }
    }
  }
  std::vector<AlphaPattern> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const AlphaPattern& x, const AlphaPattern& y) {
              if (x.alphas[0] != y.alphas[0]) return x.alphas[0] < y.alphas[0];
              return LowestBit(x.alphas[1]) < LowestBit(y.alphas[1]);
            });
  return out;
}

std::array<RegularSpec, 3> CatalogParts(const AlphaPattern& pattern,
                                        const std::array<int, 6>& e) {
  const auto& a = pattern.alphas;
  return {RegularSpec(kPatternFactors, {a[0], a[1], a[3]}, {e[0], e[1], e[3]}),
          RegularSpec(kPatternFactors, {a[0], a[2], a[4]}, {-e[0], e[2], e[4]}),
          RegularSpec(kPatternFactors, {a[1], a[2], a[5]},
                      {-e[1], -e[2], e[5]})};
}

std::vector<CatalogEntry> BuildStrength2Catalog() {
  const std::vector<AlphaPattern> patterns = AlphaPatterns();
  std::vector<CatalogEntry> out;
  std::set<std::vector<std::int64_t>> seen;
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    for (int s = 0; s < 64; ++s) {
      std::array<int, 6> signs{};
      for (int j = 0; j < 6; ++j) signs[j] = (s >> j) & 1 ? -1 : 1;
      std::array<RegularSpec, 3> parts = CatalogParts(patterns[p], signs);
      CountingPolynomial f = IndicatorOf(parts[0]) + IndicatorOf(parts[1]) +
                             IndicatorOf(parts[2]);
      if (!IsIndicator(f) || f.Numerator(0) != kPbRuns) continue;
      if (!seen.insert(f.numerators()).second) continue;
      out.push_back(CatalogEntry{std::move(f), static_cast<int>(p), signs,
                                 std::move(parts)});
    }
  }
  return out;
}

std::vector<CountingPolynomial> GenerateStrength2Catalog() {
  std::vector<CountingPolynomial> out;
  for (auto& entry : BuildStrength2Catalog()) {
    out.push_back(std::move(entry.indicator));
  }
  return out;
}

}  // namespace regulith
