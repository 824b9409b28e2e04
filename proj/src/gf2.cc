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

#include "regulith/gf2.h"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace regulith {

void CheckFactorCount(int m) {
  if (m < 1 || m > kMaxFactors) {
    throw std::invalid_argument("factor count must be in 1.." +
                                std::to_string(kMaxFactors) + ", got " +
                                std::to_string(m));
  }
}

namespace {

void CheckBits(int m, Mask bits, const char* what) {
  CheckFactorCount(m);
  if (bits & ~FullMask(m)) {
    throw std::invalid_argument(std::string(what) +
                                " has bits above the factor count");
  }
}

void CheckSameFactors(int a, int b) {
  if (a != b) {
    throw DimensionError("factor count mismatch: " + std::to_string(a) +
                         " vs " + std::to_string(b));
  }
}

}  // namespace

Point::Point(int m, Mask bits) : m_(m), bits_(bits) {
  CheckBits(m, bits, "point");
}

Point Point::FromLevels(std::span<const int> levels) {
  const int m = static_cast<int>(levels.size());
  CheckFactorCount(m);
  Mask bits = 0;
  for (int j = 0; j < m; ++j) {
    if (levels[j] == -1) {
      bits |= Mask{1} << j;
    } else if (levels[j] != 1) {
      throw std::invalid_argument("levels must be -1 or +1");
    }
  }
  return Point(m, bits);
}

std::vector<int> Point::Levels() const {
  std::vector<int> out(m_);
  for (int j = 0; j < m_; ++j) out[j] = Level(j);
  return out;
}

Point Point::operator*(const Point& other) const {
  CheckSameFactors(m_, other.m_);
  return Point(m_, bits_ ^ other.bits_);
}

MultiIndex::MultiIndex(int m, Mask bits) : m_(m), bits_(bits) {
  CheckBits(m, bits, "multi-index");
}

MultiIndex MultiIndex::FromFactors(int m, std::initializer_list<int> factors) {
  return FromFactors(m, std::span<const int>(factors.begin(), factors.size()));
}

MultiIndex MultiIndex::FromFactors(int m, std::span<const int> factors) {
  CheckFactorCount(m);
  Mask bits = 0;
  for (int f : factors) {
    if (f < 1 || f > m) {
      throw std::invalid_argument("factor " + std::to_string(f) +
                                  " out of range 1.." + std::to_string(m));
    }
    bits ^= Mask{1} << (f - 1);
  }
  return MultiIndex(m, bits);
}

MultiIndex MultiIndex::Parse(int m, const std::string& label) {
  std::vector<int> factors;
  if (label.empty() || label == "0") return MultiIndex(m, 0);
  if (label.find('.') != std::string::npos) {
    std::istringstream in(label);
    std::string piece;
    while (std::getline(in, piece, '.')) factors.push_back(std::stoi(piece));
  } else {
    for (char c : label) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0') {
        throw std::invalid_argument("bad multi-index label '" + label + "'");
      }
      factors.push_back(c - '0');
    }
  }
  return FromFactors(m, factors);
}

MultiIndex MultiIndex::operator^(const MultiIndex& other) const {
  CheckSameFactors(m_, other.m_);
  return MultiIndex(m_, bits_ ^ other.bits_);
}

std::string MultiIndex::Label() const {
  const bool wide = (bits_ >> 9) != 0;
  std::string out;
  for (int j = 0; j < m_; ++j) {
    if (!((bits_ >> j) & 1)) continue;
    if (wide && !out.empty()) out += '.';
    out += std::to_string(j + 1);
  }
  return out;
}

bool TermOrderLess(Mask a, Mask b) {
  const int wa = std::popcount(a), wb = std::popcount(b);
  return wa != wb ? wa < wb : a < b;
}

int MonomialEval(const Point& p, const MultiIndex& alpha) {
  CheckSameFactors(p.factors(), alpha.factors());
  return Parity(p.bits() & alpha.bits()) ? -1 : 1;
}

std::vector<Mask> ReducedBasis(std::span<const Mask> rows, bool* independent) {
  std::vector<Mask> basis;
  bool indep = true;
  for (Mask r : rows) {
    for (Mask b : basis) {
      if (r & (b & -b)) r ^= b;
    }
    if (r == 0) {
      indep = false;
      continue;
    }
    const Mask pivot = r & -r;
    for (Mask& b : basis) {
      if (b & pivot) b ^= r;
    }
    basis.push_back(r);
  }
  std::sort(basis.begin(), basis.end(),
            [](Mask a, Mask b) { return (a & -a) < (b & -b); });
  if (independent) *independent = indep;
  return basis;
}

Subgroup::Subgroup(int m) : m_(m) { CheckFactorCount(m); }

Subgroup Subgroup::SpannedBy(int m, std::span<const Mask> generators) {
  CheckFactorCount(m);
  for (Mask g : generators) CheckBits(m, g, "generator");
  return Subgroup(m, ReducedBasis(generators));
}

Subgroup Subgroup::SpannedBy(int m, std::span<const MultiIndex> generators) {
  std::vector<Mask> rows;
  rows.reserve(generators.size());
  for (const auto& g : generators) {
    CheckSameFactors(m, g.factors());
    rows.push_back(g.bits());
  }
  return SpannedBy(m, rows);
}

std::vector<MultiIndex> Subgroup::Generators() const {
  std::vector<MultiIndex> out;
  out.reserve(basis_.size());
  for (Mask b : basis_) out.emplace_back(m_, b);
  return out;
}

bool Subgroup::Contains(Mask alpha) const {
  for (Mask b : basis_) {
    if (alpha & (b & -b)) alpha ^= b;
  }
  return alpha == 0;
}

Mask Subgroup::ElementAt(Mask coords) const {
  Mask out = 0;
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    if ((coords >> j) & 1) out ^= basis_[j];
  }
  return out;
}

Mask Subgroup::CoordinatesOf(Mask alpha) const {
  // In reduced form the pivot bit of row j is set only in row j, so the
  // coordinate is read directly off the pivot.
  Mask coords = 0;
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    if (alpha & (basis_[j] & -basis_[j])) coords |= Mask{1} << j;
  }
  if (ElementAt(coords) != alpha) {
    throw std::invalid_argument("element not in subgroup");
  }
  return coords;
}

Subgroup Subgroup::Orthogonal() const {
  // For each non-pivot column c, the vector with bit c set plus the pivot
  // bits of the rows that contain c is orthogonal to every row.
  Mask pivots = 0;
  for (Mask b : basis_) pivots |= b & -b;
  std::vector<Mask> rows;
  for (int c = 0; c < m_; ++c) {
    const Mask col = Mask{1} << c;
    if (pivots & col) continue;
    Mask v = col;
    for (Mask b : basis_) {
      if (b & col) v |= b & -b;
    }
    rows.push_back(v);
  }
  return Subgroup(m_, ReducedBasis(rows));
}

std::vector<MultiIndex> Span(const Subgroup& s) {
  std::vector<MultiIndex> out;
  out.reserve(s.order());
  for (Mask c = 0; c < s.order(); ++c) {
    out.emplace_back(s.factors(), s.ElementAt(c));
  }
  std::sort(out.begin(), out.end(),
            [](const MultiIndex& a, const MultiIndex& b) {
              return a.bits() < b.bits();
            });
  return out;
}

std::uint64_t GaussianBinomial(int m, int k) {
  if (k < 0 || m < 0 || k > m) {
    throw std::invalid_argument("GaussianBinomial requires 0 <= k <= m");
  }
  if (m > 62) throw std::overflow_error("GaussianBinomial: m too large");
  // After step i the value is [m, i+1]_2, so every division is exact.
  unsigned __int128 value = 1;
  for (int i = 0; i < k; ++i) {
    const unsigned __int128 num = (std::uint64_t{1} << (m - i)) - 1;
    const unsigned __int128 den = (std::uint64_t{1} << (i + 1)) - 1;
    value = value * num / den;
    if (value > ~std::uint64_t{0}) {
      throw std::overflow_error("GaussianBinomial: result exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(value);
}

std::vector<Subgroup> EnumerateSubgroups(int m, int k) {
  CheckFactorCount(m);
  if (k < 0 || k > m) {
    throw std::invalid_argument("EnumerateSubgroups requires 0 <= k <= m");
  }
  std::vector<Subgroup> out;
  out.reserve(GaussianBinomial(m, k));

  // Schubert cells: pick pivot columns p_0 < ... < p_{k-1}; row i has its
  // pivot at p_i and free bits only at non-pivot columns above p_i.
  std::vector<int> pivots(k);
  for (int i = 0; i < k; ++i) pivots[i] = i;
  while (true) {
    Mask pivot_mask = 0;
    for (int p : pivots) pivot_mask |= Mask{1} << p;
    std::vector<std::vector<int>> free_cols(k);
    int total_free = 0;
    for (int i = 0; i < k; ++i) {
      for (int c = pivots[i] + 1; c < m; ++c) {
        if (!(pivot_mask & (Mask{1} << c))) free_cols[i].push_back(c);
      }
      total_free += static_cast<int>(free_cols[i].size());
    }
    for (std::uint64_t fill = 0; fill < (std::uint64_t{1} << total_free);
         ++fill) {
      std::vector<Mask> rows(k);
      int bit = 0;
      for (int i = 0; i < k; ++i) {
        Mask row = Mask{1} << pivots[i];
        for (int c : free_cols[i]) {
          if ((fill >> bit++) & 1) row |= Mask{1} << c;
        }
        rows[i] = row;
      }
      out.push_back(Subgroup(m, std::move(rows)));
    }
    // Next combination of pivot columns.
    int i = k - 1;
    while (i >= 0 && pivots[i] == m - k + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace regulith
