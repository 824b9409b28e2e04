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

#ifndef REGULITH_GF2_H_
#define REGULITH_GF2_H_

// Bit-level representation of design points and multi-indices of a two-level
// full factorial design with m factors, plus subgroups of Z_2^m.
//
// Factor j (1-based, as printed) lives in bit j-1. For a point, a set bit
// means the factor is at level -1, so the all-(+1) run is mask 0 and XOR of
// masks is the componentwise product of runs. For a multi-index, a set bit
// means the factor appears in the monomial.

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace regulith {

inline constexpr int kMaxFactors = 16;

using Mask = std::uint32_t;

// Thrown when objects of different factor counts are combined.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Validates 1 <= m <= kMaxFactors; throws std::invalid_argument otherwise.
void CheckFactorCount(int m);

inline Mask FullMask(int m) { return m >= 32 ? ~Mask{0} : (Mask{1} << m) - 1; }

inline int Parity(Mask x) { return std::popcount(x) & 1; }

// A run of the full design {-1,+1}^m.
class Point {
 public:
  Point(int m, Mask bits);

  // Builds a point from levels in {-1,+1}, factor 1 first.
  static Point FromLevels(std::span<const int> levels);
  static Point FromLevels(std::initializer_list<int> levels) {
    return FromLevels(std::span<const int>(levels.begin(), levels.size()));
  }

  int factors() const { return m_; }
  Mask bits() const { return bits_; }

  // Level of factor j (0-based) as -1 or +1.
  int Level(int j) const { return (bits_ >> j) & 1 ? -1 : 1; }
  std::vector<int> Levels() const;

  // Componentwise product of two runs.
  Point operator*(const Point& other) const;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;

 private:
  int m_;
  Mask bits_;
};

// An exponent vector alpha in {0,1}^m, i.e. an element of Z_2^m.
class MultiIndex {
 public:
  MultiIndex(int m, Mask bits);

  // Builds alpha from 1-based factor numbers, e.g. {3, 4, 5} for X_345.
  static MultiIndex FromFactors(int m, std::initializer_list<int> factors);
  static MultiIndex FromFactors(int m, std::span<const int> factors);
  // Parses a label such as "345" or "0" (the empty monomial). Factors above 9
  // must be written with a separator: "1.10.11".
  static MultiIndex Parse(int m, const std::string& label);

  int factors() const { return m_; }
  Mask bits() const { return bits_; }
  int Weight() const { return std::popcount(bits_); }
  bool IsZero() const { return bits_ == 0; }

  // Group operation of Z_2^m.
  MultiIndex operator^(const MultiIndex& other) const;

  // "345" for X_345, "" for the constant monomial. Uses '.' between factor
  // numbers when any factor exceeds 9.
  std::string Label() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  int m_;
  Mask bits_;
};

// Orders multi-indices by (weight, bitmask), the printing order for terms.
bool TermOrderLess(Mask a, Mask b);

// Value of the monomial X^alpha at point p: (-1)^popcount(p & alpha).
int MonomialEval(const Point& p, const MultiIndex& alpha);

// A subgroup of Z_2^m held by its canonical basis: the reduced row echelon
// form over GF(2) where each row's pivot is its lowest set bit, the pivot
// column is clear in every other row, and rows are sorted by pivot.
class Subgroup {
 public:
  // The trivial subgroup {0}.
  explicit Subgroup(int m);

  // Canonical subgroup spanned by `generators`. Dependent generators are
  // allowed here; the rank is whatever they span.
  static Subgroup SpannedBy(int m, std::span<const MultiIndex> generators);
  static Subgroup SpannedBy(int m, std::span<const Mask> generators);

  int factors() const { return m_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  std::uint64_t order() const { return std::uint64_t{1} << basis_.size(); }
  const std::vector<Mask>& basis() const { return basis_; }
  std::vector<MultiIndex> Generators() const;

  bool Contains(Mask alpha) const;

  // Element at span coordinate `coords`: XOR of basis rows whose bit is set.
  Mask ElementAt(Mask coords) const;

  // Coordinates of alpha with respect to the canonical basis. Requires
  // Contains(alpha).
  Mask CoordinatesOf(Mask alpha) const;

  // The annihilator {beta : popcount(alpha & beta) even for every alpha}.
  Subgroup Orthogonal() const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  // Lexicographic on the canonical basis.
  friend auto operator<=>(const Subgroup& a, const Subgroup& b) {
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    return a.basis_ <=> b.basis_;
  }

 private:
  Subgroup(int m, std::vector<Mask> canonical_basis)
      : m_(m), basis_(std::move(canonical_basis)) {}

  int m_;
  std::vector<Mask> basis_;

  friend std::vector<Subgroup> EnumerateSubgroups(int m, int k);
};

// Canonical reduced row echelon basis of the span of `rows`. Returns the
// basis and reports whether the input rows were linearly independent.
std::vector<Mask> ReducedBasis(std::span<const Mask> rows,
                               bool* independent = nullptr);

// All 2^k elements of the subgroup, sorted ascending by bitmask.
std::vector<MultiIndex> Span(const Subgroup& s);

// Every subgroup of Z_2^m of order 2^k exactly once, in canonical form,
// sorted lexicographically by canonical basis.
std::vector<Subgroup> EnumerateSubgroups(int m, int k);

// Number of k-dimensional subspaces of GF(2)^m. Throws std::overflow_error
// when the count does not fit in 64 bits.
std::uint64_t GaussianBinomial(int m, int k);

}  // namespace regulith

#endif  // REGULITH_GF2_H_
