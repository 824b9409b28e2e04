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

#ifndef REGULITH_POLYNOMIAL_H_
#define REGULITH_POLYNOMIAL_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "regulith/gf2.h"
#include "regulith/regular_spec.h"

namespace regulith {

using Rational = boost::rational<std::int64_t>;

// Raised when an operation that needs a 0/1 indicator gets anything else.
class NotIndicatorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A multiset of runs of the full design {-1,+1}^m.
class Fraction {
 public:
  explicit Fraction(int m);
  static Fraction FromPoints(int m, std::span<const Point> points);
  static Fraction FromMasks(int m, std::span<const Mask> masks);

  void Add(const Point& p, std::int64_t count = 1);

  int factors() const { return m_; }
  // Multiplicity of every run present, keyed by point mask.
  const std::map<Mask, std::int64_t>& counts() const { return counts_; }

  std::int64_t Multiplicity(const Point& p) const;
  std::int64_t RunCount() const;
  std::size_t DistinctRunCount() const { return counts_.size(); }
  bool IsEmpty() const { return counts_.empty(); }
  // True when no run is replicated.
  bool IsSet() const;

  // Distinct runs, ascending by mask.
  std::vector<Point> Points() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;

 private:
  int m_;
  std::map<Mask, std::int64_t> counts_;
};

// F = sum_alpha b_alpha X^alpha over {-1,+1}^m with every coefficient a
// dyadic rational b_alpha = num[alpha] / 2^m. Indicator and counting
// polynomials of fractions are integer valued on the full design, which is
// the case all ring operations are exact for.
class CountingPolynomial {
 public:
  // The zero polynomial.
  explicit CountingPolynomial(int m);

  // Numerators indexed by multi-index mask; must have 2^m entries.
  static CountingPolynomial FromNumerators(int m,
                                           std::vector<std::int64_t> num);
  static CountingPolynomial Constant(int m, Rational value);

  int factors() const { return m_; }
  std::int64_t denominator() const { return std::int64_t{1} << m_; }
  std::int64_t Numerator(Mask alpha) const { return num_.at(alpha); }
  const std::vector<std::int64_t>& numerators() const { return num_; }
  Rational Coefficient(const MultiIndex& alpha) const;
  Rational Coefficient(Mask alpha) const;

  // Multi-indices with non-zero coefficient, ordered by (weight, mask).
  std::vector<Mask> Support() const;
  bool IsZero() const;

  Rational Evaluate(const Point& p) const;

  // 2^m * F(t) for every run t, indexed by point mask. Always integral.
  std::vector<std::int64_t> ScaledValues() const;

  // Sum_t F(t) over the full design, i.e. 2^m b_0.
  Rational Total() const { return Rational(num_[0]); }

  CountingPolynomial operator+(const CountingPolynomial& other) const;
  CountingPolynomial operator-(const CountingPolynomial& other) const;
  CountingPolynomial operator-() const;
  // Product with X_j^2 = 1, i.e. XOR convolution of coefficients. Throws
  // std::domain_error when a coefficient of the product is not a multiple
  // of 2^-m (never the case for integer valued operands).
  CountingPolynomial operator*(const CountingPolynomial& other) const;
  CountingPolynomial& operator+=(const CountingPolynomial& other);
  CountingPolynomial& operator-=(const CountingPolynomial& other);

  // "3/4 - 1/4 X1 - 1/4 X2 - 1/4 X12"; "0" for the zero polynomial.
  std::string ToString() const;

  friend bool operator==(const CountingPolynomial&,
                         const CountingPolynomial&) = default;

 private:
  CountingPolynomial(int m, std::vector<std::int64_t> num)
      : m_(m), num_(std::move(num)) {}

  int m_;
  std::vector<std::int64_t> num_;
};

// In-place unnormalized Walsh-Hadamard transform over Z_2^m:
// out[a] = sum_t in[t] (-1)^popcount(a & t). Size must be a power of two.
template <typename T>
void WalshHadamard(std::span<T> values) {
  const std::size_t n = values.size();
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const T a = values[j], b = values[j + h];
        values[j] = a + b;
        values[j + h] = a - b;
      }
    }
  }
}

// Counting polynomial of a fraction: b_alpha = 2^-m sum_t count(t) X^alpha(t).
CountingPolynomial FromFraction(const Fraction& f);

// Inverse of FromFraction. Throws std::invalid_argument unless F takes
// non-negative integer values on the full design.
Fraction ToFraction(const CountingPolynomial& f);

// F takes only the values 0 and 1 on the full design.
bool IsIndicator(const CountingPolynomial& f);

// Largest s with b_alpha = 0 for all 1 <= |alpha| <= s; m when only b_0 is
// non-zero. Throws NotIndicatorError for non-indicators.
int OrthogonalStrength(const CountingPolynomial& f);

// The regular spec whose indicator is F, on the canonical basis of its
// defining subgroup, or nullopt when F is not regular. Throws
// NotIndicatorError for non-indicators and std::invalid_argument for the
// empty fraction.
std::optional<RegularSpec> RegularityOf(const CountingPolynomial& f);

}  // namespace regulith

#endif  // REGULITH_POLYNOMIAL_H_
