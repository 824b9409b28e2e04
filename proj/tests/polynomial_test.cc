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

#include "regulith/polynomial.h"

#include <random>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracle.h"
#include "regulith/regular.h"
#include "test_util.h"

namespace regulith {
namespace {

using test_util::CoefficientsOf;
using test_util::FractionOf;
using test_util::PolynomialOf;
using test_util::RunOf;
using test_util::SpecOf;

CountingPolynomial ThreeRunPolynomial() {
  return FromFraction(FractionOf(examples::kThreeRuns));
}

CountingPolynomial AbfhiPolynomial() {
  std::vector<std::string> runs(examples::kAbfhiRuns.begin(),
                                examples::kAbfhiRuns.end());
  return FromFraction(FractionOf(runs));
}

Fraction RandomFraction(std::mt19937_64& rng, int m, int max_count) {
  Fraction f(m);
  for (Mask t = 0; t <= FullMask(m); ++t) {
    const int c = static_cast<int>(rng() % (max_count + 1));
    if (c > 0) f.Add(Point(m, t), c);
  }
  return f;
}

std::map<oracle::Bits, std::int64_t> Counts(const Fraction& f) {
  return {f.counts().begin(), f.counts().end()};
}

TEST(FromFractionTest, ThreeRuns) {
  EXPECT_EQ(CoefficientsOf(ThreeRunPolynomial()),
            (std::vector<Rational>{Rational(3, 4), Rational(-1, 4),
                                   Rational(-1, 4), Rational(-1, 4)}));
}

TEST(FromFractionTest, SingleRun) {
  const auto f = FromFraction(FractionOf({"--"}));
  EXPECT_EQ(CoefficientsOf(f),
            (std::vector<Rational>{Rational(1, 4), Rational(-1, 4),
                                   Rational(-1, 4), Rational(1, 4)}));
}

TEST(FromFractionTest, FullDesignIsConstantOne) {
  const auto f = FromFraction(FractionOf({"---", "+--", "-+-", "++-", "--+",
                                          "+-+", "-++", "+++"}));
  EXPECT_EQ(f, CountingPolynomial::Constant(3, Rational(1)));
  EXPECT_EQ(f.ToString(), "1");
}

TEST(EvaluateTest, Examples) {
  const auto f = ThreeRunPolynomial();
  EXPECT_EQ(f.Evaluate(RunOf("--")), Rational(1));
  EXPECT_EQ(f.Evaluate(RunOf("++")), Rational(0));
  EXPECT_EQ(CountingPolynomial(4).Evaluate(RunOf("+-+-")), Rational(0));
  EXPECT_THROW(f.Evaluate(RunOf("---")), DimensionError);
}

TEST(ArithmeticTest, UnionOfTwoRegularFractions) {
  const auto f1 = IndicatorOf(SpecOf(2, {{"1", "2"}, {-1, -1}}));
  const auto f2 = IndicatorOf(SpecOf(2, {{"12"}, {-1}}));
  const auto u = f1 + f2 - f1 * f2;
  EXPECT_EQ(u, ThreeRunPolynomial());
  EXPECT_EQ(u.ToString(), "3/4 - 1/4 X1 - 1/4 X2 - 1/4 X12");
  EXPECT_FALSE(RegularityOf(u).has_value());
}

TEST(ArithmeticTest, IndicatorIsIdempotent) {
  const auto f = AbfhiPolynomial();
  EXPECT_EQ(f * f, f);
}

TEST(ArithmeticTest, StepwiseSubtraction) {
  const auto f = AbfhiPolynomial();
  const auto s1 = IndicatorOf(SpecOf(5, examples::kStep1));
  const auto s2 = IndicatorOf(SpecOf(5, examples::kStep2));
  EXPECT_EQ(f - s1, PolynomialOf(5, Rational(1, 4), examples::kAfterStep1Terms, 8));
  EXPECT_EQ(f - s1 - s2, IndicatorOf(SpecOf(5, examples::kStep3)));
}

TEST(ArithmeticTest, ProductNotRepresentableThrows) {
  const auto half = CountingPolynomial::Constant(1, Rational(1, 2));
  EXPECT_THROW(half * half, std::domain_error);
  EXPECT_THROW(CountingPolynomial(2) + CountingPolynomial(3), DimensionError);
}

TEST(ArithmeticTest, NegationAndZero) {
  const auto f = ThreeRunPolynomial();
  EXPECT_TRUE((f + -f).IsZero());
  EXPECT_EQ(CountingPolynomial(3).ToString(), "0");
}

TEST(IsIndicatorTest, Examples) {
  const auto f = ThreeRunPolynomial();
  EXPECT_TRUE(IsIndicator(f));
  EXPECT_FALSE(IsIndicator(f + f));
  EXPECT_FALSE(IsIndicator(CountingPolynomial::Constant(2, Rational(1, 2))));
}

TEST(OrthogonalStrengthTest, Examples) {
  EXPECT_EQ(OrthogonalStrength(AbfhiPolynomial()), 2);
  EXPECT_EQ(OrthogonalStrength(CountingPolynomial::Constant(4, Rational(1))), 4);
  EXPECT_EQ(OrthogonalStrength(ThreeRunPolynomial()), 0);
  const auto f = ThreeRunPolynomial();
  EXPECT_THROW(OrthogonalStrength(f + f), NotIndicatorError);
}

TEST(RegularityOfTest, Examples) {
  const auto r = RegularityOf(IndicatorOf(SpecOf(2, {{"12"}, {-1}})));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->generators(), std::vector<Mask>{0b11});
  EXPECT_EQ(r->signs(), std::vector<int>{-1});
  EXPECT_FALSE(RegularityOf(ThreeRunPolynomial()).has_value());
  EXPECT_FALSE(RegularityOf(AbfhiPolynomial()).has_value());
}

TEST(RegularityOfTest, Errors) {
  EXPECT_THROW(RegularityOf(CountingPolynomial(3)), std::invalid_argument);
  const auto f = ThreeRunPolynomial();
  EXPECT_THROW(RegularityOf(f + f), NotIndicatorError);
}

TEST(ToStringTest, TermOrderAndUnitCoefficients) {
  EXPECT_EQ(AbfhiPolynomial().ToString(),
            "3/8 + 1/8 X123 - 1/8 X124 + 1/8 X134 - 1/8 X234 + 1/8 X125 - "
            "1/8 X135 - 1/8 X235 - 1/8 X145 + 1/8 X245 + 1/8 X345 + 1/8 X1234 "
            "+ 1/8 X1235 + 1/8 X1245 + 1/8 X1345 + 1/8 X2345");
  const auto two = CountingPolynomial::Constant(1, Rational(1)) +
                   FromFraction(FractionOf({"-"}));
  EXPECT_EQ(two.ToString(), "3/2 - 1/2 X1");
}

TEST(ToFractionTest, RoundTripAndRejection) {
  Fraction f(3);
  f.Add(RunOf("+-+"), 3);
  f.Add(RunOf("---"));
  EXPECT_EQ(ToFraction(FromFraction(f)), f);
  EXPECT_THROW(ToFraction(CountingPolynomial::Constant(2, Rational(1, 2))),
               std::invalid_argument);
  EXPECT_THROW(ToFraction(-FromFraction(f)), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Properties

TEST(PolynomialPropertyTest, EvaluateInvertsTransform) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 4);
    const Fraction f = RandomFraction(rng, m, 3);
    const auto poly = FromFraction(f);
    for (Mask t = 0; t <= FullMask(m); ++t) {
      ASSERT_EQ(poly.Evaluate(Point(m, t)), Rational(f.Multiplicity(Point(m, t))));
    }
    ASSERT_EQ(poly.Total(), Rational(f.RunCount()));
    ASSERT_EQ(Rational(poly.Numerator(0)), Rational(f.RunCount()));
  }
}

TEST(PolynomialPropertyTest, FastTransformMatchesNaive) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 4);
    const Fraction f = RandomFraction(rng, m, 4);
    const auto naive = oracle::NaiveCoefficients(m, Counts(f));
    ASSERT_EQ(CoefficientsOf(FromFraction(f)), naive);
  }
  // Larger dimensions, a few cases each.
  for (int m = 5; m <= 8; ++m) {
    const Fraction f = RandomFraction(rng, m, 2);
    ASSERT_EQ(CoefficientsOf(FromFraction(f)),
              oracle::NaiveCoefficients(m, Counts(f)));
  }
}

TEST(PolynomialPropertyTest, ProductIsIntersection) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 4);
    const Fraction f = RandomFraction(rng, m, 1);
    const Fraction g = RandomFraction(rng, m, 1);
    Fraction both(m);
    for (const auto& [t, c] : f.counts()) {
      if (g.counts().count(t)) both.Add(Point(m, t));
    }
    ASSERT_EQ(FromFraction(f) * FromFraction(g), FromFraction(both));
    Fraction either = f;
    for (const auto& [t, c] : g.counts()) {
      if (!f.counts().count(t)) either.Add(Point(m, t));
    }
    ASSERT_EQ(FromFraction(f) + FromFraction(g) - FromFraction(f) * FromFraction(g),
              FromFraction(either));
  }
}

TEST(PolynomialPropertyTest, IndicatorIffSquareEqualsItself) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 4);
    const auto f = FromFraction(RandomFraction(rng, m, 2));
    ASSERT_EQ(IsIndicator(f), f * f == f);
  }
}

TEST(PolynomialPropertyTest, OneAndTwoRunFractionsAreRegular) {
  for (int m = 1; m <= 6; ++m) {
    for (Mask a = 0; a <= FullMask(m); ++a) {
      Fraction one(m);
      one.Add(Point(m, a));
      const auto r1 = RegularityOf(FromFraction(one));
      ASSERT_TRUE(r1.has_value());
      ASSERT_EQ(r1->rank(), m);
      for (Mask b = a + 1; b <= FullMask(m); ++b) {
        Fraction two = one;
        two.Add(Point(m, b));
        const auto f = FromFraction(two);
        const auto r2 = RegularityOf(f);
        ASSERT_TRUE(r2.has_value());
        ASSERT_EQ(r2->rank(), m - 1);
        ASSERT_EQ(IndicatorOf(*r2), f);
      }
    }
  }
}

TEST(PolynomialPropertyTest, TwoRunRegularCount) {
  for (int m = 1; m <= 4; ++m) {
    std::set<std::vector<std::int64_t>> regular;
    for (Mask a = 0; a <= FullMask(m); ++a) {
      for (Mask b = a + 1; b <= FullMask(m); ++b) {
        Fraction two(m);
        two.Add(Point(m, a));
        two.Add(Point(m, b));
        const auto f = FromFraction(two);
        if (RegularityOf(f)) regular.insert(f.numerators());
      }
    }
    EXPECT_EQ(regular.size(), (std::size_t{1} << (m - 1)) * ((1u << m) - 1));
  }
}

// Exhaustive over every subset of the design for m <= 4: the regularity test
// agrees with the coset oracle, the returned spec rebuilds F, and regular
// fractions are orthogonal-or-aliased.
TEST(PolynomialPropertyTest, RegularIffCosetExhaustive) {
  for (int m = 1; m <= 4; ++m) {
    const Mask n = Mask{1} << m;
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << n); ++subset) {
      std::set<oracle::Bits> runs;
      Fraction f(m);
      for (Mask t = 0; t < n; ++t) {
        if ((subset >> t) & 1) {
          runs.insert(t);
          f.Add(Point(m, t));
        }
      }
      const auto poly = FromFraction(f);
      const auto spec = RegularityOf(poly);
      ASSERT_EQ(spec.has_value(), oracle::IsCoset(runs)) << "m=" << m;
      if (!spec) continue;
      ASSERT_EQ(IndicatorOf(*spec), poly);
      const std::int64_t size = static_cast<std::int64_t>(runs.size());
      for (Mask a = 0; a < n; ++a) {
        for (Mask b = 0; b < n; ++b) {
          std::int64_t inner = 0;
          for (oracle::Bits t : runs) inner += oracle::Sign(t, a) * oracle::Sign(t, b);
          ASSERT_TRUE(inner == 0 || inner == size || inner == -size);
        }
      }
    }
  }
}

}  // namespace
}  // namespace regulith
