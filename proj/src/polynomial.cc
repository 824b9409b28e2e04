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

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace regulith {

namespace {

void CheckSameFactors(int a, int b) {
  if (a != b) {
    throw DimensionError("factor count mismatch: " + std::to_string(a) +
                         " vs " + std::to_string(b));
  }
}

void RequireIndicator(const CountingPolynomial& f, const char* op) {
  if (!IsIndicator(f)) {
    throw NotIndicatorError(std::string(op) +
                            " requires a 0/1 indicator polynomial");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Fraction

Fraction::Fraction(int m) : m_(m) { CheckFactorCount(m); }

Fraction Fraction::FromPoints(int m, std::span<const Point> points) {
  Fraction f(m);
  for (const Point& p : points) f.Add(p);
  return f;
}

Fraction Fraction::FromMasks(int m, std::span<const Mask> masks) {
  Fraction f(m);
  for (Mask b : masks) f.Add(Point(m, b));
  return f;
}

void Fraction::Add(const Point& p, std::int64_t count) {
  CheckSameFactors(m_, p.factors());
  if (count < 0) throw std::invalid_argument("negative multiplicity");
  if (count == 0) return;
  counts_[p.bits()] += count;
}

std::int64_t Fraction::Multiplicity(const Point& p) const {
  CheckSameFactors(m_, p.factors());
  auto it = counts_.find(p.bits());
  return it == counts_.end() ? 0 : it->second;
}

std::int64_t Fraction::RunCount() const {
  std::int64_t total = 0;
  for (const auto& [mask, count] : counts_) total += count;
  return total;
}

bool Fraction::IsSet() const {
  return std::all_of(counts_.begin(), counts_.end(),
                     [](const auto& kv) { return kv.second == 1; });
}

std::vector<Point> Fraction::Points() const {
  std::vector<Point> out;
  out.reserve(counts_.size());
  for (const auto& [mask, count] : counts_) out.emplace_back(m_, mask);
  return out;
}

// ---------------------------------------------------------------------------
// CountingPolynomial

CountingPolynomial::CountingPolynomial(int m) : m_(m) {
  CheckFactorCount(m);
  num_.assign(std::size_t{1} << m, 0);
}

CountingPolynomial CountingPolynomial::FromNumerators(
    int m, std::vector<std::int64_t> num) {
  CheckFactorCount(m);
  if (num.size() != (std::size_t{1} << m)) {
    throw std::invalid_argument("numerator table must have 2^m entries");
  }
  return CountingPolynomial(m, std::move(num));
}

CountingPolynomial CountingPolynomial::Constant(int m, Rational value) {
  CountingPolynomial c(m);
  const Rational scaled = value * Rational(c.denominator());
  if (scaled.denominator() != 1) {
    throw std::invalid_argument("constant is not a multiple of 2^-m");
  }
  c.num_[0] = scaled.numerator();
  return c;
}

Rational CountingPolynomial::Coefficient(const MultiIndex& alpha) const {
  CheckSameFactors(m_, alpha.factors());
  return Coefficient(alpha.bits());
}

Rational CountingPolynomial::Coefficient(Mask alpha) const {
  return Rational(num_.at(alpha), denominator());
}

std::vector<Mask> CountingPolynomial::Support() const {
  std::vector<Mask> out;
  for (Mask a = 0; a < num_.size(); ++a) {
    if (num_[a] != 0) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), TermOrderLess);
  return out;
}

bool CountingPolynomial::IsZero() const {
  return std::all_of(num_.begin(), num_.end(),
                     [](std::int64_t v) { return v == 0; });
}

Rational CountingPolynomial::Evaluate(const Point& p) const {
  CheckSameFactors(m_, p.factors());
  std::int64_t acc = 0;
  for (Mask a = 0; a < num_.size(); ++a) {
    if (num_[a] == 0) continue;
    acc += Parity(a & p.bits()) ? -num_[a] : num_[a];
  }
  return Rational(acc, denominator());
}

std::vector<std::int64_t> CountingPolynomial::ScaledValues() const {
  std::vector<std::int64_t> values = num_;
  WalshHadamard(std::span<std::int64_t>(values));
  return values;
}

CountingPolynomial CountingPolynomial::operator+(
    const CountingPolynomial& other) const {
  CountingPolynomial out = *this;
  out += other;
  return out;
}

CountingPolynomial CountingPolynomial::operator-(
    const CountingPolynomial& other) const {
  CountingPolynomial out = *this;
  out -= other;
  return out;
}

CountingPolynomial CountingPolynomial::operator-() const {
  CountingPolynomial out = *this;
  for (auto& v : out.num_) v = -v;
  return out;
}

CountingPolynomial& CountingPolynomial::operator+=(
    const CountingPolynomial& other) {
  CheckSameFactors(m_, other.m_);
  for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += other.num_[i];
  return *this;
}

CountingPolynomial& CountingPolynomial::operator-=(
    const CountingPolynomial& other) {
  CheckSameFactors(m_, other.m_);
  for (std::size_t i = 0; i < num_.size(); ++i) num_[i] -= other.num_[i];
  return *this;
}

CountingPolynomial CountingPolynomial::operator*(
    const CountingPolynomial& other) const {
  CheckSameFactors(m_, other.m_);
  // With W the transform, W(num) = 2^m * values, so the product's
  // numerators are W(W(num_f) .* W(num_g)) / 4^m.
  const std::size_t n = num_.size();
  std::vector<__int128> a(num_.begin(), num_.end());
  std::vector<__int128> b(other.num_.begin(), other.num_.end());
  WalshHadamard(std::span<__int128>(a));
  WalshHadamard(std::span<__int128>(b));
  for (std::size_t i = 0; i < n; ++i) a[i] *= b[i];
  WalshHadamard(std::span<__int128>(a));
  const __int128 scale = static_cast<__int128>(n) * n;
  CountingPolynomial out(m_);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] % scale != 0) {
      throw std::domain_error(
          "product coefficient is not a multiple of 2^-m");
    }
    out.num_[i] = static_cast<std::int64_t>(a[i] / scale);
  }
  return out;
}

std::string CountingPolynomial::ToString() const {
  const std::vector<Mask> support = Support();
  if (support.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (Mask a : support) {
    const Rational c = Coefficient(a);
    const Rational mag = c.numerator() < 0 ? -c : c;
    if (first) {
      if (c.numerator() < 0) out << "-";
    } else {
      out << (c.numerator() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (a == 0 || !unit) {
      out << mag.numerator();
      if (mag.denominator() != 1) out << "/" << mag.denominator();
    }
    if (a != 0) {
      if (!unit) out << " ";
      out << "X" << MultiIndex(m_, a).Label();
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Free functions

CountingPolynomial FromFraction(const Fraction& f) {
  const int m = f.factors();
  std::vector<std::int64_t> num(std::size_t{1} << m, 0);
  for (const auto& [mask, count] : f.counts()) num[mask] = count;
  WalshHadamard(std::span<std::int64_t>(num));
  return CountingPolynomial::FromNumerators(m, std::move(num));
}

Fraction ToFraction(const CountingPolynomial& f) {
  const std::vector<std::int64_t> values = f.ScaledValues();
  const std::int64_t den = f.denominator();
  Fraction out(f.factors());
  for (Mask t = 0; t < values.size(); ++t) {
    if (values[t] % den != 0 || values[t] < 0) {
      throw std::invalid_argument(
          "polynomial is not a non-negative integer counting function");
    }
    if (values[t] != 0) out.Add(Point(f.factors(), t), values[t] / den);
  }
  return out;
}

bool IsIndicator(const CountingPolynomial& f) {
  const std::int64_t den = f.denominator();
  for (std::int64_t v : f.ScaledValues()) {
    if (v != 0 && v != den) return false;
  }
  return true;
}

int OrthogonalStrength(const CountingPolynomial& f) {
  RequireIndicator(f, "OrthogonalStrength");
  int lowest = f.factors() + 1;
  for (Mask a = 1; a < f.numerators().size(); ++a) {
    if (f.Numerator(a) != 0) lowest = std::min(lowest, std::popcount(a));
  }
  return lowest - 1;
}

std::optional<RegularSpec> RegularityOf(const CountingPolynomial& f) {
  RequireIndicator(f, "RegularityOf");
  if (f.Numerator(0) == 0) {
    throw std::invalid_argument("RegularityOf: empty fraction");
  }
  const int m = f.factors();
  std::vector<Mask> support;
  for (Mask a = 0; a < f.numerators().size(); ++a) {
    if (f.Numerator(a) != 0) support.push_back(a);
  }
  // Support must be a subgroup: size a power of two and equal to the span.
  if (!std::has_single_bit(support.size())) return std::nullopt;
  const Subgroup group = Subgroup::SpannedBy(m, support);
  if (group.order() != support.size()) return std::nullopt;

  // All |b_alpha| must equal 1/l, i.e. |num| = 2^m / l, and the signs must
  // form a homomorphism on the subgroup.
  const std::int64_t magnitude =
      f.denominator() / static_cast<std::int64_t>(support.size());
  if (magnitude * static_cast<std::int64_t>(support.size()) !=
      f.denominator()) {
    return std::nullopt;
  }
  auto sign_of = [&](Mask a) -> int {
    const std::int64_t v = f.Numerator(a);
    if (v == magnitude) return 1;
    if (v == -magnitude) return -1;
    return 0;
  };
  if (sign_of(0) != 1) return std::nullopt;
  for (Mask a : support) {
    if (sign_of(a) == 0) return std::nullopt;
  }
  // Homomorphism: the sign at every span element is the product of the
  // basis signs along its coordinates.
  std::vector<int> signs;
  for (Mask g : group.basis()) signs.push_back(sign_of(g));
  for (Mask c = 0; c < group.order(); ++c) {
    int expected = 1;
    for (std::size_t j = 0; j < signs.size(); ++j) {
      if ((c >> j) & 1) expected *= signs[j];
    }
    if (sign_of(group.ElementAt(c)) != expected) return std::nullopt;
  }
  return RegularSpec(m, group.basis(), std::move(signs));
}

}  // namespace regulith
