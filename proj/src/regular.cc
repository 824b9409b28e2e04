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

#include "regulith/regular.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "regulith/parallel.h"

namespace regulith {

namespace {

void RequireSameFactors(const CountingPolynomial& f, int m) {
  if (f.factors() != m) throw DimensionError("factor count mismatch");
}

Mask SignPattern(const std::vector<int>& signs) {
  Mask e = 0;
  for (std::size_t j = 0; j < signs.size(); ++j) {
    if (signs[j] < 0) e |= Mask{1} << j;
  }
  return e;
}

std::vector<int> SignsFromPattern(Mask pattern, int k) {
  std::vector<int> signs(k);
  for (int j = 0; j < k; ++j) signs[j] = (pattern >> j) & 1 ? -1 : 1;
  return signs;
}

// Solves every sign system of one subgroup at once: the inclusion sums for
// all 2^k sign patterns are the Walsh-Hadamard transform of F's numerators
// restricted to the subgroup, in generator coordinates.
void SolveSignSystem(const CountingPolynomial& f, const Subgroup& group,
                     std::vector<RegularSpec>& out) {
  if (!NecessaryTest(f, group)) return;
  const int k = group.rank();
  std::vector<std::int64_t> sums(std::size_t{1} << k);
  for (Mask c = 0; c < sums.size(); ++c) {
    sums[c] = f.Numerator(group.ElementAt(c));
  }
  WalshHadamard(std::span<std::int64_t>(sums));
  for (Mask e = 0; e < sums.size(); ++e) {
    if (sums[e] == f.denominator()) {
      out.emplace_back(f.factors(), group.basis(), SignsFromPattern(e, k));
    }
  }
}

std::vector<RegularSpec> BySignSystems(const CountingPolynomial& f, int k) {
  const std::vector<Subgroup> groups = EnumerateSubgroups(f.factors(), k);
  std::vector<std::vector<RegularSpec>> found(groups.size());
  ParallelFor(groups.size(), [&](std::size_t i) {
    SolveSignSystem(f, groups[i], found[i]);
  });
  std::vector<RegularSpec> out;
  for (auto& batch : found) {
    for (auto& spec : batch) out.push_back(std::move(spec));
  }
  return out;
}

// Enumerates cosets a + H contained in the run set, with H a subgroup of
// the design of dimension `dim` and a the smallest run of the coset.
class CosetSearch {
 public:
  CosetSearch(int m, std::vector<Mask> runs, int dim)
      : m_(m), runs_(std::move(runs)), dim_(dim),
        member_(std::size_t{1} << m, false) {
    for (Mask t : runs_) member_[t] = true;
  }

  std::vector<RegularSpec> Run() {
    for (Mask a : runs_) {
      base_ = a;
      std::vector<Mask> span{0};
      std::vector<Mask> basis;
      Extend(span, basis, 0);
    }
    return std::move(found_);
  }

 private:
  void Extend(std::vector<Mask>& span, std::vector<Mask>& basis,
              Mask last) {
    if (static_cast<int>(basis.size()) == dim_) {
      Emit(basis);
      return;
    }
    for (Mask t : runs_) {
      const Mask v = t ^ base_;
      if (v <= last) continue;
      // The new half of the span must stay inside the fraction and must not
      // contain a run smaller than the base. Requiring v to be the smallest
      // element of v + span makes the basis the greedy one, so every
      // subspace is reached once.
      bool ok = true;
      const std::size_t n = span.size();
      for (std::size_t i = 0; i < n && ok; ++i) {
        const Mask x = base_ ^ span[i] ^ v;
        ok = member_[x] && x > base_ && (span[i] ^ v) >= v;
      }
      if (!ok) continue;
      for (std::size_t i = 0; i < n; ++i) span.push_back(span[i] ^ v);
      basis.push_back(v);
      Extend(span, basis, v);
      basis.pop_back();
      span.resize(n);
    }
  }

  void Emit(const std::vector<Mask>& basis) {
    const Subgroup defining = Subgroup::SpannedBy(m_, basis).Orthogonal();
    std::vector<int> signs;
    for (Mask g : defining.basis()) signs.push_back(Parity(g & base_) ? -1 : 1);
    found_.emplace_back(m_, defining.basis(), std::move(signs));
  }

  int m_;
  std::vector<Mask> runs_;
  int dim_;
  std::vector<bool> member_;
  Mask base_ = 0;
  std::vector<RegularSpec> found_;
};

std::vector<RegularSpec> ByPointCosets(const CountingPolynomial& f, int k) {
  const int m = f.factors();
  const int dim = m - k;
  std::vector<Mask> runs;
  const std::vector<std::int64_t> values = f.ScaledValues();
  for (Mask t = 0; t < values.size(); ++t) {
    if (values[t] != 0) runs.push_back(t);
  }
  if (runs.size() < (std::size_t{1} << dim)) return {};
  std::vector<RegularSpec> out = CosetSearch(m, std::move(runs), dim).Run();
  std::sort(out.begin(), out.end(), SearchOrderLess);
  return out;
}

double SignSystemCost(int m, int k) {
  double groups = 1;
  for (int i = 0; i < k; ++i) {
    groups *= (std::ldexp(1.0, m - i) - 1) / (std::ldexp(1.0, i + 1) - 1);
  }
  return groups * std::ldexp(1.0, k) * (k + 1);
}

double PointCosetCost(double runs, int dim) {
  // Increasing sequences of dim differences from each base run.
  double cost = runs;
  for (int i = 0; i < dim; ++i) cost *= runs / (i + 1);
  return cost * std::ldexp(1.0, dim);
}

}  // namespace

CountingPolynomial IndicatorOf(const RegularSpec& r) {
  const int m = r.factors();
  std::vector<std::int64_t> num(std::size_t{1} << m, 0);
  const std::int64_t magnitude = std::int64_t{1} << (m - r.rank());
  for (const auto& [alpha, e] : r.SignedElements()) num[alpha] = e * magnitude;
  return CountingPolynomial::FromNumerators(m, std::move(num));
}

Fraction PointsOf(const RegularSpec& r) {
  // On the canonical basis each pivot bit appears in one row only, so
  // setting the pivots of the rows with e_j = -1 gives one solution; the
  // rest is that run times the orthogonal subgroup.
  const RegularSpec canonical = r.Canonical();
  Mask base = 0;
  for (int j = 0; j < canonical.rank(); ++j) {
    if (canonical.signs()[j] < 0) {
      base |= canonical.generators()[j] & -canonical.generators()[j];
    }
  }
  const Subgroup orthogonal = canonical.DefiningSubgroup().Orthogonal();
  Fraction out(r.factors());
  for (Mask c = 0; c < orthogonal.order(); ++c) {
    out.Add(Point(r.factors(), base ^ orthogonal.ElementAt(c)));
  }
  return out;
}

Rational InclusionSum(const CountingPolynomial& f, const RegularSpec& r) {
  RequireSameFactors(f, r.factors());
  std::int64_t acc = 0;
  for (const auto& [alpha, e] : r.SignedElements()) {
    acc += e * f.Numerator(alpha);
  }
  return Rational(acc, f.denominator());
}

bool InclusionTest(const CountingPolynomial& f, const RegularSpec& r) {
  RequireSameFactors(f, r.factors());
  if (!IsIndicator(f)) {
    throw NotIndicatorError("InclusionTest requires a 0/1 indicator");
  }
  return InclusionSum(f, r) == Rational(1);
}

bool NecessaryTest(const CountingPolynomial& f, const Subgroup& l) {
  RequireSameFactors(f, l.factors());
  std::int64_t acc = f.Numerator(0);
  for (Mask c = 1; c < l.order(); ++c) {
    acc += std::llabs(f.Numerator(l.ElementAt(c)));
  }
  return acc >= f.denominator();
}

bool SearchOrderLess(const RegularSpec& a, const RegularSpec& b) {
  if (a.generators() != b.generators()) {
    return a.generators() < b.generators();
  }
  return SignPattern(a.signs()) < SignPattern(b.signs());
}

std::vector<RegularSpec> FindRegularSubfractions(const CountingPolynomial& f,
                                                 int k,
                                                 SearchStrategy strategy) {
  const int m = f.factors();
  if (k < 0 || k > m) {
    throw std::invalid_argument("FindRegularSubfractions requires 0 <= k <= m");
  }
  if (!IsIndicator(f)) {
    throw NotIndicatorError("FindRegularSubfractions requires a 0/1 indicator");
  }
  if (strategy == SearchStrategy::kAuto) {
    const double runs = static_cast<double>(f.Numerator(0));
    strategy = PointCosetCost(runs, m - k) < SignSystemCost(m, k)
                   ? SearchStrategy::kPointCosets
                   : SearchStrategy::kSignSystems;
  }
  return strategy == SearchStrategy::kSignSystems ? BySignSystems(f, k)
                                                  : ByPointCosets(f, k);
}

}  // namespace regulith
