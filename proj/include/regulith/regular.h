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

#ifndef REGULITH_REGULAR_H_
#define REGULITH_REGULAR_H_

#include <vector>

#include "regulith/gf2.h"
#include "regulith/polynomial.h"
#include "regulith/regular_spec.h"

namespace regulith {

// Expansion of 2^-k prod_j (1 + e_j X^{alpha_j}).
CountingPolynomial IndicatorOf(const RegularSpec& r);

// Runs p with X^{alpha_j}(p) = e_j for every j; 2^(m-k) of them.
Fraction PointsOf(const RegularSpec& r);

// b_0 + e_1 b_{alpha_1} + ... + e_1...e_k b_{alpha_1+...+alpha_k}: the signed
// sum of F's coefficients over the span of the generators.
Rational InclusionSum(const CountingPolynomial& f, const RegularSpec& r);

// The fraction of r lies inside the fraction of F iff InclusionSum == 1.
// Throws NotIndicatorError when F is not a 0/1 indicator.
bool InclusionTest(const CountingPolynomial& f, const RegularSpec& r);

// b_0 + sum over non-zero alpha in L of |b_alpha| >= 1. When false, no sign
// assignment on L passes InclusionTest.
bool NecessaryTest(const CountingPolynomial& f, const Subgroup& l);

enum class SearchStrategy {
  // Solve the sign system of every subgroup of order 2^k.
  kSignSystems,
  // Grow cosets of subgroups of the design directly from F's runs.
  kPointCosets,
  // Whichever of the two is estimated to be cheaper.
  kAuto,
};

// Every regular fraction with k generating equations (2^(m-k) runs) inside
// the fraction of F. Specs use the canonical basis of their defining
// subgroup and are ordered by (subgroup, sign pattern), where sign patterns
// are ordered by the binary number whose bit j is set when e_j = -1. Every
// strategy returns the same list.
std::vector<RegularSpec> FindRegularSubfractions(
    const CountingPolynomial& f, int k,
    SearchStrategy strategy = SearchStrategy::kSignSystems);

// Ordering used by FindRegularSubfractions; specs must be canonical.
bool SearchOrderLess(const RegularSpec& a, const RegularSpec& b);

}  // namespace regulith

#endif  // REGULITH_REGULAR_H_
