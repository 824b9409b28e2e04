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

#ifndef REGULITH_DECOMPOSE_H_
#define REGULITH_DECOMPOSE_H_

#include <vector>

#include "regulith/polynomial.h"
#include "regulith/regular.h"

namespace regulith {

// A partition of a fraction into pairwise disjoint regular fractions.
struct Decomposition {
  std::vector<RegularSpec> parts;
  Fraction target;
};

// The two fractions share no run, i.e. the product of their indicators is
// the zero polynomial.
bool Disjoint(const RegularSpec& r1, const RegularSpec& r2);

// Repeatedly removes the largest regular fraction contained in what is left
// of F (first in FindRegularSubfractions order among those of that size)
// until nothing is left. Throws NotIndicatorError for non-indicators and
// std::invalid_argument for the empty fraction.
Decomposition DecomposeGreedy(const CountingPolynomial& f);

// Every partition of F into regular fractions of exactly `part_size` runs.
// Parts within a decomposition are sorted by their smallest run; the list
// is sorted by the parts' smallest runs. Throws std::invalid_argument when
// part_size is not a power of two or does not divide the run count.
std::vector<Decomposition> DecomposeAll(const CountingPolynomial& f,
                                        std::int64_t part_size);

// Exact cover over explicit candidates: each candidate is the list of item
// indices it covers, items are 0..item_count-1. Returns every selection of
// candidate indices covering each item exactly once, each selection sorted
// ascending. Chooses the item with the fewest live candidates first.
std::vector<std::vector<int>> ExactCovers(
    int item_count, const std::vector<std::vector<int>>& candidates);

}  // namespace regulith

#endif  // REGULITH_DECOMPOSE_H_
