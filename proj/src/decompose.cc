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

#include "regulith/decompose.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>

namespace regulith {

namespace {

void RequireNonEmptyIndicator(const CountingPolynomial& f, const char* op) {
  if (!IsIndicator(f)) {
    throw NotIndicatorError(std::string(op) + " requires a 0/1 indicator");
  }
  if (f.Numerator(0) == 0) {
    throw std::invalid_argument(std::string(op) + ": empty fraction");
  }
}

class ExactCoverSearch {
 public:
  ExactCoverSearch(int item_count, const std::vector<std::vector<int>>& cands)
      : cands_(cands), covered_(item_count, false), by_item_(item_count) {
    for (int c = 0; c < static_cast<int>(cands_.size()); ++c) {
      for (int item : cands_[c]) by_item_.at(item).push_back(c);
    }
  }

  std::vector<std::vector<int>> Run() {
    Search();
    std::sort(solutions_.begin(), solutions_.end());
    return std::move(solutions_);
  }

 private:
  bool Available(int c) const {
    return std::none_of(cands_[c].begin(), cands_[c].end(),
                        [&](int item) { return covered_[item]; });
  }

  void Search() {
    int best_item = -1;
    std::size_t best_count = std::numeric_limits<std::size_t>::max();
    for (int item = 0; item < static_cast<int>(covered_.size()); ++item) {
      if (covered_[item]) continue;
      std::size_t live = 0;
      for (int c : by_item_[item]) live += Available(c) ? 1 : 0;
      if (live < best_count) {
        best_count = live;
        best_item = item;
        if (live == 0) break;
      }
    }
    if (best_item < 0) {
      std::vector<int> solution = chosen_;
      std::sort(solution.begin(), solution.end());
      solutions_.push_back(std::move(solution));
      return;
    }
    if (best_count == 0) return;
    for (int c : by_item_[best_item]) {
      if (!Available(c)) continue;
      for (int item : cands_[c]) covered_[item] = true;
      chosen_.push_back(c);
      Search();
      chosen_.pop_back();
      for (int item : cands_[c]) covered_[item] = false;
    }
  }

  const std::vector<std::vector<int>>& cands_;
  std::vector<bool> covered_;
  std::vector<std::vector<int>> by_item_;
  std::vector<int> chosen_;
  std::vector<std::vector<int>> solutions_;
};

}  // namespace

bool Disjoint(const RegularSpec& r1, const RegularSpec& r2) {
  if (r1.factors() != r2.factors()) {
    throw DimensionError("factor count mismatch");
  }
  return (IndicatorOf(r1) * IndicatorOf(r2)).IsZero();
}

std::vector<std::vector<int>> ExactCovers(
    int item_count, const std::vector<std::vector<int>>& candidates) {
  return ExactCoverSearch(item_count, candidates).Run();
}

Decomposition DecomposeGreedy(const CountingPolynomial& f) {
  RequireNonEmptyIndicator(f, "DecomposeGreedy");
  const int m = f.factors();
  Decomposition out{{}, ToFraction(f)};
  CountingPolynomial remainder = f;
  while (remainder.Numerator(0) > 0) {
    const auto runs = static_cast<std::uint64_t>(remainder.Numerator(0));
    const int largest = std::bit_width(runs) - 1;
    bool removed = false;
    for (int dim = largest; dim >= 0 && !removed; --dim) {
      const std::vector<RegularSpec> found =
          FindRegularSubfractions(remainder, m - dim, SearchStrategy::kAuto);
      if (found.empty()) continue;
      remainder -= IndicatorOf(found.front());
      out.parts.push_back(found.front());
      removed = true;
    }
    // Single runs are always regular, so dim = 0 never comes back empty.
    if (!removed) throw std::logic_error("DecomposeGreedy made no progress");
  }
  return out;
}

std::vector<Decomposition> DecomposeAll(const CountingPolynomial& f,
                                        std::int64_t part_size) {
  RequireNonEmptyIndicator(f, "DecomposeAll");
  const int m = f.factors();
  const std::int64_t runs = f.Numerator(0);
  if (part_size <= 0 || !std::has_single_bit(
                            static_cast<std::uint64_t>(part_size))) {
    throw std::invalid_argument("part size must be a power of two");
  }
  if (part_size > f.denominator() || runs % part_size != 0) {
    throw std::invalid_argument("part size " + std::to_string(part_size) +
                                " does not divide the run count " +
                                std::to_string(runs));
  }
  const int dim = std::bit_width(static_cast<std::uint64_t>(part_size)) - 1;
  const std::vector<RegularSpec> candidates =
      FindRegularSubfractions(f, m - dim, SearchStrategy::kAuto);

  std::map<Mask, int> item_of;
  const Fraction target = ToFraction(f);
  for (const auto& [mask, count] : target.counts()) {
    const int next = static_cast<int>(item_of.size());
    item_of[mask] = next;
  }
  std::vector<std::vector<int>> covers(candidates.size());
  std::vector<Mask> smallest(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const Fraction points = PointsOf(candidates[c]);
    smallest[c] = points.counts().begin()->first;
    for (const auto& [mask, count] : points.counts()) {
      covers[c].push_back(item_of.at(mask));
    }
  }

  std::vector<std::pair<std::vector<Mask>, Decomposition>> keyed;
  for (std::vector<int>& chosen :
       ExactCovers(static_cast<int>(item_of.size()), covers)) {
    std::sort(chosen.begin(), chosen.end(),
              [&](int a, int b) { return smallest[a] < smallest[b]; });
    std::vector<Mask> key;
    Decomposition d{{}, target};
    for (int c : chosen) {
      key.push_back(smallest[c]);
      d.parts.push_back(candidates[c]);
    }
    keyed.emplace_back(std::move(key), std::move(d));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Decomposition> out;
  out.reserve(keyed.size());
  for (auto& [key, d] : keyed) out.push_back(std::move(d));
  return out;
}

}  // namespace regulith
