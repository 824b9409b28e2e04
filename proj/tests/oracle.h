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

// Independent reference implementations used only by the tests. Nothing here
// calls the transform, subgroup or search code under test; the oracles work
// directly on point masks with boost::rational arithmetic and brute force.

#ifndef REGULITH_TESTS_ORACLE_H_
#define REGULITH_TESTS_ORACLE_H_

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include <boost/rational.hpp>

namespace regulith::oracle {

using Q = boost::rational<std::int64_t>;
using Bits = std::uint32_t;

inline int Sign(Bits point, Bits alpha) {
  return std::popcount(point & alpha) % 2 ? -1 : 1;
}

// b_alpha = 2^-m sum_t count(t) X^alpha(t), straight from the definition.
inline std::vector<Q> NaiveCoefficients(int m,
                                        const std::map<Bits, std::int64_t>& c) {
  const Bits n = Bits{1} << m;
  std::vector<Q> b(n);
  for (Bits a = 0; a < n; ++a) {
    std::int64_t s = 0;
    for (const auto& [t, count] : c) s += count * Sign(t, a);
    b[a] = Q(s, std::int64_t{1} << m);
  }
  return b;
}

inline Q NaiveEvaluate(const std::vector<Q>& b, Bits t) {
  Q v(0);
  for (Bits a = 0; a < b.size(); ++a) v += b[a] * Q(Sign(t, a));
  return v;
}

// Expands 2^-k prod_j (1 + e_j X^g_j) term by term.
inline std::vector<Q> ProductCoefficients(int m, const std::vector<Bits>& gens,
                                          const std::vector<int>& signs) {
  std::vector<Q> b(std::size_t{1} << m, Q(0));
  b[0] = Q(1);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    std::vector<Q> next(b.size(), Q(0));
    for (Bits a = 0; a < b.size(); ++a) {
      next[a] += b[a] / Q(2);
      next[a ^ gens[j]] += b[a] * Q(signs[j]) / Q(2);
    }
    b = std::move(next);
  }
  return b;
}

// Runs satisfying X^g_j = e_j for every j.
inline std::set<Bits> SolutionPoints(int m, const std::vector<Bits>& gens,
                                     const std::vector<int>& signs) {
  std::set<Bits> out;
  for (Bits t = 0; t < (Bits{1} << m); ++t) {
    bool ok = true;
    for (std::size_t j = 0; j < gens.size() && ok; ++j) {
      ok = Sign(t, gens[j]) == signs[j];
    }
    if (ok) out.insert(t);
  }
  return out;
}

// A set of runs is a regular fraction iff it is a coset of a subgroup of the
// design: its size is a power of two and its translate through any member is
// closed under XOR.
inline bool IsCoset(const std::set<Bits>& s) {
  if (s.empty() || !std::has_single_bit(s.size())) return false;
  const Bits base = *s.begin();
  std::set<Bits> shifted;
  for (Bits x : s) shifted.insert(x ^ base);
  for (Bits x : shifted) {
    for (Bits y : shifted) {
      if (!shifted.count(x ^ y)) return false;
    }
  }
  return true;
}

// Number of XOR-closed subsets of Z_2^m of size 2^k, by scanning all subsets
// that contain 0. Feasible for m <= 4.
inline std::uint64_t BruteSubgroupCount(int m, int k) {
  const Bits n = Bits{1} << m;
  std::uint64_t count = 0;
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n); ++sub) {
    if (!(sub & 1)) continue;
    if (std::popcount(sub) != (1 << k)) continue;
    bool closed = true;
    for (Bits x = 0; x < n && closed; ++x) {
      if (!((sub >> x) & 1)) continue;
      for (Bits y = 0; y < n; ++y) {
        if (((sub >> y) & 1) && !((sub >> (x ^ y)) & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) ++count;
  }
  return count;
}

// q-Pascal recurrence [m,k] = [m-1,k-1] + 2^k [m-1,k].
inline std::uint64_t GaussianRecurrence(int m, int k) {
  if (k < 0 || k > m) return 0;
  if (k == 0 || k == m) return 1;
  return GaussianRecurrence(m - 1, k - 1) +
         (std::uint64_t{1} << k) * GaussianRecurrence(m - 1, k);
}

// Every partition of `points` into cosets of size `block`, each partition
// as a sorted list of sorted blocks.
inline std::set<std::vector<std::vector<Bits>>> CosetPartitions(
    const std::set<Bits>& points, std::size_t block) {
  std::set<std::vector<std::vector<Bits>>> out;
  std::vector<std::vector<Bits>> chosen;
  std::function<void(std::set<Bits>)> rec = [&](std::set<Bits> rest) {
    if (rest.empty()) {
      auto sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      out.insert(sorted);
      return;
    }
    const Bits first = *rest.begin();
    std::vector<Bits> others(std::next(rest.begin()), rest.end());
    if (others.size() + 1 < block) return;
    // Choose block-1 companions by bitmask over `others`.
    std::vector<int> pick(block - 1);
    std::function<void(std::size_t, std::size_t)> choose =
        [&](std::size_t from, std::size_t depth) {
          if (depth == block - 1) {
            std::set<Bits> part{first};
            for (int i : pick) part.insert(others[i]);
            if (!IsCoset(part)) return;
            std::set<Bits> next = rest;
            for (Bits x : part) next.erase(x);
            chosen.emplace_back(part.begin(), part.end());
            rec(next);
            chosen.pop_back();
            return;
          }
          for (std::size_t i = from; i < others.size(); ++i) {
            pick[depth] = static_cast<int>(i);
            choose(i + 1, depth + 1);
          }
        };
    choose(0, 0);
  };
  rec(points);
  return out;
}

// All 12-run subsets of {-1,+1}^5 with every column balanced 6/6 and every
// pair of columns showing each of the four level combinations three times,
// found by depth-first search over runs in increasing mask order.
inline std::vector<std::vector<Bits>> BruteStrength2Arrays() {
  constexpr int kM = 5, kRuns = 12;
  std::vector<std::vector<Bits>> out;
  std::vector<Bits> current;
  std::array<int, kM> column{};
  std::array<std::array<int, 4>, kM * kM> cell{};
  std::function<void(Bits)> rec = [&](Bits next) {
    if (static_cast<int>(current.size()) == kRuns) {
      out.push_back(current);
      return;
    }
    const int left = kRuns - static_cast<int>(current.size());
    if (static_cast<int>(32 - next) < left) return;
    for (Bits t = next; t < 32; ++t) {
      if (static_cast<int>(32 - t) < left) break;
      bool ok = true;
      for (int i = 0; i < kM && ok; ++i) ok = column[i] + ((t >> i) & 1) <= 6;
      for (int i = 0; i < kM && ok; ++i) {
        for (int j = i + 1; j < kM && ok; ++j) {
          ok = cell[i * kM + j][((t >> i) & 1) * 2 + ((t >> j) & 1)] < 3;
        }
      }
      if (!ok) continue;
      for (int i = 0; i < kM; ++i) column[i] += (t >> i) & 1;
      for (int i = 0; i < kM; ++i) {
        for (int j = i + 1; j < kM; ++j) {
          ++cell[i * kM + j][((t >> i) & 1) * 2 + ((t >> j) & 1)];
        }
      }
      current.push_back(t);
      rec(t + 1);
      current.pop_back();
      for (int i = 0; i < kM; ++i) column[i] -= (t >> i) & 1;
      for (int i = 0; i < kM; ++i) {
        for (int j = i + 1; j < kM; ++j) {
          --cell[i * kM + j][((t >> i) & 1) * 2 + ((t >> j) & 1)];
        }
      }
    }
  };
  rec(0);
  return out;
}

}  // namespace regulith::oracle

#endif  // REGULITH_TESTS_ORACLE_H_
