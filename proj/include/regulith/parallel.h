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

#ifndef REGULITH_PARALLEL_H_
#define REGULITH_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace regulith {

// Worker count: REGULITH_THREADS when set to a positive integer, otherwise
// the hardware concurrency (at least 1).
int WorkerCount();

// Calls fn(i) for every i in [0, n) on up to WorkerCount() threads. Each
// index is visited exactly once; callers write results to slot i so the
// merged output does not depend on scheduling. The first exception thrown
// by any worker is rethrown on the calling thread.
template <typename Fn>
void ParallelFor(std::size_t n, Fn&& fn, std::size_t min_per_worker = 64) {
  const std::size_t workers = std::min<std::size_t>(
      static_cast<std::size_t>(WorkerCount()),
      std::max<std::size_t>(1, n / std::max<std::size_t>(1, min_per_worker)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace regulith

#endif  // REGULITH_PARALLEL_H_
