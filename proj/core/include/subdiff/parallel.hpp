// Copyright 2026 The subdiff Authors
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

#ifndef SUBDIFF_PARALLEL_HPP_
#define SUBDIFF_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

namespace subdiff {

// Worker count used by every parallel loop in the library. 0 means "use
// hardware concurrency". Results never depend on this value: work items write
// to their own slot and reductions run in index order afterwards.
void set_thread_count(int threads);
int thread_count();

namespace internal {
// Set on pool workers; nested parallel_for calls then run inline.
inline thread_local bool in_parallel_region = false;
}  // namespace internal

// Runs fn(i) for i in [0, count) on up to thread_count() workers. The first
// exception thrown by any item is rethrown on the calling thread. Calls made
// from inside another parallel_for run sequentially.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const std::size_t workers =
      internal::in_parallel_region
          ? 1
          : std::min<std::size_t>(static_cast<std::size_t>(thread_count()),
                                  count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto body = [&] {
    const bool outer = internal::in_parallel_region;
    internal::in_parallel_region = true;
    struct Restore {
      bool value;
      ~Restore() { internal::in_parallel_region = value; }
    } restore{outer};
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

// Fixed-shape pairwise (tree) summation: the reduction tree depends only on
// values.size(), so the result is reproducible bit for bit.
double pairwise_sum(std::span<const double> values);

}  // namespace subdiff

#endif  // SUBDIFF_PARALLEL_HPP_
