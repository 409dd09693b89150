// Copyright 2026 The eprgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EPRGAME_SRC_PARALLEL_H_
#define EPRGAME_SRC_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace eprgame::internal {

inline unsigned ResolveWorkers(unsigned requested, size_t tasks) {
  unsigned n = requested == 0 ? std::thread::hardware_concurrency() : requested;
  n = std::max(1u, n);
  return static_cast<unsigned>(std::min<size_t>(n, std::max<size_t>(tasks, 1)));
}

// Calls fn(i) for every i in [0, tasks) on up to `workers` threads. Each
// index is processed exactly once; the first exception is rethrown.
template <typename Fn>
void ParallelFor(size_t tasks, unsigned workers, Fn fn) {
  const unsigned n = ResolveWorkers(workers, tasks);
  if (n == 1) {
    for (size_t i = 0; i < tasks; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (size_t i = next++; i < tasks; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = tasks;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(n);
  for (unsigned t = 0; t < n; ++t) threads.emplace_back(work);
  for (std::thread& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace eprgame::internal

#endif  // EPRGAME_SRC_PARALLEL_H_
