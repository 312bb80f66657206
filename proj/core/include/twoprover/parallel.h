// Copyright 2026 The twoprover Authors
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

#ifndef TWOPROVER_PARALLEL_H_
#define TWOPROVER_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace twoprover {

// Worker count used when a caller passes threads <= 0.
inline int DefaultThreadCount() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Computes fn(0), ..., fn(count - 1) on up to `threads` workers. Results are
// stored by index, so the output never depends on scheduling. The first
// exception (lowest index) is rethrown after all workers finish.
template <typename T>
std::vector<T> ParallelMap(int count, const std::function<T(int)>& fn, int threads = 0) {
  std::vector<T> results(count);
  if (count <= 0) return results;
  if (threads <= 0) threads = DefaultThreadCount();
  threads = std::min(threads, count);
  if (threads == 1) {
    for (int i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(count);
  auto worker = [&]() {
    for (int i = next++; i < count; i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace twoprover

#endif  // TWOPROVER_PARALLEL_H_
