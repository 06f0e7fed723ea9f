// Copyright 2026 simcim developers
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

#ifndef SIMCIM_PARALLEL_HPP
#define SIMCIM_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace simcim {

inline int resolve_thread_count(int n_threads) {
  if (n_threads > 0) return n_threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs fn(task_index) for every index in [0, n_tasks) on a transient
// worker pool. Task outputs must go to disjoint slots; the decomposition
// into tasks is fixed by the caller, so results do not depend on the
// thread count. The first exception (by task index) is rethrown after all
// workers stop.
template <typename Fn>
void parallel_for(std::size_t n_tasks, int n_threads, Fn&& fn) {
  n_threads = resolve_thread_count(n_threads);
  if (n_tasks == 0) return;
  if (n_threads == 1 || n_tasks == 1) {
    for (std::size_t i = 0; i < n_tasks; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::vector<std::exception_ptr> errors(n_tasks);

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n_tasks || abort.load()) return;
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
        abort.store(true);
        return;
      }
    }
  };

  const int workers =
      static_cast<int>(std::min<std::size_t>(n_tasks, n_threads));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
}

}  // namespace simcim

#endif  // SIMCIM_PARALLEL_HPP
