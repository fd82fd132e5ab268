// Copyright 2026 The qnetinterf Authors
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

#ifndef QNETINTERF_PARALLEL_H_
#define QNETINTERF_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qnetinterf {

/// Runs fn(chunk) for every chunk in [0, num_chunks) on up to `threads`
/// workers. Chunks are claimed dynamically; callers write into per-chunk
/// slots and reduce them in index order, so results never depend on the
/// worker count. The first exception thrown by any chunk is rethrown.
template <typename Fn>
void parallel_for_chunks(std::uint64_t num_chunks, int threads, Fn&& fn) {
  const std::uint64_t workers =
      std::min<std::uint64_t>(num_chunks, static_cast<std::uint64_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::uint64_t c = 0; c < num_chunks; ++c) {
      fn(c);
    }
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::uint64_t c = next++; c < num_chunks; c = next++) {
      try {
        fn(c);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) {
          error = std::current_exception();
        }
        next = num_chunks;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::uint64_t w = 0; w < workers; ++w) {
    pool.emplace_back(work);
  }
  for (auto& t : pool) {
    t.join();
  }
  if (error) {
    std::rethrow_exception(error);
  }
}

}  // namespace qnetinterf

#endif  // QNETINTERF_PARALLEL_H_
