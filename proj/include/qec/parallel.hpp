// Copyright 2026 The qec Authors
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

#ifndef QEC_PARALLEL_HPP_
#define QEC_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace qec {

// Runs fn(shard) for shard in [0, shards) on separate threads (inline when
// shards == 1) and rethrows the first exception after all workers join.
template <typename Fn>
void run_shards(int shards, Fn&& fn) {
  shards = std::max(shards, 1);
  if (shards == 1) {
    fn(0);
    return;
  }
  std::exception_ptr failure;
  std::mutex mu;
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(shards));
  for (int s = 0; s < shards; ++s) {
    workers.emplace_back([&, s] {
      try {
        fn(s);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
}

// Half-open slice [begin, end) of `total` items owned by `shard`.
inline std::pair<std::size_t, std::size_t> shard_range(std::size_t total,
                                                       int shard, int shards) {
  const auto s = static_cast<std::size_t>(shard);
  const auto k = static_cast<std::size_t>(std::max(shards, 1));
  return {total * s / k, total * (s + 1) / k};
}

int default_shards();

}  // namespace qec

#endif  // QEC_PARALLEL_HPP_
