// Copyright 2026 The Bargain Authors
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

#ifndef BARGAIN_PARALLEL_HPP_
#define BARGAIN_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bargain {

// Splits [0, count) into `blocks` contiguous ranges and runs
// fn(block, begin, end) for each on a small thread pool. The block layout
// depends only on `count` and `blocks`, never on the machine, so callers
// that reduce per-block results in block order get reproducible output.
template <class Fn>
void parallel_blocks(std::size_t count, std::size_t blocks, Fn&& fn) {
  if (count == 0) return;
  blocks = std::clamp<std::size_t>(blocks, 1, count);
  const std::size_t workers =
      std::min<std::size_t>(blocks, std::max(1u, std::thread::hardware_concurrency()));
  auto range = [&](std::size_t b) {
    return std::pair{count * b / blocks, count * (b + 1) / blocks};
  };
  if (workers == 1) {
    for (std::size_t b = 0; b < blocks; ++b) {
      auto [lo, hi] = range(b);
      fn(b, lo, hi);
    }
    return;
  }

  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t b = w; b < blocks; b += workers) {
        try {
          auto [lo, hi] = range(b);
          fn(b, lo, hi);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const std::size_t blocks = std::max(1u, std::thread::hardware_concurrency()) * 4;
  parallel_blocks(count, blocks, [&](std::size_t, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) fn(i);
  });
}

}  // namespace bargain

#endif  // BARGAIN_PARALLEL_HPP_
