/*
 * Copyright 2026 The modkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <thread>
#include <type_traits>
#include <vector>

namespace modkit {

/// out[i] = fn(i) for i in [0, n), using up to `threads` workers over
/// contiguous chunks. Results land by index, so output does not depend on
/// the thread count.
template <class Fn>
auto parallel_map(std::size_t n, unsigned threads, Fn&& fn) {
  using R = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<R> out(n);
  threads = std::max(1u, threads);
  if (threads == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  const std::size_t chunk = (n + threads - 1) / threads;
  {
    std::vector<std::jthread> workers;
    for (std::size_t begin = 0; begin < n; begin += chunk) {
      workers.emplace_back([&, begin] {
        const auto end = std::min(n, begin + chunk);
        for (std::size_t i = begin; i < end; ++i) out[i] = fn(i);
      });
    }
  }
  return out;
}

}  // namespace modkit
