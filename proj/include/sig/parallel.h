/*
 * Copyright 2026 The SIG Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SIG_PARALLEL_H_
#define SIG_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace sig {

// Worker count: hardware concurrency, capped by the SIG_THREADS environment
// variable when set to a positive integer.
std::size_t WorkerCount();

// Runs fn(i) for i in [0, n) on up to WorkerCount() threads. Each index is
// visited exactly once; fn must only write to index-owned state.
// While alive, caps WorkerCount() at `limit` process-wide (used to keep
// benchmark timings single-threaded).
class ScopedWorkerLimit {
 public:
  explicit ScopedWorkerLimit(std::size_t limit);
  ~ScopedWorkerLimit();
  ScopedWorkerLimit(const ScopedWorkerLimit&) = delete;
  ScopedWorkerLimit& operator=(const ScopedWorkerLimit&) = delete;

 private:
  std::size_t previous_;
};

void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace sig

#endif  // SIG_PARALLEL_H_
