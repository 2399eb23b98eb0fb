// Copyright 2026 The Authors.
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

// Internal work-splitting helpers. Results are always merged in index order,
// so outputs do not depend on the number of workers.

#ifndef DCA_SRC_PARALLEL_H_
#define DCA_SRC_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "dca/axioms.h"

namespace dca::internal {

struct RowOutcome {
  std::uint64_t pairs = 0;
  std::optional<Witness> witness;
};

struct SweepResult {
  std::optional<Witness> witness;
  std::uint64_t pairs = 0;
};

// Runs row_fn(r) for r = 0, 1, ... and stops at the first row reporting a
// witness. With several workers, rows are claimed in increasing order and
// rows past a known violation are skipped; the merge then replays rows in
// order, which reproduces the sequential result exactly.
template <typename RowFn>
SweepResult SweepRows(std::size_t num_rows, int threads, RowFn&& row_fn) {
  SweepResult result;
  if (threads <= 1 || num_rows < 2) {
    for (std::size_t r = 0; r < num_rows; ++r) {
      RowOutcome out = row_fn(r);
      result.pairs += out.pairs;
      if (out.witness) {
        result.witness = std::move(out.witness);
        return result;
      }
    }
    return result;
  }

  std::vector<RowOutcome> outcomes(num_rows);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_bad{num_rows};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    try {
      while (true) {
        const std::size_t r = next.fetch_add(1);
        if (r >= num_rows || r > first_bad.load()) break;
        outcomes[r] = row_fn(r);
        if (outcomes[r].witness) {
          std::size_t cur = first_bad.load();
          while (r < cur && !first_bad.compare_exchange_weak(cur, r)) {
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (!error) error = std::current_exception();
      first_bad.store(0);
    }
  };
  const int n_workers =
      static_cast<int>(std::min<std::size_t>(threads, num_rows));
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (int t = 0; t < n_workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  for (std::size_t r = 0; r < num_rows; ++r) {
    result.pairs += outcomes[r].pairs;
    if (outcomes[r].witness) {
      result.witness = std::move(outcomes[r].witness);
      return result;
    }
  }
  return result;
}

// Calls fn(index) for every index in [0, count), spreading contiguous chunks
// over `threads` workers. fn must only write to per-index storage.
template <typename Fn>
void ParallelFor(std::size_t count, int threads, Fn&& fn,
                 std::size_t chunk = 64) {
  if (threads <= 1 || count <= chunk) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  const std::size_t num_chunks = (count + chunk - 1) / chunk;
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    try {
      while (true) {
        const std::size_t c = next.fetch_add(1);
        if (c >= num_chunks) break;
        const std::size_t end = std::min(count, (c + 1) * chunk);
        for (std::size_t k = c * chunk; k < end; ++k) fn(k);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (!error) error = std::current_exception();
      next.store(num_chunks);
    }
  };
  const int n_workers =
      static_cast<int>(std::min<std::size_t>(threads, num_chunks));
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (int t = 0; t < n_workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace dca::internal

#endif  // DCA_SRC_PARALLEL_H_
