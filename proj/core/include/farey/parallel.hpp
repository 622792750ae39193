#pragma once

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

#include "farey/ints.hpp"

namespace farey {

// Runs fn(i) for every i in [0, count). Indices are dealt to workers in
// fixed block-cyclic slices, so the index->worker assignment never depends
// on timing; callers that write fn's result to slot i of a preallocated
// buffer therefore produce output that is independent of the worker count.
// The lowest-indexed exception (if any) is rethrown after all workers join.
template <class Fn>
void parallel_index(i64 count, int jobs, Fn&& fn) {
  if (count <= 0) return;
  constexpr i64 block = 16;
  const i64 blocks = (count + block - 1) / block;
  if (jobs < 1) jobs = 1;
  if (static_cast<i64>(jobs) > blocks) jobs = static_cast<int>(blocks);

  if (jobs == 1) {
    for (i64 i = 0; i < count; ++i) fn(i);
    return;
  }

  std::mutex err_mutex;
  std::exception_ptr first_error;
  i64 first_error_block = blocks;

  auto worker = [&](int w) {
    for (i64 b = w; b < blocks; b += jobs) {
      {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (first_error && b > first_error_block) return;
      }
      const i64 lo = b * block;
      const i64 hi = std::min(lo + block, count);
      try {
        for (i64 i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error || b < first_error_block) {
          first_error = std::current_exception();
          first_error_block = b;
        }
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace farey
