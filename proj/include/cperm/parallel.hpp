#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "cperm/enumerate.hpp"

namespace cperm {

/// CPERM_JOBS if set and positive, otherwise the hardware concurrency.
int default_jobs();

/// Splits [0, total) into chunks handed out through an atomic counter.
/// Each worker folds its chunks into a private accumulator; the results are
/// merged in worker order. Merging must be associative and commutative for
/// the result to be independent of `jobs`.
template <class Acc, class Make, class Work, class Merge>
Acc parallel_fold(std::uint64_t total, int jobs, Make make, Work work, Merge merge) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || total <= 1) {
    Acc acc = make();
    if (total > 0) work(acc, std::uint64_t{0}, total);
    return acc;
  }
  const std::uint64_t chunks = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(jobs) * 16);
  const std::uint64_t step = (total + chunks - 1) / chunks;
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  std::vector<Acc> partial;
  partial.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w) partial.push_back(make());

  auto body = [&](int w) {
    try {
      for (;;) {
        const std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
        const std::uint64_t begin = c * step;
        if (begin >= total) break;
        work(partial[static_cast<std::size_t>(w)], begin, std::min(total, begin + step));
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(jobs - 1));
  for (int w = 1; w < jobs; ++w) threads.emplace_back(body, w);
  body(0);
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);

  Acc result = std::move(partial[0]);
  for (std::size_t w = 1; w < partial.size(); ++w) merge(result, std::move(partial[w]));
  return result;
}

/// Map-reduce over a family: `visit(acc, p)` for every element.
template <class Acc, class Make, class Visit, class Merge>
Acc map_reduce(const FamilySpec& spec, int jobs, Make make, Visit visit, Merge merge) {
  spec.validate();
  return parallel_fold<Acc>(
      rank_space(spec), jobs, make,
      [&](Acc& acc, std::uint64_t begin, std::uint64_t end) {
        enumerate_range(spec, begin, end, [&](const ColoredPermutation& p) { visit(acc, p); });
      },
      merge);
}

}  // namespace cperm
