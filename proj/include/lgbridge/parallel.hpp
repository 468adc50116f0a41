// Deterministic fan-out/reduce over an index range.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace lgbridge {

namespace detail {
inline std::atomic<unsigned>& worker_setting() {
  static std::atomic<unsigned> value{0};
  return value;
}
}  // namespace detail

/// 0 means one worker per hardware thread.
inline void set_worker_count(unsigned workers) { detail::worker_setting() = workers; }

inline unsigned worker_count() {
  unsigned w = detail::worker_setting();
  if (w == 0) w = std::max(1u, std::thread::hardware_concurrency());
  return w;
}

/// Splits [0, count) into contiguous chunks, runs body(i, acc) over each
/// chunk into a chunk-local accumulator, then folds the accumulators with
/// combine(total, part) in chunk order. The result does not depend on the
/// worker count whenever combine is associative.
template <class Acc, class Body, class Combine>
Acc parallel_reduce(std::size_t count, Acc init, Body body, Combine combine) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i, init);
    return init;
  }
  std::vector<Acc> parts(workers, init);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) body(i, parts[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Acc total = std::move(parts[0]);
  for (std::size_t w = 1; w < workers; ++w) combine(total, parts[w]);
  return total;
}

}  // namespace lgbridge
