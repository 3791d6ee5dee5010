#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace adelic {

// Evaluates fn(i) for every replica i < n on up to `workers` threads and
// returns the results in replica order. Each replica owns its slot, so the
// outcome does not depend on the worker count as long as fn(i) depends only
// on i. The first exception thrown by any replica is rethrown.
template <class Fn>
auto run_replicas(std::uint64_t n, unsigned workers, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, std::uint64_t>> {
  using R = std::invoke_result_t<Fn&, std::uint64_t>;
  static_assert(!std::is_same_v<R, bool>, "vector<bool> slots are not independent");
  std::vector<R> out(n);
  const auto threads = static_cast<unsigned>(std::min<std::uint64_t>(std::max(workers, 1u), n));
  if (threads <= 1) {
    for (std::uint64_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::uint64_t i = w; i < n; i += threads) out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace adelic
