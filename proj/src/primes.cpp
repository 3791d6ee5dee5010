#include "adelic/primes.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace adelic {

Prime::Prime(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("not a prime: " + std::to_string(p));
  }
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

std::span<const std::uint64_t> cached_primes(std::uint64_t n) {
  static std::mutex mutex;
  static std::map<std::uint64_t, std::unique_ptr<const std::vector<std::uint64_t>>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.lower_bound(n);
  if (it == cache.end()) {
    it = cache.emplace(n, std::make_unique<const std::vector<std::uint64_t>>(primes_up_to(n)))
             .first;
  }
  const auto& all = *it->second;
  auto end = std::upper_bound(all.begin(), all.end(), n);
  return {all.data(), static_cast<std::size_t>(end - all.begin())};
}

std::uint64_t next_prime(std::uint64_t n) {
  if (n <= 2) return 2;
  std::uint64_t c = n | 1;
  while (!is_prime(c)) c += 2;
  return c;
}

}  // namespace adelic
