#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace adelic {

// A rational prime. Construction checks primality by trial division and
// throws std::invalid_argument otherwise.
class Prime {
 public:
  explicit Prime(std::uint64_t p);

  std::uint64_t value() const noexcept { return p_; }
  double as_double() const noexcept { return static_cast<double>(p_); }

  friend auto operator<=>(const Prime&, const Prime&) = default;

 private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

// All primes <= n in increasing order (sieve of Eratosthenes). Empty for n < 2.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

// Process-wide cached sieve up to at least n. The returned span stays valid
// for the lifetime of the program.
std::span<const std::uint64_t> cached_primes(std::uint64_t n);

// Smallest prime >= n.
std::uint64_t next_prime(std::uint64_t n);

}  // namespace adelic
