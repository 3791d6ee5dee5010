#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "adelic/primes.hpp"

namespace adelic {

// sigma_p = a * p^(-s) for every prime without an explicit entry.
struct PowerTail {
  double a;
  double s;
};

// Diffusion coefficients sigma_p >= 0: explicit per-prime values plus an
// optional summable power-law tail.
class SigmaSpec {
 public:
  SigmaSpec() = default;
  // Throws std::invalid_argument for negative or non-finite values, a < 0,
  // or s <= 1 (the tail would not be summable).
  explicit SigmaSpec(std::map<Prime, double> explicit_values,
                     std::optional<PowerTail> tail = std::nullopt);

  double at(const Prime& p) const;
  double at(std::uint64_t p) const;

  const std::map<Prime, double>& explicit_values() const noexcept { return explicit_; }
  const std::optional<PowerTail>& tail() const noexcept { return tail_; }

  // True when only finitely many sigma_p are nonzero.
  bool finitely_supported() const noexcept { return !tail_ || tail_->a == 0.0; }
  // Largest prime with sigma_p > 0; nullopt when sigma is identically zero
  // or not finitely supported.
  std::optional<std::uint64_t> max_supported_prime() const;

 private:
  std::map<Prime, double> explicit_;
  std::optional<PowerTail> tail_;
};

}  // namespace adelic
