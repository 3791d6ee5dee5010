#include "adelic/sigma.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace adelic {

SigmaSpec::SigmaSpec(std::map<Prime, double> explicit_values, std::optional<PowerTail> tail)
    : explicit_(std::move(explicit_values)), tail_(tail) {
  for (const auto& [p, v] : explicit_) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("sigma_" + std::to_string(p.value()) +
                                  " must be finite and >= 0");
    }
  }
  if (tail_) {
    if (!(tail_->a >= 0.0) || !std::isfinite(tail_->a)) {
      throw std::invalid_argument("sigma tail amplitude must be finite and >= 0");
    }
    if (!(tail_->s > 1.0) || !std::isfinite(tail_->s)) {
      throw std::invalid_argument("sigma tail exponent s must exceed 1 (sum of sigma_p diverges)");
    }
  }
}

double SigmaSpec::at(const Prime& p) const { return at(p.value()); }

// Callers pass primes; no primality check here, the table scans rely on it.
double SigmaSpec::at(std::uint64_t p) const {
  for (const auto& [q, v] : explicit_) {
    if (q.value() == p) return v;
  }
  if (tail_) return tail_->a * std::pow(static_cast<double>(p), -tail_->s);
  return 0.0;
}

std::optional<std::uint64_t> SigmaSpec::max_supported_prime() const {
  if (!finitely_supported()) return std::nullopt;
  std::optional<std::uint64_t> best;
  for (const auto& [p, v] : explicit_) {
    if (v > 0.0) best = p.value();
  }
  return best;
}

}  // namespace adelic
