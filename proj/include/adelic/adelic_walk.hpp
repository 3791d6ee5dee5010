#pragma once

#include <cstdint>
#include <map>

#include "adelic/rng.hpp"
#include "adelic/sigma.hpp"
#include "adelic/walk.hpp"

namespace adelic {

struct PrimeCutoff {
  std::uint64_t p_max;  // components with p < p_max are simulated
  double bound;         // P(some omitted component leaves Z_p before T) <= bound
};

// Smallest cutoff M with 1 - exp(-c T tail(M)) <= epsilon, where
// tail(M) = sum_{p >= M} coefficient_factor(p, b) sigma_p (plus its remainder
// bound). A candidate M is only accepted when exp(-c x) <= 1 - x holds for
// x = q^(-mb) at the smallest prime q >= M with sigma_q > 0; every larger
// prime then satisfies it too. For finitely supported sigma the search ends at
// 1 + (largest supported prime) with bound 0.
//
// Throws std::invalid_argument unless 0 < epsilon < 1, c > 1, T >= 0, and
// std::runtime_error when no cutoff up to the tail prime limit qualifies.
PrimeCutoff choose_prime_cutoff(const SigmaSpec& sigma, double b, int m, double T, double epsilon,
                                double c = 2.0);

// Independent single-prime walks over the active primes (p < cutoff with
// sigma_p > 0). Omitted primes are identically zero.
class AdelicPath {
 public:
  // Throws std::invalid_argument when a component is keyed by the wrong prime
  // or its horizon differs from the path horizon.
  AdelicPath(std::map<Prime, SinglePrimePath> components, std::uint64_t cutoff,
             double truncation_bound, double horizon);

  const std::map<Prime, SinglePrimePath>& components() const noexcept { return components_; }
  std::uint64_t cutoff() const noexcept { return cutoff_; }
  double truncation_bound() const noexcept { return truncation_bound_; }
  double horizon() const noexcept { return horizon_; }

 private:
  std::map<Prime, SinglePrimePath> components_;
  std::uint64_t cutoff_;
  double truncation_bound_;
  double horizon_;
};

// Component p draws from rng.substream(p).
AdelicPath simulate_adelic(const SigmaSpec& sigma, double b, int m, double T, double epsilon,
                           const RngStream& rng);

// Active primes for a cutoff: p < p_max with sigma_p > 0, increasing.
std::vector<Prime> active_primes(const SigmaSpec& sigma, std::uint64_t p_max);

}  // namespace adelic
