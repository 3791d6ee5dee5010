#include "adelic/adelic_walk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "adelic/oracles.hpp"

namespace adelic {

namespace {

// exp(-c x) <= 1 - x for x = q^(-mb). The set of valid x is an interval
// [0, x*], so the check at the smallest relevant prime covers all larger ones.
bool exponential_comparison_holds(std::uint64_t q, double b, int m, double c) {
  const double x = std::pow(static_cast<double>(q), -m * b);
  return std::exp(-c * x) <= 1.0 - x;
}

}  // namespace

PrimeCutoff choose_prime_cutoff(const SigmaSpec& sigma, double b, int m, double T, double epsilon,
                                double c) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("choose_prime_cutoff: epsilon must lie in (0, 1)");
  }
  if (!(c > 1.0)) throw std::invalid_argument("choose_prime_cutoff: c must exceed 1");
  if (!(T >= 0.0)) throw std::invalid_argument("choose_prime_cutoff: T must be >= 0");

  const PrimeTailTable table(sigma, b);
  const auto& listed = table.primes();

  // Smallest listed prime >= M carrying a positive coefficient.
  auto first_supported = [&](std::uint64_t M) -> std::optional<std::uint64_t> {
    for (auto it = std::lower_bound(listed.begin(), listed.end(), M); it != listed.end(); ++it) {
      if (sigma.at(*it) > 0.0) return *it;
    }
    return std::nullopt;
  };
  auto try_cutoff = [&](std::uint64_t M) -> std::optional<PrimeCutoff> {
    const TailSum tail = table.at(M);
    const double bound = -std::expm1(-c * T * (tail.value + tail.remainder_bound));
    if (bound > epsilon) return std::nullopt;
    if (auto q = first_supported(M); q && !exponential_comparison_holds(*q, b, m, c)) {
      return std::nullopt;
    }
    return PrimeCutoff{M, bound};
  };

  if (sigma.finitely_supported()) {
    const auto top = sigma.max_supported_prime();
    if (!top) return {2, 0.0};
    for (std::uint64_t M : cached_primes(*top)) {
      if (auto found = try_cutoff(M)) return *found;
    }
    return {*top + 1, 0.0};
  }
  for (std::uint64_t M : cached_primes(kDefaultTailPrimeLimit)) {
    if (auto found = try_cutoff(M)) return *found;
  }
  throw std::runtime_error("choose_prime_cutoff: no cutoff up to " +
                           std::to_string(kDefaultTailPrimeLimit) + " achieves epsilon = " +
                           std::to_string(epsilon) + " with c = " + std::to_string(c) +
                           " at m = " + std::to_string(m));
}

AdelicPath::AdelicPath(std::map<Prime, SinglePrimePath> components, std::uint64_t cutoff,
                       double truncation_bound, double horizon)
    : components_(std::move(components)),
      cutoff_(cutoff),
      truncation_bound_(truncation_bound),
      horizon_(horizon) {
  for (const auto& [p, path] : components_) {
    if (path.params().prime() != p) {
      throw std::invalid_argument("adelic component keyed by the wrong prime");
    }
    if (path.horizon() != horizon_) {
      throw std::invalid_argument("adelic components must share the path horizon");
    }
  }
}

std::vector<Prime> active_primes(const SigmaSpec& sigma, std::uint64_t p_max) {
  std::vector<Prime> out;
  if (p_max <= 2) return out;
  for (std::uint64_t p : cached_primes(p_max - 1)) {
    if (sigma.at(p) > 0.0) out.emplace_back(p);
  }
  return out;
}

AdelicPath simulate_adelic(const SigmaSpec& sigma, double b, int m, double T, double epsilon,
                           const RngStream& rng) {
  const PrimeCutoff cutoff = choose_prime_cutoff(sigma, b, m, T, epsilon);
  std::map<Prime, SinglePrimePath> components;
  for (const Prime& p : active_primes(sigma, cutoff.p_max)) {
    RngStream stream = rng.substream(p.value());
    components.emplace(p, simulate_single(WalkParams(p, b, sigma.at(p), m), T, stream));
  }
  return AdelicPath(std::move(components), cutoff.p_max, cutoff.bound, T);
}

}  // namespace adelic
