#pragma once

#include <cstdint>
#include <vector>

#include "adelic/padic.hpp"
#include "adelic/primes.hpp"
#include "adelic/sigma.hpp"

namespace adelic {

// Closed-form probabilities and bounds for the scaled walks and their limit.
// Everything here is a pure function of its arguments.

struct SeriesTolerance {
  double abs_tol = 1e-6;
};

inline constexpr std::uint64_t kDefaultTailPrimeLimit = 1'000'000;

// p^b (p - 1) / (p^(b+1) - 1), evaluated as (p - 1) / (p - p^(-b)). Always < 1.
double coefficient_factor(const Prime& p, double b);

// D = p^b (p - 1) sigma / (p^(b+1) - 1). Throws std::invalid_argument for sigma < 0.
double diffusion_constant(const Prime& p, double b, double sigma);

// P(sup_{j <= n} |S_j|_p <= p^k) = (1 - p^(-bk))^n. Throws std::invalid_argument
// for k < 1 or n < 0.
double walk_sup_ball_prob(const Prime& p, double b, int k, std::int64_t n);

// P(sup_{s <= T} |p^m S_{n(s)}|_p / p < lambda)
//   = (1 - (p [lambda]_p)^(-b) p^(-mb))^floor(D p^(mb) T).
// Requires 1 <= m + ceil(log_p lambda); throws std::domain_error naming the
// inequality otherwise.
double scaled_sup_survival(const Prime& p, double b, double sigma, int m, double T,
                           double lambda);

// m -> infinity limit of scaled_sup_survival:
//   exp(-T [lambda]_p^(-b) (p - 1) sigma / (p^(b+1) - 1)).
double scaled_sup_survival_limit(const Prime& p, double b, double sigma, double T, double lambda);

// P(|Y_t|_p <= p^k) for the limit process, by the radial series
//   (1 - 1/p) sum_{i >= 0} p^(-i) exp(-sigma t p^(-(k+i) b)).
// Terms stop once the geometric remainder p^(-i) drops below abs_tol; the
// remainder is then added at its lower bound.
double limit_ball_prob(const Prime& p, double b, double sigma, double t, int k,
                       SeriesTolerance tol = {});

struct TailSum {
  double value;
  double remainder_bound;
};

// Sum over primes q >= M of coefficient_factor(q, b) * sigma_q. Primes up to
// prime_limit are summed explicitly (largest first); the power-law tail
// beyond that is bounded by a * integral_{max(limit, M-1)}^inf x^(-s) dx.
class PrimeTailTable {
 public:
  PrimeTailTable(const SigmaSpec& sigma, double b,
                 std::uint64_t prime_limit = kDefaultTailPrimeLimit);

  TailSum at(std::uint64_t M) const;

  // Primes carrying a (possibly zero) term, increasing.
  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }

 private:
  std::vector<std::uint64_t> primes_;
  std::vector<double> suffix_;  // suffix_[i] = sum of terms i.. (largest first)
  std::uint64_t limit_;
  double tail_a_ = 0.0;
  double tail_s_ = 2.0;
};

TailSum prime_tail_sum(const SigmaSpec& sigma, double b, std::uint64_t M,
                       std::uint64_t prime_limit = kDefaultTailPrimeLimit);

// exp(-c T sum_{p >= M} coefficient_factor(p, b) sigma_p), with the tail sum
// taken at value + remainder_bound. Throws std::invalid_argument unless c > 1.
double adelic_survival_bound(const SigmaSpec& sigma, double b, std::uint64_t M, double T, double c);

// exp(-lambda^(-b) T sum_p coefficient_factor(p, b) sigma_p): lower bound on
// liminf_m P(sup_{s <= T} |x(s)|_A < lambda). Throws std::invalid_argument
// unless lambda > 0.
double adelic_sup_bound(const SigmaSpec& sigma, double b, double T, double lambda);

}  // namespace adelic
