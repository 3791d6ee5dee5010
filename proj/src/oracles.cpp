#include "adelic/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "adelic/walk.hpp"

namespace adelic {

namespace {

double coefficient_factor_raw(double p, double b) { return (p - 1.0) / (p - std::pow(p, -b)); }

}  // namespace

double coefficient_factor(const Prime& p, double b) {
  return coefficient_factor_raw(p.as_double(), b);
}

double diffusion_constant(const Prime& p, double b, double sigma) {
  if (!(sigma >= 0.0)) throw std::invalid_argument("diffusion_constant: sigma must be >= 0");
  return coefficient_factor(p, b) * sigma;
}

double walk_sup_ball_prob(const Prime& p, double b, int k, std::int64_t n) {
  if (k < 1) {
    throw std::invalid_argument("walk_sup_ball_prob: radius exponent k must be >= 1, got " +
                                std::to_string(k));
  }
  if (n < 0) throw std::invalid_argument("walk_sup_ball_prob: step count must be >= 0");
  if (n == 0) return 1.0;
  const double escape = std::pow(p.as_double(), -b * k);
  return std::exp(static_cast<double>(n) * std::log1p(-escape));
}

double scaled_sup_survival(const Prime& p, double b, double sigma, int m, double T,
                           double lambda) {
  const int bracket = bracket_lambda(lambda, p).exponent();
  const int ceil_log = bracket + 1;
  if (m + ceil_log < 1) {
    throw std::domain_error("survival formula requires 1 <= m + ceil(log_p lambda); got m = " +
                            std::to_string(m) + ", ceil(log_p lambda) = " +
                            std::to_string(ceil_log) + " for p = " + std::to_string(p.value()));
  }
  const std::int64_t n = step_count(WalkParams(p, b, sigma, m), T);
  return walk_sup_ball_prob(p, b, m + ceil_log, n);
}

double scaled_sup_survival_limit(const Prime& p, double b, double sigma, double T,
                                 double lambda) {
  const int bracket = bracket_lambda(lambda, p).exponent();
  const double rate = coefficient_factor(p, b) * std::pow(p.as_double(), -b * (bracket + 1));
  return std::exp(-T * sigma * rate);
}

double limit_ball_prob(const Prime& p, double b, double sigma, double t, int k,
                       SeriesTolerance tol) {
  if (!(t >= 0.0)) throw std::invalid_argument("limit_ball_prob: t must be >= 0");
  if (!(tol.abs_tol > 0.0)) throw std::invalid_argument("limit_ball_prob: tolerance must be > 0");
  const double q = p.as_double();
  const double st = sigma * t;
  if (st == 0.0) return 1.0;
  const double log_p = std::log(q);
  auto factor = [&](int i) { return std::exp(-st * std::exp(-(k + i) * b * log_p)); };

  double sum = 0.0;
  double weight = 1.0 - 1.0 / q;  // (1 - 1/p) p^(-i)
  double remaining = 1.0;         // p^(-i): total weight of terms i, i+1, ...
  for (int i = 0;; ++i) {
    sum += weight * factor(i);
    remaining /= q;
    weight /= q;
    if (remaining < tol.abs_tol) {
      // Exponential factors increase with i, so the remainder is at least
      // remaining * factor(i + 1) and at most remaining.
      sum += remaining * factor(i + 1);
      break;
    }
  }
  return std::clamp(sum, 0.0, 1.0);
}

PrimeTailTable::PrimeTailTable(const SigmaSpec& sigma, double b, std::uint64_t prime_limit)
    : limit_(prime_limit) {
  std::vector<double> terms;
  auto add = [&](std::uint64_t p, double s) {
    primes_.push_back(p);
    terms.push_back(coefficient_factor_raw(static_cast<double>(p), b) * s);
  };
  if (sigma.finitely_supported()) {
    for (const auto& [p, v] : sigma.explicit_values()) {
      if (v > 0.0) add(p.value(), v);
    }
  } else {
    tail_a_ = sigma.tail()->a;
    tail_s_ = sigma.tail()->s;
    for (std::uint64_t p : cached_primes(prime_limit)) add(p, sigma.at(p));
    for (const auto& [p, v] : sigma.explicit_values()) {
      if (p.value() > prime_limit) add(p.value(), v);
    }
  }
  suffix_.assign(terms.size() + 1, 0.0);
  for (std::size_t i = terms.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + terms[i];
}

TailSum PrimeTailTable::at(std::uint64_t M) const {
  const auto i = static_cast<std::size_t>(std::lower_bound(primes_.begin(), primes_.end(), M) -
                                          primes_.begin());
  double remainder = 0.0;
  if (tail_a_ > 0.0) {
    const double from = static_cast<double>(std::max(limit_, M > 0 ? M - 1 : 0));
    remainder = tail_a_ * std::pow(from, 1.0 - tail_s_) / (tail_s_ - 1.0);
  }
  return {suffix_[i], remainder};
}

TailSum prime_tail_sum(const SigmaSpec& sigma, double b, std::uint64_t M,
                       std::uint64_t prime_limit) {
  return PrimeTailTable(sigma, b, prime_limit).at(M);
}

double adelic_survival_bound(const SigmaSpec& sigma, double b, std::uint64_t M, double T,
                             double c) {
  if (!(c > 1.0)) throw std::invalid_argument("adelic_survival_bound: c must exceed 1");
  const TailSum tail = prime_tail_sum(sigma, b, M);
  return std::exp(-c * T * (tail.value + tail.remainder_bound));
}

double adelic_sup_bound(const SigmaSpec& sigma, double b, double T, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("adelic_sup_bound: lambda must be positive");
  const TailSum total = prime_tail_sum(sigma, b, 2);
  return std::exp(-std::pow(lambda, -b) * T * (total.value + total.remainder_bound));
}

}  // namespace adelic
