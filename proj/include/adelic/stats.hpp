#pragma once

#include <cstdint>
#include <span>

namespace adelic::stats {

// DKW band sqrt(ln(2 / alpha) / (2 n)).
double dkw_epsilon(std::uint64_t n, double alpha);

struct Interval {
  double lo;
  double hi;

  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
  double half_width() const noexcept { return 0.5 * (hi - lo); }
};

// Exact two-sided Clopper-Pearson interval at confidence 1 - alpha.
Interval clopper_pearson(std::uint64_t successes, std::uint64_t trials, double alpha);

// Upper critical value of the chi-square distribution: P(X > c) = alpha.
double chi_square_critical(double dof, double alpha);
// P(X > statistic) for X chi-square with dof degrees of freedom.
double chi_square_pvalue(double statistic, double dof);

// Pearson goodness-of-fit statistic against equal cell probabilities.
double chi_square_uniform(std::span<const std::uint64_t> counts);

// Pearson statistic of a 2x2 contingency table [[a, b], [c, d]]; 0 when a
// margin is empty.
double chi_square_2x2(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d);

// Least-squares slope of y on x.
double ols_slope(std::span<const double> x, std::span<const double> y);

}  // namespace adelic::stats
