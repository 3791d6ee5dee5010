#include "adelic/stats.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/chi_squared.hpp>

namespace adelic::stats {

double dkw_epsilon(std::uint64_t n, double alpha) {
  if (n == 0) throw std::invalid_argument("dkw_epsilon: need at least one sample");
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("dkw_epsilon: alpha in (0, 1)");
  return std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(n)));
}

Interval clopper_pearson(std::uint64_t successes, std::uint64_t trials, double alpha) {
  if (trials == 0 || successes > trials) {
    throw std::invalid_argument("clopper_pearson: need 0 <= successes <= trials, trials > 0");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("clopper_pearson: alpha in (0, 1)");
  const auto k = static_cast<double>(successes);
  const auto n = static_cast<double>(trials);
  Interval out{0.0, 1.0};
  if (successes > 0) {
    out.lo = boost::math::quantile(boost::math::beta_distribution<>(k, n - k + 1.0), alpha / 2.0);
  }
  if (successes < trials) {
    out.hi =
        boost::math::quantile(boost::math::beta_distribution<>(k + 1.0, n - k), 1.0 - alpha / 2.0);
  }
  return out;
}

double chi_square_critical(double dof, double alpha) {
  return boost::math::quantile(boost::math::complement(boost::math::chi_squared(dof), alpha));
}

double chi_square_pvalue(double statistic, double dof) {
  if (statistic <= 0.0) return 1.0;
  return boost::math::cdf(boost::math::complement(boost::math::chi_squared(dof), statistic));
}

double chi_square_uniform(std::span<const std::uint64_t> counts) {
  if (counts.empty()) return 0.0;
  double total = 0.0;
  for (auto c : counts) total += static_cast<double>(c);
  if (total == 0.0) return 0.0;
  const double expected = total / static_cast<double>(counts.size());
  double stat = 0.0;
  for (auto c : counts) {
    const double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  return stat;
}

double chi_square_2x2(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  const double n = static_cast<double>(a + b + c + d);
  const double rows[2] = {static_cast<double>(a + b), static_cast<double>(c + d)};
  const double cols[2] = {static_cast<double>(a + c), static_cast<double>(b + d)};
  if (rows[0] == 0 || rows[1] == 0 || cols[0] == 0 || cols[1] == 0) return 0.0;
  const double observed[2][2] = {{static_cast<double>(a), static_cast<double>(b)},
                                 {static_cast<double>(c), static_cast<double>(d)}};
  double stat = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double expected = rows[i] * cols[j] / n;
      const double diff = observed[i][j] - expected;
      stat += diff * diff / expected;
    }
  }
  return stat;
}

double ols_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("ols_slope: need at least two paired points");
  }
  const auto n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0.0) throw std::invalid_argument("ols_slope: x values are all equal");
  return sxy / sxx;
}

}  // namespace adelic::stats
