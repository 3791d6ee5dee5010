#pragma once

// Shared helpers for the unit and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "adelic/padic.hpp"
#include "adelic/rng.hpp"
#include "adelic/skorokhod.hpp"

namespace adelic::testing {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// Random element of G_p with digits at indices -depth .. -1.
inline QpDigits random_gp(const Prime& p, int depth, RngStream& rng) {
  std::vector<Digit> digits;
  for (int i = 1; i <= depth; ++i) digits.push_back({-i, rng.uniform_below(p.value())});
  return QpDigits(p, digits);
}

// The rational sum_k a(k) p^k.
inline cpp_rational to_rational(const QpDigits& x) {
  cpp_rational out = 0;
  const cpp_int p = x.prime().value();
  for (const auto& d : x.digits()) {
    cpp_int scale = boost::multiprecision::pow(p, static_cast<unsigned>(std::abs(d.index)));
    out += d.index < 0 ? cpp_rational(cpp_int(d.value), scale)
                       : cpp_rational(cpp_int(d.value) * scale);
  }
  return out;
}

// Fractional part of q >= 0 expanded in base p; q must have a p-power
// denominator.
inline QpDigits from_fraction(const Prime& p, cpp_rational q) {
  const cpp_int whole = boost::multiprecision::numerator(q) / boost::multiprecision::denominator(q);
  q -= whole;
  std::vector<Digit> digits;
  for (int i = -1; q != 0; --i) {
    if (i < -4096) throw std::logic_error("denominator is not a power of p");
    q *= p.value();
    const cpp_int d = boost::multiprecision::numerator(q) / boost::multiprecision::denominator(q);
    digits.push_back({i, d.convert_to<std::uint64_t>()});
    q -= d;
  }
  return QpDigits(p, digits);
}

// Addition in Q / Z through exact rationals.
inline QpDigits rational_gp_add(const QpDigits& x, const QpDigits& y) {
  return from_fraction(x.prime(), to_rational(x) + to_rational(y));
}

// Step path on [0, T) with up to max_jumps jumps at distinct random times and
// random G_p values of depth <= 3, so that distances repeat often.
inline StepPath random_step_path(const Prime& p, std::size_t max_jumps, double T, RngStream& rng) {
  const std::size_t jumps = rng.uniform_below(max_jumps + 1);
  std::vector<double> times;
  while (times.size() < jumps) {
    // Times on a coarse grid make gaps equal to delta likely.
    const double t = T * static_cast<double>(1 + rng.uniform_below(39)) / 40.0;
    if (std::find(times.begin(), times.end(), t) == times.end()) times.push_back(t);
  }
  std::sort(times.begin(), times.end());
  std::vector<QpDigits> values{QpDigits(p)};
  for (std::size_t i = 0; i < jumps; ++i) {
    values.push_back(random_gp(p, 1 + static_cast<int>(rng.uniform_below(3)), rng));
  }
  return StepPath::from_values(times, values, 0, NormContext::padic);
}

}  // namespace adelic::testing
