#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "adelic/padic.hpp"
#include "adelic/primes.hpp"
#include "support.hpp"

using namespace adelic;
using adelic::testing::random_gp;
using adelic::testing::rational_gp_add;

TEST_CASE("prime sieve agrees with trial division and known counts") {
  const auto primes = primes_up_to(1'000'000);
  CHECK(primes.size() == 78498);
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(2) == std::vector<std::uint64_t>{2});
  for (std::uint64_t n = 0; n < 2000; ++n) {
    const bool listed = std::binary_search(primes.begin(), primes.end(), n);
    CHECK(listed == is_prime(n));
  }
  CHECK(cached_primes(100).size() >= 25);
  CHECK(next_prime(14) == 17);
  CHECK(next_prime(17) == 17);
  CHECK_THROWS_AS(Prime(1), std::invalid_argument);
  CHECK_THROWS_AS(Prime(91), std::invalid_argument);
}

TEST_CASE("digit storage is canonical") {
  const Prime p(3);
  QpDigits x(p, {{-2, 1}, {-1, 0}, {-3, 2}});
  REQUIRE(x.digits().size() == 2);
  CHECK(x.digits()[0] == Digit{-3, 2});
  CHECK(x.digit_at(-1) == 0);
  CHECK(x.min_index() == -3);
  CHECK(x.in_gp());
  CHECK_FALSE(QpDigits(p, {{0, 1}}).in_gp());
  CHECK_THROWS_AS(QpDigits(p, {{-1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(QpDigits(p, {{-1, 1}, {-1, 2}}), std::invalid_argument);
  CHECK(QpDigits(p).is_zero());
  CHECK_FALSE(QpDigits(p).min_index().has_value());
}

TEST_CASE("norms and distances") {
  const Prime p(2);
  CHECK(qp_abs(QpDigits(p)).is_zero());
  CHECK(qp_abs(QpDigits(p, {{-3, 1}, {-1, 1}})) == RadialValue::power(3));
  CHECK(qp_abs(QpDigits(p, {{2, 1}})).to_real(p) == 0.25);
  CHECK(RadialValue::zero().to_real(p) == 0.0);
  CHECK(RadialValue::zero() < RadialValue::power(-40));
  CHECK(RadialValue::power(2).scaled(-3) == RadialValue::power(-1));

  const QpDigits a(p, {{-3, 1}, {-1, 1}});
  const QpDigits b(p, {{-3, 1}, {-2, 1}});
  CHECK(qp_distance(a, b) == RadialValue::power(2));
  CHECK(qp_distance(a, a).is_zero());
  CHECK_THROWS_AS(qp_distance(a, QpDigits(Prime(3))), std::invalid_argument);
}

TEST_CASE("norm matches the rational valuation oracle") {
  RngStream rng(11, 0);
  for (std::uint64_t pv : {2, 3, 5, 7}) {
    const Prime p(pv);
    for (int trial = 0; trial < 200; ++trial) {
      const int depth = 1 + static_cast<int>(rng.uniform_below(8));
      const QpDigits x = random_gp(p, depth, rng);
      std::int64_t num = 0;
      std::int64_t den = 1;
      for (int i = 0; i < depth; ++i) den *= static_cast<std::int64_t>(pv);
      for (const auto& d : x.digits()) {
        std::int64_t scale = 1;
        for (int i = 0; i < depth + d.index; ++i) scale *= static_cast<std::int64_t>(pv);
        num += static_cast<std::int64_t>(d.value) * scale;
      }
      CHECK(qp_abs(x) == (num == 0 ? RadialValue::zero()
                                   : rational_valuation_oracle(num, den, p)));
    }
  }
  CHECK(rational_valuation_oracle(12, 1, Prime(2)) == RadialValue::power(-2));
  CHECK(rational_valuation_oracle(1, 18, Prime(3)) == RadialValue::power(2));
  CHECK_THROWS_AS(rational_valuation_oracle(1, 0, Prime(3)), std::invalid_argument);
}

TEST_CASE("distance is an ultrametric") {
  RngStream rng(12, 0);
  const Prime p(3);
  for (int trial = 0; trial < 500; ++trial) {
    const QpDigits x = random_gp(p, 4, rng);
    const QpDigits y = random_gp(p, 4, rng);
    const QpDigits z = random_gp(p, 4, rng);
    CHECK(qp_distance(x, y) == qp_distance(y, x));
    CHECK(qp_distance(x, z) <= std::max(qp_distance(x, y), qp_distance(y, z)));
  }
}

TEST_CASE("gp_add matches exact rational addition mod 1") {
  RngStream rng(13, 0);
  for (std::uint64_t pv : {2, 3, 5, 7, 101}) {
    const Prime p(pv);
    for (int trial = 0; trial < 300; ++trial) {
      const auto x = random_gp(p, 1 + static_cast<int>(rng.uniform_below(12)), rng);
      const auto y = random_gp(p, 1 + static_cast<int>(rng.uniform_below(12)), rng);
      const QpDigits sum = gp_add(x, y);
      CHECK(sum == rational_gp_add(x, y));
      CHECK(sum == gp_add(y, x));
      CHECK(sum.in_gp());
    }
  }
}

TEST_CASE("gp_add carries and wraps") {
  const Prime p(2);
  const QpDigits half(p, {{-1, 1}});
  CHECK(gp_add(half, half).is_zero());
  const QpDigits quarter(p, {{-2, 1}});
  CHECK(gp_add(quarter, quarter) == half);
  const QpDigits three_quarters(p, {{-2, 1}, {-1, 1}});
  CHECK(gp_add(three_quarters, quarter).is_zero());
  CHECK(gp_add(half, QpDigits(p)) == half);
  CHECK_THROWS_AS(gp_add(half, QpDigits(Prime(3), {{-1, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(gp_add(half, QpDigits(p, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("shift moves digit indices") {
  const Prime p(5);
  const QpDigits x(p, {{-4, 3}, {-2, 1}});
  const QpDigits y = qp_shift(x, 3);
  CHECK(y.digit_at(-1) == 3);
  CHECK(y.digit_at(1) == 1);
  CHECK(qp_abs(y) == qp_abs(x).scaled(-3));
  CHECK(qp_shift(y, -3) == x);
}

TEST_CASE("bracket_lambda is the largest power strictly below lambda") {
  CHECK(bracket_lambda(1.0, Prime(2)) == RadialValue::power(-1));
  CHECK(bracket_lambda(2.0, Prime(2)) == RadialValue::power(0));
  CHECK(bracket_lambda(3.0, Prime(2)) == RadialValue::power(1));
  CHECK(bracket_lambda(Rational{1, 9}, Prime(3)) == RadialValue::power(-3));
  CHECK(bracket_lambda(Rational{10, 9}, Prime(3)) == RadialValue::power(0));
  CHECK_THROWS_AS(bracket_lambda(0.0, Prime(2)), std::invalid_argument);
  CHECK_THROWS_AS(bracket_lambda(-1.0, Prime(2)), std::invalid_argument);

  RngStream rng(14, 0);
  for (std::uint64_t pv : {2, 3, 7}) {
    const Prime p(pv);
    for (int trial = 0; trial < 300; ++trial) {
      const double lambda = std::exp(40.0 * (rng.uniform_open() - 0.5));
      const RadialValue b = bracket_lambda(lambda, p);
      const double below = b.to_real(p);
      CHECK(below < lambda);
      CHECK(below * p.as_double() >= lambda);
    }
  }
}

TEST_CASE("adelic absolute value") {
  AdelePoint x;
  CHECK(adelic_abs(x) == 0.0);
  x.set(QpDigits(Prime(2), {{-3, 1}}));
  x.set(QpDigits(Prime(5), {{-1, 2}}));
  CHECK(adelic_abs(x) == doctest::Approx(4.0));
  x.set(QpDigits(Prime(5), {{-2, 2}}));
  CHECK(adelic_abs(x) == doctest::Approx(5.0));
  CHECK(x.components().size() == 2);
}
