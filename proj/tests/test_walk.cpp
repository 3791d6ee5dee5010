#include <doctest.h>

#include <cmath>
#include <memory>
#include <set>

#include "adelic/sampling.hpp"
#include "adelic/stats.hpp"
#include "adelic/walk.hpp"

using namespace adelic;

TEST_CASE("rng streams are reproducible and distinct") {
  RngStream a(5, 9);
  RngStream b(5, 9);
  RngStream c(5, 10);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const double x = a.uniform_open();
    CHECK(x == b.uniform_open());
    CHECK(x > 0.0);
    CHECK(x < 1.0);
    differs |= x != c.uniform_open();
  }
  CHECK(differs);
  const RngStream parent(5, 9);
  RngStream s1 = parent.substream(2);
  RngStream s2 = parent.substream(2);
  RngStream s3 = parent.substream(3);
  CHECK(s1.uniform_below(1000000) == s2.uniform_below(1000000));
  CHECK(s1.engine()() != s3.engine()());
  CHECK(mix_keys({1, 2}) != mix_keys({2, 1}));
}

TEST_CASE("jump law probabilities") {
  for (auto [pv, b] : {std::pair{2ull, 1.0}, {3ull, 0.5}, {5ull, 2.0}}) {
    const JumpLaw law(Prime(pv), b);
    double total = 0.0;
    for (int k = 1; k < 400; ++k) total += law.pmf(k);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(law.tail(0) == 1.0);
    CHECK(law.pmf(0) == 0.0);
    for (int k = 1; k < 10; ++k) {
      CHECK(law.tail(k) == doctest::Approx(std::pow(double(pv), -k * b)));
      CHECK(law.pmf(k) == doctest::Approx(law.tail(k - 1) - law.tail(k)));
    }
  }
  CHECK(JumpLaw(Prime(2), 1.0).c_pb() == doctest::Approx(1.0));
  CHECK_THROWS_AS(JumpLaw(Prime(2), 0.0), std::invalid_argument);
}

TEST_CASE("radius draws follow the pmf") {
  const JumpLaw law(Prime(3), 0.5);
  RngStream rng(21, 0);
  constexpr int kCells = 6;  // K = 1..5 and K >= 6
  std::vector<std::uint64_t> hist(kCells, 0);
  constexpr std::uint64_t n = 50'000;
  for (std::uint64_t i = 0; i < n; ++i) {
    const int k = sample_radius(law, rng);
    REQUIRE(k >= 1);
    ++hist[static_cast<std::size_t>(std::min(k, kCells) - 1)];
  }
  double stat = 0.0;
  for (int c = 0; c < kCells; ++c) {
    const double p = c + 1 < kCells ? law.pmf(c + 1) : law.tail(kCells - 1);
    const double expected = p * n;
    stat += (hist[c] - expected) * (hist[c] - expected) / expected;
  }
  CHECK(stat < stats::chi_square_critical(kCells - 1, 1e-6));
}

TEST_CASE("spheres") {
  CHECK(sphere_cardinality(Prime(3), 2) == 6);
  CHECK(sphere_cardinality(Prime(2), 1) == 1);
  CHECK_THROWS_AS(sphere_cardinality(Prime(3), 0), std::invalid_argument);
  CHECK_THROWS_AS(sphere_cardinality(Prime(2), 80), std::overflow_error);
  RngStream rng(22, 0);
  CHECK_THROWS_AS(sample_sphere_point(Prime(3), 0, rng), std::invalid_argument);
  std::set<std::vector<std::uint64_t>> seen;
  for (int i = 0; i < 2000; ++i) {
    const QpDigits x = sample_sphere_point(Prime(3), 2, rng);
    CHECK(qp_abs(x) == RadialValue::power(2));
    CHECK(x.in_gp());
    seen.insert({x.digit_at(-2), x.digit_at(-1)});
  }
  CHECK(seen.size() == 6);
}

TEST_CASE("allocation-free jump draw matches sample_jump") {
  const JumpLaw law(Prime(5), 0.7);
  RngStream a(23, 1);
  RngStream b(23, 1);
  std::vector<std::uint64_t> digits;
  for (int i = 0; i < 1000; ++i) {
    const QpDigits x = sample_jump(law, a);
    const int k = sample_jump_digits(law, b, digits);
    REQUIRE(qp_abs(x) == RadialValue::power(k));
    for (int j = 0; j < k; ++j) CHECK(digits[static_cast<std::size_t>(j)] == x.digit_at(-(j + 1)));
  }
}

TEST_CASE("walk parameters and step counts") {
  const WalkParams w(Prime(2), 1.0, 1.0, 3);
  CHECK(w.diffusion() == doctest::Approx(2.0 / 3.0));
  CHECK(w.rate() == doctest::Approx(16.0 / 3.0));
  CHECK(WalkParams(Prime(3), 2.0, 1.0, 0).diffusion() == doctest::Approx(9.0 / 13.0));
  CHECK_THROWS_AS(WalkParams(Prime(2), 0.0, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(WalkParams(Prime(2), 1.0, -1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(WalkParams(Prime(2), 1.0, 1.0, -1), std::invalid_argument);

  CHECK(step_count(WalkParams(Prime(2), 1.0, 1.0, 1), 1.0) == 1);
  CHECK(step_count(WalkParams(Prime(2), 1.0, 1.0, 2), 1.0) == 2);
  CHECK(step_count(w, 1.0) == 5);
  CHECK(step_count(WalkParams(Prime(2), 1.0, 1.0, 14), 1.0) == 10922);
  CHECK(step_count(w, 0.0) == 0);
  CHECK_THROWS_AS(step_count(w, -1.0), std::invalid_argument);

  // sigma = 3/2 gives D = 1 exactly, so n(T) = 2^m T on dyadic T.
  const WalkParams unit(Prime(2), 1.0, 1.5, 4);
  CHECK(step_count(unit, 0.75) == 12);
  CHECK(step_count(unit, 1.0) == 16);
  CHECK(step_count(unit, std::nextafter(1.0, 0.0)) == 15);
}

TEST_CASE("jump times are the first instants of each step") {
  for (const WalkParams& w : {WalkParams(Prime(2), 1.0, 1.0, 3), WalkParams(Prime(3), 0.5, 0.7, 4),
                              WalkParams(Prime(2), 1.0, 1.5, 5)}) {
    for (std::int64_t j = 1; j < 200; ++j) {
      const double t = jump_time(w, j);
      CHECK(step_count(w, t) >= j);
      CHECK(step_count(w, std::nextafter(t, 0.0)) < j);
    }
  }
  CHECK_THROWS_AS(jump_time(WalkParams(Prime(2), 1.0, 0.0, 3), 1), std::domain_error);
  const StepClock clock(WalkParams(Prime(2), 1.0, 1.0, 3), 1.0);
  CHECK(clock.times()->size() == 5);
  CHECK(clock.steps(1.0) == 5);
}

TEST_CASE("simulated paths") {
  const WalkParams w(Prime(2), 1.0, 1.0, 3);
  RngStream rng(31, 0);
  const SinglePrimePath path = simulate_single(w, 1.0, rng);
  CHECK(path.jump_count() == 5);
  CHECK(path.jumps_until(0.0) == 0);
  CHECK(path_value(path, 0.0).is_zero());
  CHECK_THROWS_AS(path_value(path, 1.5), std::out_of_range);
  CHECK_THROWS_AS(sup_scaled_norm(path, 1.5), std::out_of_range);

  // Replaying the same stream through sample_jump rebuilds the sums.
  RngStream replay(31, 0);
  const JumpLaw law = w.jump_law();
  QpDigits sum(Prime(2));
  RadialValue sup = RadialValue::zero();
  for (std::size_t i = 0; i < path.jump_count(); ++i) {
    sum = gp_add(sum, sample_jump(law, replay));
    CHECK(path.jumps()[i].sum == sum);
    CHECK(path_value(path, path.jump_time(i)) == qp_shift(sum, 3));
    sup = std::max(sup, qp_abs(sum).scaled(-3));
  }
  CHECK(sup_scaled_norm(path, 1.0) == sup);
}

TEST_CASE("walk cursor agrees with the gp_add fold") {
  for (auto [pv, b] : {std::pair{2ull, 1.0}, {3ull, 0.5}, {7ull, 1.3}}) {
    const JumpLaw law(Prime(pv), b);
    RngStream a(41, pv);
    RngStream c(41, pv);
    WalkCursor cursor(law);
    QpDigits sum{Prime(pv)};
    for (int i = 0; i < 3000; ++i) {
      sum = gp_add(sum, sample_jump(law, a));
      cursor.step(c);
      REQUIRE(cursor.radius() == qp_abs(sum));
    }
    CHECK(cursor.value() == sum);
    CHECK(cursor.steps() == 3000);
  }
}

TEST_CASE("path validation") {
  const WalkParams w(Prime(2), 1.0, 1.0, 3);
  auto times = std::make_shared<const std::vector<double>>(std::vector<double>{0.2, 0.4});
  const QpDigits half(Prime(2), {{-1, 1}});
  CHECK_NOTHROW(SinglePrimePath(w, 1.0, times, {{1, half}, {2, QpDigits(Prime(2))}}));
  CHECK_THROWS_AS(SinglePrimePath(w, 1.0, times, {{2, half}, {1, half}}), std::invalid_argument);
  CHECK_THROWS_AS(SinglePrimePath(w, 0.3, times, {{1, half}, {2, half}}), std::invalid_argument);
  CHECK_THROWS_AS(SinglePrimePath(w, 1.0, times, {{1, QpDigits(Prime(3), {{-1, 1}})}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SinglePrimePath(w, 1.0, times, {{1, QpDigits(Prime(2), {{0, 1}})}}),
                  std::invalid_argument);
}
