#include "adelic/walk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "adelic/oracles.hpp"

namespace adelic {

namespace {

using boost::multiprecision::cpp_int;

// x = mantissa * 2^exponent with an integral mantissa.
struct BinaryValue {
  cpp_int mantissa;
  int exponent;
};

BinaryValue exact_binary(double x) {
  int e = 0;
  const double frac = std::frexp(x, &e);
  return {cpp_int(static_cast<std::int64_t>(std::ldexp(frac, 53))), e - 53};
}

// floor(p^(b + mb) (p - 1) sigma T / (p^(b+1) - 1)) for integral b.
std::int64_t exact_step_count(const WalkParams& w, double T) {
  const auto b = static_cast<unsigned>(w.b());
  const auto m = static_cast<unsigned>(w.m());
  const std::uint64_t p = w.prime().value();
  const BinaryValue s = exact_binary(w.sigma());
  const BinaryValue t = exact_binary(T);
  cpp_int num = boost::multiprecision::pow(cpp_int(p), b + m * b) * (p - 1) * s.mantissa *
                t.mantissa;
  cpp_int den = boost::multiprecision::pow(cpp_int(p), b + 1) - 1;
  const int e2 = s.exponent + t.exponent;
  if (e2 >= 0) {
    num <<= e2;
  } else {
    den <<= -e2;
  }
  return static_cast<std::int64_t>(num / den);
}

bool integral_exponent(double b) { return b == std::floor(b) && b <= 64.0; }

}  // namespace

WalkParams::WalkParams(Prime p, double b, double sigma, int m)
    : p_(p), b_(b), sigma_(sigma), m_(m) {
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw std::invalid_argument("walk exponent b must be positive, got " + std::to_string(b));
  }
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("diffusion coefficient must be finite and >= 0, got " +
                                std::to_string(sigma));
  }
  if (m < 0) throw std::invalid_argument("scale m must be >= 0, got " + std::to_string(m));
  diffusion_ = diffusion_constant(p, b, sigma);
  rate_ = diffusion_ * std::pow(p.as_double(), m * b);
}

std::int64_t step_count(const WalkParams& params, double T) {
  if (!(T >= 0.0) || !std::isfinite(T)) {
    throw std::invalid_argument("step_count: time must be finite and >= 0");
  }
  if (params.sigma() == 0.0 || T == 0.0) return 0;
  const double x = params.rate() * T;
  if (!(x < 9.0e18)) throw std::overflow_error("step_count: step count exceeds 64 bits");
  const double nearest = std::nearbyint(x);
  if (nearest >= 1.0 && integral_exponent(params.b())) {
    const double ulp = std::nextafter(nearest, std::numeric_limits<double>::infinity()) - nearest;
    if (std::abs(x - nearest) <= 64.0 * ulp) return exact_step_count(params, T);
  }
  return static_cast<std::int64_t>(std::floor(x));
}

double jump_time(const WalkParams& params, std::int64_t j) {
  if (j < 1) throw std::invalid_argument("jump_time: step index must be >= 1");
  if (params.rate() == 0.0) throw std::domain_error("jump_time: walk with zero rate never jumps");
  const double inf = std::numeric_limits<double>::infinity();
  double t = static_cast<double>(j) / params.rate();
  while (step_count(params, t) < j) t = std::nextafter(t, inf);
  while (t > 0.0 && step_count(params, std::nextafter(t, 0.0)) >= j) t = std::nextafter(t, 0.0);
  return t;
}

StepClock::StepClock(const WalkParams& params, double horizon)
    : params_(params), horizon_(horizon) {
  const std::int64_t n = step_count(params, horizon);
  auto times = std::make_shared<std::vector<double>>();
  times->reserve(static_cast<std::size_t>(n));
  for (std::int64_t j = 1; j <= n; ++j) times->push_back(jump_time(params, j));
  times_ = std::move(times);
}

SinglePrimePath::SinglePrimePath(WalkParams params, double horizon,
                                 std::shared_ptr<const std::vector<double>> times,
                                 std::vector<PathJump> jumps)
    : params_(std::move(params)),
      horizon_(horizon),
      times_(times ? std::move(times) : std::make_shared<const std::vector<double>>()),
      jumps_(std::move(jumps)) {
  if (!(horizon >= 0.0)) throw std::invalid_argument("path horizon must be >= 0");
  if (times_->size() < jumps_.size()) {
    throw std::invalid_argument("path has fewer jump times than jumps");
  }
  for (std::size_t i = 0; i < jumps_.size(); ++i) {
    const double t = (*times_)[i];
    if (!(t >= 0.0 && t <= horizon)) throw std::invalid_argument("jump time outside [0, horizon]");
    if (i > 0 && (jumps_[i].step <= jumps_[i - 1].step || t < (*times_)[i - 1])) {
      throw std::invalid_argument("jumps must have increasing steps and times");
    }
    if (jumps_[i].step < 1) throw std::invalid_argument("jump step index must be >= 1");
    if (jumps_[i].sum.prime() != params_.prime() || !jumps_[i].sum.in_gp()) {
      throw std::invalid_argument("cumulative sum must be a G_p value of the path's prime");
    }
  }
}

std::size_t SinglePrimePath::jumps_until(double t) const {
  auto times = jump_times();
  return static_cast<std::size_t>(std::upper_bound(times.begin(), times.end(), t) - times.begin());
}

SinglePrimePath simulate_single(const StepClock& clock, RngStream& rng) {
  const auto& times = *clock.times();
  const JumpLaw law = clock.params().jump_law();
  std::vector<PathJump> jumps;
  jumps.reserve(times.size());
  QpDigits sum(clock.params().prime());
  for (std::size_t j = 0; j < times.size(); ++j) {
    sum = gp_add(sum, sample_jump(law, rng));
    jumps.push_back({static_cast<std::int64_t>(j + 1), sum});
  }
  return SinglePrimePath(clock.params(), clock.horizon(), clock.times(), std::move(jumps));
}

SinglePrimePath simulate_single(const WalkParams& params, double T, RngStream& rng) {
  return simulate_single(StepClock(params, T), rng);
}

QpDigits path_value(const SinglePrimePath& path, double t) {
  if (!(t >= 0.0 && t <= path.horizon())) {
    throw std::out_of_range("path_value: time " + std::to_string(t) + " outside [0, " +
                            std::to_string(path.horizon()) + "]");
  }
  const std::size_t n = path.jumps_until(t);
  if (n == 0) return QpDigits(path.params().prime());
  return qp_shift(path.jumps()[n - 1].sum, path.params().m());
}

RadialValue sup_scaled_norm(const SinglePrimePath& path, double T) {
  if (T > path.horizon()) throw std::out_of_range("sup_scaled_norm: T beyond path horizon");
  RadialValue best = RadialValue::zero();
  const std::size_t n = T < 0.0 ? 0 : path.jumps_until(T);
  for (std::size_t i = 0; i < n; ++i) best = std::max(best, qp_abs(path.jumps()[i].sum));
  return best.scaled(-path.params().m());
}

void WalkCursor::step(RngStream& rng) {
  const auto k = static_cast<std::size_t>(sample_jump_digits(law_, rng, jump_));
  if (acc_.size() < k) acc_.resize(k, 0);
  const std::uint64_t p = law_.prime().value();
  std::uint64_t carry = 0;
  for (std::size_t i = k; i-- > 0;) {
    std::uint64_t s = acc_[i] + jump_[i] + carry;
    carry = s >= p ? 1 : 0;
    acc_[i] = carry ? s - p : s;
  }
  if (k > top_) {
    top_ = k;
  } else {
    while (top_ > 0 && acc_[top_ - 1] == 0) --top_;
  }
  ++steps_;
}

QpDigits WalkCursor::value() const {
  std::vector<Digit> digits;
  for (std::size_t i = top_; i-- > 0;) {
    if (acc_[i] != 0) digits.push_back({-static_cast<int>(i) - 1, acc_[i]});
  }
  return QpDigits(law_.prime(), std::move(digits));
}

}  // namespace adelic
