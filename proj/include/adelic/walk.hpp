#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "adelic/padic.hpp"
#include "adelic/rng.hpp"
#include "adelic/sampling.hpp"

namespace adelic {

// Parameters of the scaled walk p^m S_{floor(D p^(mb) t)}.
class WalkParams {
 public:
  // Throws std::invalid_argument unless b > 0, sigma >= 0 and m >= 0.
  WalkParams(Prime p, double b, double sigma, int m);

  const Prime& prime() const noexcept { return p_; }
  double b() const noexcept { return b_; }
  double sigma() const noexcept { return sigma_; }
  int m() const noexcept { return m_; }

  // D = p^b (p - 1) sigma / (p^(b+1) - 1).
  double diffusion() const noexcept { return diffusion_; }
  // Steps per unit time, D p^(mb).
  double rate() const noexcept { return rate_; }

  JumpLaw jump_law() const { return JumpLaw(p_, b_); }

 private:
  Prime p_;
  double b_;
  double sigma_;
  int m_;
  double diffusion_;
  double rate_;
};

// n(T) = floor(D p^(mb) T). When the floating product lands within a few ulp
// of an integer and b is integral, the floor is recomputed exactly from the
// binary values of sigma and T. Throws std::invalid_argument for T < 0.
std::int64_t step_count(const WalkParams& params, double T);

// Jump times of a walk up to a horizon. Jump j takes effect at the smallest
// double t with step_count(t) >= j, so step_count and path evaluation agree.
class StepClock {
 public:
  StepClock(const WalkParams& params, double horizon);

  const WalkParams& params() const noexcept { return params_; }
  double horizon() const noexcept { return horizon_; }
  std::int64_t steps(double t) const { return step_count(params_, t); }
  // Jump times of steps 1 .. n(horizon).
  const std::shared_ptr<const std::vector<double>>& times() const noexcept { return times_; }

 private:
  WalkParams params_;
  double horizon_;
  std::shared_ptr<const std::vector<double>> times_;
};

// Smallest double t >= 0 with step_count(params, t) >= j (j >= 1).
double jump_time(const WalkParams& params, std::int64_t j);

struct PathJump {
  std::int64_t step;
  QpDigits sum;  // unscaled cumulative sum S_step in its G_p role
};

// A cadlag step path: value qp_shift(S_j, m) from the time of jump j until
// the next jump. Sums are stored unscaled.
class SinglePrimePath {
 public:
  // Throws std::invalid_argument when steps are not strictly increasing,
  // times are not nondecreasing within [0, horizon], sizes differ, or a sum
  // has the wrong prime or lies outside G_p.
  SinglePrimePath(WalkParams params, double horizon,
                  std::shared_ptr<const std::vector<double>> times, std::vector<PathJump> jumps);

  const WalkParams& params() const noexcept { return params_; }
  double horizon() const noexcept { return horizon_; }
  std::size_t jump_count() const noexcept { return jumps_.size(); }
  std::span<const PathJump> jumps() const noexcept { return jumps_; }
  // Time of the i-th stored jump (0-based).
  double jump_time(std::size_t i) const { return (*times_)[i]; }
  std::span<const double> jump_times() const noexcept {
    return {times_->data(), jumps_.size()};
  }
  // Number of jumps with time <= t.
  std::size_t jumps_until(double t) const;

 private:
  WalkParams params_;
  double horizon_;
  std::shared_ptr<const std::vector<double>> times_;
  std::vector<PathJump> jumps_;
};

SinglePrimePath simulate_single(const WalkParams& params, double T, RngStream& rng);
// Reuses the clock's jump times; the path horizon is the clock's.
SinglePrimePath simulate_single(const StepClock& clock, RngStream& rng);

// Scaled value at time t. Throws std::out_of_range outside [0, horizon].
QpDigits path_value(const SinglePrimePath& path, double t);

// sup_{s <= T} |p^m S_{n(s)}|_p. Throws std::out_of_range if T > horizon.
RadialValue sup_scaled_norm(const SinglePrimePath& path, double T);

// Streaming walk S_0 = 0, S_{n+1} = S_n + X_{n+1} on G_p. Draws the same
// random numbers as folding gp_add over sample_jump.
class WalkCursor {
 public:
  explicit WalkCursor(JumpLaw law) : law_(std::move(law)) {}

  void step(RngStream& rng);

  std::int64_t steps() const noexcept { return steps_; }
  // |S_n|_p, unscaled.
  RadialValue radius() const noexcept {
    return top_ == 0 ? RadialValue::zero() : RadialValue::power(static_cast<int>(top_));
  }
  QpDigits value() const;

 private:
  JumpLaw law_;
  std::vector<std::uint64_t> acc_;  // acc_[i] is the digit at index -(i + 1)
  std::vector<std::uint64_t> jump_;
  std::size_t top_ = 0;
  std::int64_t steps_ = 0;
};

}  // namespace adelic
