#pragma once

#include <cstdint>
#include <vector>

#include "adelic/padic.hpp"
#include "adelic/primes.hpp"
#include "adelic/rng.hpp"

namespace adelic {

// Jump law on G_p: P(|X|_p = p^k) = (p^b - 1) p^(-kb) for k >= 1, uniform on
// each sphere.
class JumpLaw {
 public:
  // Throws std::invalid_argument unless b > 0.
  JumpLaw(Prime p, double b);

  const Prime& prime() const noexcept { return p_; }
  double b() const noexcept { return b_; }
  double c_pb() const noexcept { return c_pb_; }

  // P(K = k); zero for k < 1.
  double pmf(int k) const;
  // P(K > k) = p^(-kb) for k >= 0.
  double tail(int k) const;

 private:
  Prime p_;
  double b_;
  double log_p_;
  double c_pb_;
};

// Inverse-CDF draw of the radius exponent K >= 1 from one uniform.
int sample_radius(const JumpLaw& law, RngStream& rng);

// Number of G_p points with |x|_p = p^k, i.e. (p - 1) p^(k - 1). Throws
// std::invalid_argument for k < 1 and std::overflow_error past 64 bits.
std::uint64_t sphere_cardinality(const Prime& p, int k);

// Uniform point on the sphere |x|_p = p^k. Throws std::invalid_argument for k < 1.
QpDigits sample_sphere_point(const Prime& p, int k, RngStream& rng);

QpDigits sample_jump(const JumpLaw& law, RngStream& rng);

// Allocation-free form of sample_jump: consumes the same random draws and
// writes the digit at index -(i + 1) to digits[i] for i < k (zeros included).
// Returns k.
int sample_jump_digits(const JumpLaw& law, RngStream& rng, std::vector<std::uint64_t>& digits);

}  // namespace adelic
