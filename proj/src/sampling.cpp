#include "adelic/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace adelic {

namespace {

// Fills digits[k-1] (index -k, nonzero) first, then indices -k+1 .. -1.
void draw_sphere_digits(std::uint64_t p, int k, RngStream& rng,
                        std::vector<std::uint64_t>& digits) {
  digits.resize(static_cast<std::size_t>(k));
  digits[static_cast<std::size_t>(k - 1)] = 1 + rng.uniform_below(p - 1);
  for (int i = k - 2; i >= 0; --i) digits[static_cast<std::size_t>(i)] = rng.uniform_below(p);
}

QpDigits to_qp(const Prime& p, const std::vector<std::uint64_t>& digits) {
  std::vector<Digit> out;
  out.reserve(digits.size());
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] != 0) out.push_back({-static_cast<int>(i) - 1, digits[i]});
  }
  return QpDigits(p, std::move(out));
}

}  // namespace

JumpLaw::JumpLaw(Prime p, double b)
    : p_(p), b_(b), log_p_(std::log(p.as_double())), c_pb_(std::expm1(b * log_p_)) {
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw std::invalid_argument("jump law exponent b must be positive, got " + std::to_string(b));
  }
}

double JumpLaw::pmf(int k) const {
  if (k < 1) return 0.0;
  return c_pb_ * std::exp(-k * b_ * log_p_);
}

double JumpLaw::tail(int k) const {
  if (k <= 0) return 1.0;
  return std::pow(p_.as_double(), -k * b_);
}

int sample_radius(const JumpLaw& law, RngStream& rng) {
  const double u = rng.uniform_open();
  const double estimate = std::ceil(-std::log1p(-u) / (law.b() * std::log(law.prime().as_double())));
  int k = static_cast<int>(std::clamp(estimate, 1.0, 1.0e6));
  auto covers = [&](int j) { return 1.0 - law.tail(j) >= u; };
  while (!covers(k)) ++k;
  while (k > 1 && covers(k - 1)) --k;
  return k;
}

std::uint64_t sphere_cardinality(const Prime& p, int k) {
  if (k < 1) throw std::invalid_argument("sphere_cardinality: k must be >= 1");
  std::uint64_t n = p.value() - 1;
  for (int i = 1; i < k; ++i) {
    if (n > std::numeric_limits<std::uint64_t>::max() / p.value()) {
      throw std::overflow_error("sphere_cardinality: (p-1)p^(k-1) exceeds 64 bits");
    }
    n *= p.value();
  }
  return n;
}

QpDigits sample_sphere_point(const Prime& p, int k, RngStream& rng) {
  if (k < 1) throw std::invalid_argument("sample_sphere_point: k must be >= 1");
  std::vector<std::uint64_t> digits;
  draw_sphere_digits(p.value(), k, rng, digits);
  return to_qp(p, digits);
}

int sample_jump_digits(const JumpLaw& law, RngStream& rng, std::vector<std::uint64_t>& digits) {
  const int k = sample_radius(law, rng);
  draw_sphere_digits(law.prime().value(), k, rng, digits);
  return k;
}

QpDigits sample_jump(const JumpLaw& law, RngStream& rng) {
  std::vector<std::uint64_t> digits;
  sample_jump_digits(law, rng, digits);
  return to_qp(law.prime(), digits);
}

}  // namespace adelic
