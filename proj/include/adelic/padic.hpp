#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "adelic/primes.hpp"

namespace adelic {

// An exact norm value: either zero or p^exponent for an implied prime p.
// Comparisons are only meaningful between values of the same prime.
class RadialValue {
 public:
  constexpr RadialValue() = default;

  static constexpr RadialValue zero() { return RadialValue(); }
  static constexpr RadialValue power(int exponent) { return RadialValue(exponent); }

  constexpr bool is_zero() const noexcept { return zero_; }
  // Undefined for zero values; check is_zero() first.
  constexpr int exponent() const noexcept { return exponent_; }

  // Multiplies by p^shift. Zero stays zero.
  constexpr RadialValue scaled(int shift) const {
    return zero_ ? RadialValue() : RadialValue(exponent_ + shift);
  }

  double to_real(const Prime& p) const;

  friend constexpr bool operator==(const RadialValue& a, const RadialValue& b) {
    return a.zero_ == b.zero_ && (a.zero_ || a.exponent_ == b.exponent_);
  }
  friend constexpr std::strong_ordering operator<=>(const RadialValue& a, const RadialValue& b) {
    if (a.zero_ || b.zero_) return b.zero_ <=> a.zero_;
    return a.exponent_ <=> b.exponent_;
  }

 private:
  constexpr explicit RadialValue(int exponent) : zero_(false), exponent_(exponent) {}

  bool zero_ = true;
  int exponent_ = 0;
};

struct Digit {
  int index;
  std::uint64_t value;

  friend bool operator==(const Digit&, const Digit&) = default;
};

// A finite p-adic expansion sum_k a(k) p^k. Only nonzero digits are stored,
// sorted by increasing index.
class QpDigits {
 public:
  explicit QpDigits(Prime p) : prime_(p) {}
  // Digits may come in any order; zero digits are dropped. Throws
  // std::invalid_argument on a duplicate index or a digit >= p.
  QpDigits(Prime p, std::vector<Digit> digits);
  QpDigits(Prime p, std::initializer_list<std::pair<int, std::uint64_t>> digits);

  const Prime& prime() const noexcept { return prime_; }
  std::span<const Digit> digits() const noexcept { return digits_; }
  bool is_zero() const noexcept { return digits_.empty(); }
  std::optional<int> min_index() const noexcept;
  std::uint64_t digit_at(int index) const noexcept;

  // True when the support lies in negative indices, i.e. this is the
  // canonical representative of an element of Q_p / Z_p.
  bool in_gp() const noexcept { return digits_.empty() || digits_.back().index < 0; }

  friend bool operator==(const QpDigits&, const QpDigits&) = default;

 private:
  struct Trusted {};
  QpDigits(Prime p, std::vector<Digit> digits, Trusted) : prime_(p), digits_(std::move(digits)) {}

  friend QpDigits gp_add(const QpDigits&, const QpDigits&);
  friend QpDigits qp_shift(const QpDigits&, int);

  Prime prime_;
  std::vector<Digit> digits_;
};

// Finitely supported adele; every prime not stored has component exactly 0.
class AdelePoint {
 public:
  AdelePoint() = default;

  void set(QpDigits component);
  const std::map<Prime, QpDigits>& components() const noexcept { return components_; }

 private:
  std::map<Prime, QpDigits> components_;
};

struct Rational {
  std::int64_t num;
  std::int64_t den = 1;
};

RadialValue qp_abs(const QpDigits& x) noexcept;

// Distance |x - y|_p: p^(-k) where k is the lowest index at which the digits
// differ. Throws std::invalid_argument on mismatched primes.
RadialValue qp_distance(const QpDigits& x, const QpDigits& y);

// Addition in G_p = Q_p / Z_p on canonical representatives. Carries that
// reach index 0 are discarded. Throws std::invalid_argument on mismatched
// primes or operands outside the G_p role.
QpDigits gp_add(const QpDigits& x, const QpDigits& y);

// Multiplication by p^m: digit index k moves to k + m.
QpDigits qp_shift(const QpDigits& x, int m);

// [lambda]_p = p^(ceil(log_p lambda) - 1), the largest power of p strictly
// below lambda. Computed by exact integer comparison. Throws
// std::invalid_argument unless lambda > 0.
RadialValue bracket_lambda(const Rational& lambda, const Prime& p);
// The double is taken at its exact binary value.
RadialValue bracket_lambda(double lambda, const Prime& p);

// max_p |x_p|_p / p over the stored components.
double adelic_abs(const AdelePoint& x);

// |num/den|_p by repeated division. Throws std::invalid_argument if den == 0.
RadialValue rational_valuation_oracle(std::int64_t num, std::int64_t den, const Prime& p);

}  // namespace adelic
