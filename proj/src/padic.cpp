#include "adelic/padic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace adelic {

namespace {

using boost::multiprecision::cpp_int;

void require_same_prime(const QpDigits& x, const QpDigits& y, const char* op) {
  if (x.prime() != y.prime()) {
    throw std::invalid_argument(std::string(op) + ": mismatched primes " +
                                std::to_string(x.prime().value()) + " and " +
                                std::to_string(y.prime().value()));
  }
}

cpp_int ipow(std::uint64_t base, unsigned exponent) {
  return boost::multiprecision::pow(cpp_int(base), exponent);
}

// p^k < num / den for positive num, den.
bool power_below(std::uint64_t p, int k, const cpp_int& num, const cpp_int& den) {
  if (k >= 0) return ipow(p, static_cast<unsigned>(k)) * den < num;
  return den < num * ipow(p, static_cast<unsigned>(-k));
}

RadialValue bracket_exact(const cpp_int& num, const cpp_int& den, const Prime& p) {
  // Start near log_p(num/den) and walk to the exact answer.
  const double approx = (std::log(num.convert_to<double>()) - std::log(den.convert_to<double>())) /
                        std::log(p.as_double());
  int e = std::isfinite(approx) ? static_cast<int>(std::floor(approx)) : 0;
  while (!power_below(p.value(), e, num, den)) --e;
  while (power_below(p.value(), e + 1, num, den)) ++e;
  return RadialValue::power(e);
}

}  // namespace

double RadialValue::to_real(const Prime& p) const {
  return zero_ ? 0.0 : std::pow(p.as_double(), exponent_);
}

QpDigits::QpDigits(Prime p, std::vector<Digit> digits) : prime_(p) {
  std::erase_if(digits, [](const Digit& d) { return d.value == 0; });
  std::sort(digits.begin(), digits.end(),
            [](const Digit& a, const Digit& b) { return a.index < b.index; });
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i].value >= p.value()) {
      throw std::invalid_argument("digit " + std::to_string(digits[i].value) + " at index " +
                                  std::to_string(digits[i].index) + " out of range for p = " +
                                  std::to_string(p.value()));
    }
    if (i > 0 && digits[i].index == digits[i - 1].index) {
      throw std::invalid_argument("duplicate digit index " + std::to_string(digits[i].index));
    }
  }
  digits_ = std::move(digits);
}

QpDigits::QpDigits(Prime p, std::initializer_list<std::pair<int, std::uint64_t>> digits)
    : QpDigits(p, [&] {
        std::vector<Digit> v;
        v.reserve(digits.size());
        for (const auto& [k, a] : digits) v.push_back({k, a});
        return v;
      }()) {}

std::optional<int> QpDigits::min_index() const noexcept {
  if (digits_.empty()) return std::nullopt;
  return digits_.front().index;
}

std::uint64_t QpDigits::digit_at(int index) const noexcept {
  auto it = std::lower_bound(digits_.begin(), digits_.end(), index,
                             [](const Digit& d, int k) { return d.index < k; });
  return (it != digits_.end() && it->index == index) ? it->value : 0;
}

void AdelePoint::set(QpDigits component) {
  const Prime p = component.prime();
  components_.insert_or_assign(p, std::move(component));
}

RadialValue qp_abs(const QpDigits& x) noexcept {
  if (x.is_zero()) return RadialValue::zero();
  return RadialValue::power(-x.digits().front().index);
}

RadialValue qp_distance(const QpDigits& x, const QpDigits& y) {
  require_same_prime(x, y, "qp_distance");
  auto a = x.digits();
  auto b = y.digits();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
      return RadialValue::power(-a[i].index);
    }
    if (i == a.size() || b[j].index < a[i].index) {
      return RadialValue::power(-b[j].index);
    }
    if (a[i].value != b[j].value) return RadialValue::power(-a[i].index);
    ++i;
    ++j;
  }
  return RadialValue::zero();
}

QpDigits gp_add(const QpDigits& x, const QpDigits& y) {
  require_same_prime(x, y, "gp_add");
  if (!x.in_gp() || !y.in_gp()) {
    throw std::invalid_argument("gp_add: operand has digits at nonnegative indices");
  }
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;

  const std::uint64_t p = x.prime().value();
  const int lo = std::min(x.digits_.front().index, y.digits_.front().index);
  std::vector<Digit> out;
  out.reserve(static_cast<std::size_t>(-lo));
  auto a = x.digits_.begin();
  auto b = y.digits_.begin();
  std::uint64_t carry = 0;
  for (int k = lo; k < 0; ++k) {
    std::uint64_t sum = carry;
    if (a != x.digits_.end() && a->index == k) sum += (a++)->value;
    if (b != y.digits_.end() && b->index == k) sum += (b++)->value;
    carry = sum >= p ? 1 : 0;
    if (carry) sum -= p;
    if (sum != 0) out.push_back({k, sum});
  }
  return QpDigits(x.prime(), std::move(out), QpDigits::Trusted{});
}

QpDigits qp_shift(const QpDigits& x, int m) {
  std::vector<Digit> out(x.digits_.begin(), x.digits_.end());
  for (auto& d : out) d.index += m;
  return QpDigits(x.prime(), std::move(out), QpDigits::Trusted{});
}

RadialValue bracket_lambda(const Rational& lambda, const Prime& p) {
  if (lambda.den == 0 || lambda.num == 0 || ((lambda.num < 0) != (lambda.den < 0))) {
    throw std::invalid_argument("bracket_lambda: lambda must be positive");
  }
  cpp_int num(lambda.num);
  cpp_int den(lambda.den);
  if (num < 0) {
    num = -num;
    den = -den;
  }
  return bracket_exact(num, den, p);
}

RadialValue bracket_lambda(double lambda, const Prime& p) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("bracket_lambda: lambda must be positive and finite");
  }
  int exp2 = 0;
  const double mantissa = std::frexp(lambda, &exp2);
  // lambda = m * 2^(exp2 - 53) with m a 53-bit integer.
  cpp_int num(static_cast<std::int64_t>(std::ldexp(mantissa, 53)));
  cpp_int den(1);
  const int shift = exp2 - 53;
  if (shift >= 0) {
    num <<= shift;
  } else {
    den <<= -shift;
  }
  return bracket_exact(num, den, p);
}

double adelic_abs(const AdelePoint& x) {
  double best = 0.0;
  for (const auto& [p, component] : x.components()) {
    best = std::max(best, qp_abs(component).scaled(-1).to_real(p));
  }
  return best;
}

RadialValue rational_valuation_oracle(std::int64_t num, std::int64_t den, const Prime& p) {
  if (den == 0) throw std::invalid_argument("rational_valuation_oracle: zero denominator");
  if (num == 0) return RadialValue::zero();
  const auto q = static_cast<std::int64_t>(p.value());
  int valuation = 0;
  while (num % q == 0) {
    num /= q;
    ++valuation;
  }
  while (den % q == 0) {
    den /= q;
    --valuation;
  }
  return RadialValue::power(-valuation);
}

}  // namespace adelic
