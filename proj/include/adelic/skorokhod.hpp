#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "adelic/adelic_walk.hpp"
#include "adelic/padic.hpp"
#include "adelic/walk.hpp"

namespace adelic {

// Which norm a single-prime path is measured in.
enum class NormContext {
  padic,         // |x|_p
  padic_adelic,  // |x|_p / p, the restriction of the adelic norm
};

// A step path reduced to what the modulus functionals need: jump times, the
// norm of every attained value and all pairwise distances. Value 0 is the
// initial value, value j the value after jump j. Norms and distances are
// computed once at construction.
class StepPath {
 public:
  // distances is row-major (values x values) with values = times.size() + 1
  // and must be an ultrametric. Throws std::invalid_argument on size mismatch
  // or times that are not strictly increasing.
  StepPath(std::vector<double> times, std::vector<double> norms, std::vector<double> distances);

  // A single-prime path with explicit jump times and attained values (one
  // more value than times). Values are scaled by p^shift before measuring.
  static StepPath from_values(std::vector<double> times, std::span<const QpDigits> values,
                              int shift, NormContext norm);
  static StepPath from_path(const SinglePrimePath& path, NormContext norm);
  // Merged event sequence of all components under the adelic norm
  // max_p |x_p|_p / p; simultaneous jumps form one event.
  static StepPath from_adelic(const AdelicPath& path);

  std::size_t jump_count() const noexcept { return times_.size(); }
  std::span<const double> times() const noexcept { return times_; }
  double norm(std::size_t value) const { return norms_[value]; }
  double distance(std::size_t a, std::size_t b) const { return distances_[a * values_ + b]; }
  // Index of the value in force at time t (jumps at t included).
  std::size_t value_at(double t) const;

 private:
  std::vector<double> times_;
  std::vector<double> norms_;
  std::vector<double> distances_;
  std::size_t values_;
};

// sup of |x(u) - x(v)| over u, v in [s, t); 0 for an empty interval.
double oscillation(const StepPath& path, double s, double t);

// Candidate partition endpoints: 0, T, every jump time in (0, T), and every
// jump time (and 0) offset by delta (1 + 2^-20), restricted to (0, T).
std::vector<double> candidate_grid(const StepPath& path, double delta, double T);

// w'_T(x, delta): infimum over essentially delta-sparse partitions of
// [0, T) drawn from candidate_grid of the largest interval oscillation, by
// dynamic programming. Throws std::invalid_argument unless 0 < delta < T.
double modified_modulus(const StepPath& path, double delta, double T);
double modified_modulus(const SinglePrimePath& path, double delta, double T, NormContext norm);

// Exhaustive search over the same partitions; at most kBruteForceMaxJumps
// jumps (std::invalid_argument otherwise).
inline constexpr std::size_t kBruteForceMaxJumps = 12;
double brute_force_modulus(const StepPath& path, double delta, double T);

// Modified modulus under the adelic norm with one partition shared by all
// components.
double adelic_modulus(const AdelicPath& path, double delta, double T);

// max norm over the initial value and every value attained by time T.
double path_sup_norm(const StepPath& path, double T);
double path_sup_norm(const SinglePrimePath& path, double T, NormContext norm);
double path_sup_norm(const AdelicPath& path, double T);

}  // namespace adelic
