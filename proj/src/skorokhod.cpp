#include "adelic/skorokhod.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace adelic {

namespace {

constexpr double kOffsetFactor = 1.0 + 0x1.0p-20;

void require_delta(double delta, double T) {
  if (!(delta > 0.0 && delta < T)) {
    throw std::invalid_argument("modulus requires 0 < delta < T (delta = " +
                                std::to_string(delta) + ", T = " + std::to_string(T) + ")");
  }
}

// Number of jumps strictly before t.
std::size_t jumps_before(std::span<const double> times, double t) {
  return static_cast<std::size_t>(std::lower_bound(times.begin(), times.end(), t) -
                                  times.begin());
}

}  // namespace

StepPath::StepPath(std::vector<double> times, std::vector<double> norms,
                   std::vector<double> distances)
    : times_(std::move(times)),
      norms_(std::move(norms)),
      distances_(std::move(distances)),
      values_(times_.size() + 1) {
  if (norms_.size() != values_ || distances_.size() != values_ * values_) {
    throw std::invalid_argument("StepPath: norms/distances do not match the jump count");
  }
  if (std::adjacent_find(times_.begin(), times_.end(), std::greater_equal<>()) != times_.end()) {
    throw std::invalid_argument("StepPath: jump times must be strictly increasing");
  }
}

StepPath StepPath::from_values(std::vector<double> times, std::span<const QpDigits> values,
                               int shift, NormContext norm) {
  if (values.size() != times.size() + 1) {
    throw std::invalid_argument("StepPath::from_values: need one more value than jump times");
  }
  const Prime p = values.front().prime();
  const int scale = -shift - (norm == NormContext::padic_adelic ? 1 : 0);
  const std::size_t n = values.size();
  std::vector<double> norms(n);
  std::vector<double> distances(n * n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    norms[a] = qp_abs(values[a]).scaled(scale).to_real(p);
    for (std::size_t b = a + 1; b < n; ++b) {
      const double d = qp_distance(values[a], values[b]).scaled(scale).to_real(p);
      distances[a * n + b] = d;
      distances[b * n + a] = d;
    }
  }
  return StepPath(std::move(times), std::move(norms), std::move(distances));
}

StepPath StepPath::from_path(const SinglePrimePath& path, NormContext norm) {
  std::vector<QpDigits> values;
  values.reserve(path.jump_count() + 1);
  values.emplace_back(path.params().prime());
  for (const auto& jump : path.jumps()) values.push_back(jump.sum);
  auto times = path.jump_times();
  return from_values(std::vector<double>(times.begin(), times.end()), values, path.params().m(),
                     norm);
}

StepPath StepPath::from_adelic(const AdelicPath& path) {
  std::vector<StepPath> parts;
  std::vector<double> times;
  for (const auto& [p, component] : path.components()) {
    parts.push_back(from_path(component, NormContext::padic_adelic));
    auto t = parts.back().times();
    times.insert(times.end(), t.begin(), t.end());
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());

  const std::size_t n = times.size() + 1;
  // index[e][c]: value of component c in force during event e.
  std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(parts.size(), 0));
  for (std::size_t e = 1; e < n; ++e) {
    for (std::size_t c = 0; c < parts.size(); ++c) index[e][c] = parts[c].value_at(times[e - 1]);
  }
  std::vector<double> norms(n, 0.0);
  std::vector<double> distances(n * n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < parts.size(); ++c) {
      norms[a] = std::max(norms[a], parts[c].norm(index[a][c]));
    }
    for (std::size_t b = a + 1; b < n; ++b) {
      double d = 0.0;
      for (std::size_t c = 0; c < parts.size(); ++c) {
        d = std::max(d, parts[c].distance(index[a][c], index[b][c]));
      }
      distances[a * n + b] = d;
      distances[b * n + a] = d;
    }
  }
  return StepPath(std::move(times), std::move(norms), std::move(distances));
}

std::size_t StepPath::value_at(double t) const {
  return static_cast<std::size_t>(std::upper_bound(times_.begin(), times_.end(), t) -
                                  times_.begin());
}

// Distances are ultrametric, so the diameter of a value set is the largest
// distance from any one member, here the value at s.
double oscillation(const StepPath& path, double s, double t) {
  if (!(s < t)) return 0.0;
  const std::size_t first = path.value_at(s);
  const std::size_t last = jumps_before(path.times(), t);
  double w = 0.0;
  for (std::size_t v = first + 1; v <= last; ++v) w = std::max(w, path.distance(first, v));
  return w;
}

std::vector<double> candidate_grid(const StepPath& path, double delta, double T) {
  std::vector<double> grid{0.0, T};
  auto add = [&](double t) {
    if (t > 0.0 && t < T) grid.push_back(t);
  };
  add(delta * kOffsetFactor);
  for (double t : path.times()) {
    add(t);
    add(t + delta * kOffsetFactor);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

double modified_modulus(const StepPath& path, double delta, double T) {
  require_delta(delta, T);
  const std::vector<double> grid = candidate_grid(path, delta, T);
  const std::size_t n = grid.size();
  const std::size_t last = n - 1;
  std::vector<std::size_t> start(n);
  std::vector<std::size_t> end(n);
  for (std::size_t i = 0; i < n; ++i) {
    start[i] = path.value_at(grid[i]);
    end[i] = jumps_before(path.times(), grid[i]);
  }

  // best[j]: smallest achievable max oscillation over partitions of [0, grid[j]).
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> best(n, inf);
  best[0] = 0.0;
  for (std::size_t i = 0; i < last; ++i) {
    if (best[i] == inf) continue;
    double w = 0.0;
    std::size_t reached = start[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      for (; reached < end[j]; ++reached) w = std::max(w, path.distance(start[i], reached + 1));
      if (j != last && !(grid[j] - grid[i] > delta)) continue;
      best[j] = std::min(best[j], std::max(best[i], w));
    }
  }
  return best[last];
}

double modified_modulus(const SinglePrimePath& path, double delta, double T, NormContext norm) {
  return modified_modulus(StepPath::from_path(path, norm), delta, T);
}

double brute_force_modulus(const StepPath& path, double delta, double T) {
  if (path.jump_count() > kBruteForceMaxJumps) {
    throw std::invalid_argument("brute_force_modulus: more than " +
                                std::to_string(kBruteForceMaxJumps) + " jumps");
  }
  require_delta(delta, T);
  const std::vector<double> grid = candidate_grid(path, delta, T);
  const std::size_t n = grid.size();

  // Pairwise diameters of the attained value sets, no ultrametric shortcut.
  std::vector<double> w(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<std::size_t> attained;
      for (std::size_t v = 0; v <= path.jump_count(); ++v) {
        const double from = v == 0 ? -std::numeric_limits<double>::infinity() : path.times()[v - 1];
        const double until =
            v == path.jump_count() ? std::numeric_limits<double>::infinity() : path.times()[v];
        // Value v is in force on [from, until); keep it if that meets [g_i, g_j).
        if (from < grid[j] && until > grid[i]) attained.push_back(v);
      }
      double diam = 0.0;
      for (std::size_t a : attained) {
        for (std::size_t b : attained) diam = std::max(diam, path.distance(a, b));
      }
      w[i * n + j] = diam;
    }
  }

  double best = std::numeric_limits<double>::infinity();
  std::function<void(std::size_t, double)> extend = [&](std::size_t from, double worst) {
    for (std::size_t next = from + 1; next < n; ++next) {
      const double cost = std::max(worst, w[from * n + next]);
      if (next == n - 1) {
        best = std::min(best, cost);
      } else if (grid[next] - grid[from] > delta) {
        extend(next, cost);
      }
    }
  };
  extend(0, 0.0);
  return best;
}

double adelic_modulus(const AdelicPath& path, double delta, double T) {
  return modified_modulus(StepPath::from_adelic(path), delta, T);
}

double path_sup_norm(const StepPath& path, double T) {
  double sup = 0.0;
  const std::size_t n = T < 0.0 ? 0 : path.value_at(T);
  for (std::size_t v = 0; v <= n; ++v) sup = std::max(sup, path.norm(v));
  return sup;
}

double path_sup_norm(const SinglePrimePath& path, double T, NormContext norm) {
  RadialValue sup = sup_scaled_norm(path, T);
  if (norm == NormContext::padic_adelic) sup = sup.scaled(-1);
  return sup.to_real(path.params().prime());
}

double path_sup_norm(const AdelicPath& path, double T) {
  double sup = 0.0;
  for (const auto& [p, component] : path.components()) {
    sup = std::max(sup, path_sup_norm(component, T, NormContext::padic_adelic));
  }
  return sup;
}

}  // namespace adelic
