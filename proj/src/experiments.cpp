#include "adelic/experiments.hpp"

#include <algorithm>
#include <climits>
#include <cstring>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "adelic/adelic_walk.hpp"
#include "adelic/oracles.hpp"
#include "adelic/parallel.hpp"
#include "adelic/sampling.hpp"
#include "adelic/skorokhod.hpp"
#include "adelic/stats.hpp"
#include "adelic/walk.hpp"

namespace adelic {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr int kZeroExponent = INT_MIN;  // exponent recorded for the value 0
constexpr std::uint64_t kLargestSphere = 4096;
constexpr std::uint64_t kSmallSphere = 16;

// Stream tags, one per kind of cell.
enum Tag : std::uint64_t {
  kTagJump = 1,
  kTagSphere,
  kTagSurvival,
  kTagMarginal,
  kTagMoments,
  kTagAdelic,
  kTagTightness,
};

ResultTable make_table(const char* name, const ExperimentConfig& config) {
  validate_config(config);
  ResultTable table;
  table.experiment = name;
  table.seed = config.seed;
  table.alpha = config.alpha;
  return table;
}

std::uint64_t key_of(double x) {
  std::uint64_t bits;
  std::memcpy(&bits, &x, sizeof bits);
  return bits;
}

int exponent_or_min(const RadialValue& r) { return r.is_zero() ? kZeroExponent : r.exponent(); }

// Largest exponent |S_j|_p reaches over j <= n, stopping once it passes stop.
int walk_max_exponent(const JumpLaw& law, std::int64_t n, RngStream& rng, int stop) {
  WalkCursor cursor(law);
  int top = kZeroExponent;
  for (std::int64_t j = 0; j < n; ++j) {
    cursor.step(rng);
    top = std::max(top, exponent_or_min(cursor.radius()));
    if (top > stop) break;
  }
  return top;
}

std::uint64_t count_true(const std::vector<std::uint8_t>& flags) {
  return static_cast<std::uint64_t>(std::count(flags.begin(), flags.end(), std::uint8_t{1}));
}

ResultRow frequency_row(std::string params, std::string quantity, std::uint64_t hits,
                        std::uint64_t trials, double analytic, double alpha, std::string oracle) {
  const auto ci = stats::clopper_pearson(hits, trials, alpha);
  const double freq = static_cast<double>(hits) / static_cast<double>(trials);
  return {std::move(params), std::move(quantity), freq,         analytic,
          ci.half_width(),   verdict_of(ci.contains(analytic)), std::move(oracle)};
}

std::string walk_params(const Prime& p, double b, double sigma, int m) {
  return "p=" + std::to_string(p.value()) + " b=" + fmt_num(b) + " sigma=" + fmt_num(sigma) +
         " m=" + std::to_string(m);
}

std::string sphere_label(const QpDigits& x, int k) {
  std::string label;
  for (int i = -k; i <= -1; ++i) label += std::to_string(x.digit_at(i)) + (i < -1 ? "." : "");
  return label;
}

}  // namespace

ResultTable run_jump_law_test(const ExperimentConfig& config) {
  auto table = make_table("jump-law", config);
  const double eps = stats::dkw_epsilon(config.N, config.alpha);
  const auto trials = static_cast<double>(config.N);

  for (const Prime& p : config.primes) {
    const JumpLaw law(p, config.b);
    const std::string params = "p=" + std::to_string(p.value()) + " b=" + fmt_num(config.b);

    const auto radii = run_replicas(config.N, config.workers, [&](std::uint64_t i) {
      RngStream rng(config.seed, mix_keys({kTagJump, p.value(), i}));
      return qp_abs(sample_jump(law, rng)).exponent();
    });
    const int kmax = *std::max_element(radii.begin(), radii.end());
    std::vector<std::uint64_t> count(static_cast<std::size_t>(kmax) + 1, 0);
    for (int k : radii) ++count[static_cast<std::size_t>(k)];

    // Past the largest observed radius the empirical tail is 0, so the sup
    // over k <= kmax is the sup over all k.
    double sup = 0.0;
    std::uint64_t above = config.N;
    for (int k = 0; k <= kmax; ++k) {
      above -= count[static_cast<std::size_t>(k)];
      const double empirical = static_cast<double>(above) / trials;
      const double dev = std::abs(empirical - law.tail(k));
      sup = std::max(sup, dev);
      if (k >= 1 && k <= 8) {
        table.add({params + " k=" + std::to_string(k), "P(K > k)", empirical, law.tail(k), eps,
                   Verdict::info, "JumpLaw::tail"});
      }
    }
    table.add({params, "sup_k |P(K > k) - p^-kb|", sup, 0.0, eps, verdict_of(sup <= eps),
               "JumpLaw::tail"});

    for (int k = 1; k <= config.sphere_k; ++k) {
      const std::uint64_t card = sphere_cardinality(p, k);
      if (card > kLargestSphere) break;
      std::uint64_t lead = 1;  // p^(k-1)
      for (int i = 1; i < k; ++i) lead *= p.value();
      const auto codes = run_replicas(config.N, config.workers, [&](std::uint64_t i) {
        RngStream rng(config.seed, mix_keys({kTagSphere, p.value(), static_cast<std::uint64_t>(k), i}));
        const QpDigits x = sample_sphere_point(p, k, rng);
        // digit at -k is the most significant; codes below lead have a zero
        // leading digit and would be off the sphere.
        std::uint64_t code = 0;
        for (int j = -k; j <= -1; ++j) code = code * p.value() + x.digit_at(j);
        if (code < lead) throw std::logic_error("sphere sample off the sphere");
        return code - lead;
      });
      std::vector<std::uint64_t> hist(card, 0);
      for (auto c : codes) ++hist[c];

      const std::string sparams = params + " k=" + std::to_string(k);
      const double uniform = 1.0 / static_cast<double>(card);
      if (card <= kSmallSphere) {
        for (std::uint64_t c = 0; c < card; ++c) {
          // Rebuild the point from its code for the label.
          std::vector<Digit> digits;
          std::uint64_t code = c + lead;
          for (int j = -1; j >= -k; --j, code /= p.value()) digits.push_back({j, code % p.value()});
          const double freq = static_cast<double>(hist[c]) / trials;
          table.add({sparams + " point=" + sphere_label(QpDigits(p, digits), k), "frequency", freq,
                     uniform, config.band, verdict_of(std::abs(freq - uniform) <= config.band),
                     "sphere_cardinality"});
        }
      }
      const double stat = stats::chi_square_uniform(hist);
      if (card > 1) {
        const double crit = stats::chi_square_critical(static_cast<double>(card - 1), config.alpha);
        table.add({sparams, "chi-square vs uniform (analytic = critical value)", stat, crit, kNaN,
                   verdict_of(stat <= crit), "chi_square_critical"});
      } else {
        table.add({sparams, "chi-square vs uniform (single point)", stat, 0.0, kNaN, Verdict::info,
                   "sphere_cardinality"});
      }
    }
  }
  return table;
}

ResultTable run_survival_test(const ExperimentConfig& config) {
  auto table = make_table("survival", config);

  std::string violations;
  for (const Prime& p : config.primes) {
    for (int m : config.m) {
      for (double lambda : config.lambda) {
        const int e = bracket_lambda(lambda, p).exponent();
        if (m + e + 1 < 1) {
          violations += (violations.empty() ? "" : "; ") + std::string("p=") +
                        std::to_string(p.value()) + " m=" + std::to_string(m) +
                        " lambda=" + fmt_num(lambda);
        }
      }
    }
  }
  if (!violations.empty()) {
    throw std::domain_error("survival: 1 <= m + ceil(log_p lambda) fails for " + violations);
  }

  for (const Prime& p : config.primes) {
    const double sigma = config.sigma_for(p);
    for (int m : config.m) {
      const WalkParams params(p, config.b, sigma, m);
      const JumpLaw law = params.jump_law();
      const std::int64_t n = step_count(params, config.T);
      for (std::size_t li = 0; li < config.lambda.size(); ++li) {
        const double lambda = config.lambda[li];
        const int limit = m + 1 + bracket_lambda(lambda, p).exponent();
        const auto inside = run_replicas(config.N, config.workers, [&](std::uint64_t i) {
          RngStream rng(config.seed, mix_keys({kTagSurvival, p.value(),
                                               static_cast<std::uint64_t>(m), li, i}));
          return static_cast<std::uint8_t>(walk_max_exponent(law, n, rng, limit) <= limit);
        });
        const std::string cell = walk_params(p, config.b, sigma, m) + " T=" + fmt_num(config.T) +
                                 " lambda=" + fmt_num(lambda);
        const double exact = scaled_sup_survival(p, config.b, sigma, m, config.T, lambda);
        table.add(frequency_row(cell, "P(sup |x|_p / p < lambda)", count_true(inside), config.N,
                                exact, config.alpha, "scaled_sup_survival"));
        const double limit_value =
            scaled_sup_survival_limit(p, config.b, sigma, config.T, lambda);
        table.add({cell, "m -> infinity limit", table.rows.back().empirical, limit_value,
                   table.rows.back().band, Verdict::info, "scaled_sup_survival_limit"});
      }
    }
  }
  return table;
}

ResultTable run_marginal_convergence(const ExperimentConfig& config) {
  auto table = make_table("marginal", config);
  const double eps = stats::dkw_epsilon(config.N, config.alpha);
  const double band = eps + config.band;
  const auto trials = static_cast<double>(config.N);

  for (const Prime& p : config.primes) {
    const double sigma = config.sigma_for(p);
    for (double t : config.times) {
      std::vector<double> sups;
      for (std::size_t mi = 0; mi < config.m.size(); ++mi) {
        const int m = config.m[mi];
        const WalkParams params(p, config.b, sigma, m);
        const JumpLaw law = params.jump_law();
        const std::int64_t n = step_count(params, t);
        auto exps = run_replicas(config.N, config.workers, [&](std::uint64_t i) {
          RngStream rng(config.seed, mix_keys({kTagMarginal, p.value(), key_of(t),
                                               static_cast<std::uint64_t>(m), i}));
          WalkCursor cursor(law);
          for (std::int64_t j = 0; j < n; ++j) cursor.step(rng);
          return exponent_or_min(cursor.radius());
        });
        std::sort(exps.begin(), exps.end());

        const bool last = mi + 1 == config.m.size();
        const std::string cell = walk_params(p, config.b, sigma, m) + " t=" + fmt_num(t);
        double sup = 0.0;
        for (int k = config.k_min; k <= config.k_max; ++k) {
          // |p^m S|_p <= p^k  iff  exponent <= k + m.
          const auto below = std::upper_bound(exps.begin(), exps.end(), k + m) - exps.begin();
          const double empirical = static_cast<double>(below) / trials;
          const double series = limit_ball_prob(p, config.b, sigma, t, k, config.tol);
          sup = std::max(sup, std::abs(empirical - series));
          if (last) {
            table.add({cell + " k=" + std::to_string(k), "P(|x(t)|_p <= p^k)", empirical, series,
                       eps, Verdict::info, "limit_ball_prob"});
          }
        }
        sups.push_back(sup);
        table.add({cell, "sup_k |F_walk(k) - F_limit(k)|", sup, 0.0, band,
                   last ? verdict_of(sup <= band) : Verdict::info, "limit_ball_prob"});
      }
      if (sups.size() >= 2) {
        const std::string cell = "p=" + std::to_string(p.value()) + " b=" + fmt_num(config.b) +
                                 " sigma=" + fmt_num(sigma) + " t=" + fmt_num(t) +
                                 " m=" + std::to_string(config.m.front()) + ".." +
                                 std::to_string(config.m.back());
        table.add({cell, "sup deviation, smallest m minus largest m", sups.front() - sups.back(),
                   kNaN, kNaN, Verdict::info, "limit_ball_prob"});
      }
    }
  }
  return table;
}

ResultTable run_moment_scaling_test(const ExperimentConfig& config) {
  if (!config.r) throw ConfigError("r", 0, "moments needs r");
  auto table = make_table("moments", config);
  const double r = *config.r;
  const double order = r / config.b;
  const auto& times = config.times;
  const auto trials = static_cast<double>(config.N);

  for (const Prime& p : config.primes) {
    const double sigma = config.sigma_for(p);
    for (int m : config.m) {
      const WalkParams params(p, config.b, sigma, m);
      const JumpLaw law = params.jump_law();
      std::vector<std::int64_t> steps;
      for (double t : times) steps.push_back(step_count(params, t));

      // One path per replica, read at every time on the grid.
      const auto samples = run_replicas(config.N, config.workers, [&](std::uint64_t i) {
        RngStream rng(config.seed, mix_keys({kTagMoments, p.value(), static_cast<std::uint64_t>(m), i}));
        WalkCursor cursor(law);
        std::vector<double> values(times.size());
        for (std::size_t ti = 0; ti < times.size(); ++ti) {
          while (cursor.steps() < steps[ti]) cursor.step(rng);
          const RadialValue radius = cursor.radius();
          values[ti] = radius.is_zero() ? 0.0 : std::pow(p.as_double(), r * (radius.exponent() - m));
        }
        return values;
      });

      std::vector<double> mean(times.size(), 0.0);
      std::vector<double> sq(times.size(), 0.0);
      for (const auto& values : samples) {
        for (std::size_t ti = 0; ti < times.size(); ++ti) {
          mean[ti] += values[ti];
          sq[ti] += values[ti] * values[ti];
        }
      }
      std::vector<double> stderr_(times.size());
      for (std::size_t ti = 0; ti < times.size(); ++ti) {
        mean[ti] /= trials;
        const double var = std::max(0.0, sq[ti] / trials - mean[ti] * mean[ti]);
        stderr_[ti] = std::sqrt(var / trials);
      }

      const std::string cell = walk_params(p, config.b, sigma, m) + " r=" + fmt_num(r);
      const bool all_zero = std::all_of(mean.begin(), mean.end(), [](double v) { return v == 0.0; });
      const double C = mean.front() / std::pow(times.front(), order);
      for (std::size_t ti = 0; ti < times.size(); ++ti) {
        const std::string tcell = cell + " t=" + fmt_num(times[ti]);
        if (all_zero) {
          table.add({tcell, "E|x(t)|_p^r", mean[ti], 0.0, stderr_[ti],
                     verdict_of(mean[ti] == 0.0), "sigma = 0"});
        } else {
          table.add({tcell, "E|x(t)|_p^r (analytic = C t^(r/b), C from smallest t)", mean[ti],
                     C * std::pow(times[ti], order), stderr_[ti], Verdict::info,
                     "C t^(r/b) moment bound"});
        }
      }
      for (std::size_t ti = 0; ti + 1 < times.size(); ++ti) {
        if (mean[ti] <= 0.0) continue;
        const double ratio = times[ti + 1] / times[ti];
        table.add({cell + " t=" + fmt_num(times[ti]) + "->" + fmt_num(times[ti + 1]),
                   "moment ratio", mean[ti + 1] / mean[ti], std::pow(ratio, order), kNaN,
                   Verdict::info, "(t'/t)^(r/b)"});
      }

      std::vector<double> x;
      std::vector<double> y;
      for (std::size_t ti = 0; ti < times.size(); ++ti) {
        if (mean[ti] > 0.0) {
          x.push_back(std::log(times[ti]));
          y.push_back(std::log(mean[ti]));
        }
      }
      if (x.size() == times.size()) {
        const double slope = stats::ols_slope(x, y);
        table.add({cell, "log-log slope of E|x(t)|_p^r", slope, order, config.slope_tol,
                   verdict_of(std::abs(slope - order) <= config.slope_tol), "r / b"});
      } else {
        table.add({cell, "log-log slope of E|x(t)|_p^r (zero moments, not fitted)", kNaN, order,
                   config.slope_tol, Verdict::info, "r / b"});
      }
    }
  }
  return table;
}

ResultTable run_adelic_test(const ExperimentConfig& config) {
  auto table = make_table("adelic", config);
  if (config.lambda.size() > 63) throw ConfigError("lambda", 0, "at most 63 lambda values");
  constexpr std::uint64_t kEventA = std::uint64_t{1} << 63;

  for (int m : config.m) {
    const PrimeCutoff cutoff =
        choose_prime_cutoff(config.sigma, config.b, m, config.T, config.epsilon, config.c);
    std::vector<Prime> primes;
    for (const Prime& p : active_primes(config.sigma, cutoff.p_max)) {
      if (p.value() >= config.M) primes.push_back(p);
    }

    struct Component {
      Prime p;
      JumpLaw law;
      std::int64_t n;
      std::vector<int> limits;  // largest allowed exponent per lambda
    };
    std::vector<Component> components;
    int stop_margin = m;
    for (const Prime& p : primes) {
      const WalkParams params(p, config.b, config.sigma.at(p), m);
      Component c{p, params.jump_law(), step_count(params, config.T), {}};
      for (double lambda : config.lambda) {
        c.limits.push_back(m + 1 + bracket_lambda(lambda, p).exponent());
        stop_margin = std::max(stop_margin, c.limits.back());
      }
      components.push_back(std::move(c));
    }

    const auto events = run_replicas(config.N, config.workers, [&](std::uint64_t i) {
      const RngStream base(config.seed, mix_keys({kTagAdelic, static_cast<std::uint64_t>(m), i}));
      std::uint64_t mask = kEventA | ((std::uint64_t{1} << config.lambda.size()) - 1);
      for (const auto& c : components) {
        RngStream rng = base.substream(c.p.value());
        const int top = walk_max_exponent(c.law, c.n, rng, stop_margin);
        if (top > m) mask &= ~kEventA;
        for (std::size_t j = 0; j < c.limits.size(); ++j) {
          if (top > c.limits[j]) mask &= ~(std::uint64_t{1} << j);
        }
      }
      return mask;
    });
    auto hits = [&](std::uint64_t bit) {
      return static_cast<std::uint64_t>(std::count_if(
          events.begin(), events.end(), [&](std::uint64_t e) { return (e & bit) != 0; }));
    };

    std::string cell = "b=" + fmt_num(config.b) + " m=" + std::to_string(m) +
                       " T=" + fmt_num(config.T) + " M=" + std::to_string(config.M) + " primes=";
    for (std::size_t i = 0; i < primes.size(); ++i) {
      cell += (i ? "/" : "") + std::to_string(primes[i].value());
    }
    table.add({cell + " epsilon=" + fmt_num(config.epsilon), "prime cutoff (analytic = truncation bound)",
               static_cast<double>(cutoff.p_max), cutoff.bound, kNaN, Verdict::info,
               "choose_prime_cutoff"});

    double product = 1.0;
    for (const auto& c : components) {
      product *= scaled_sup_survival(c.p, config.b, config.sigma.at(c.p), m, config.T, 1.0);
    }
    const std::uint64_t a_hits = hits(kEventA);
    table.add(frequency_row(cell, "P(A(T, M; m))", a_hits, config.N, product, config.alpha,
                            "product of scaled_sup_survival at lambda=1"));
    const double bound = adelic_survival_bound(config.sigma, config.b, config.M, config.T, config.c);
    const auto a_ci = stats::clopper_pearson(a_hits, config.N, config.alpha);
    const double a_freq = static_cast<double>(a_hits) / static_cast<double>(config.N);
    table.add({cell + " c=" + fmt_num(config.c), "P(A(T, M; m)) >= bound", a_freq, bound,
               a_ci.half_width(), verdict_of(a_freq >= bound - a_ci.half_width()),
               "adelic_survival_bound"});

    for (std::size_t j = 0; j < config.lambda.size(); ++j) {
      const double lambda = config.lambda[j];
      const std::string lcell = cell + " lambda=" + fmt_num(lambda);
      bool exact_ok = true;
      double exact = 1.0;
      double limit = 1.0;
      for (const auto& c : components) {
        const double sigma = config.sigma.at(c.p);
        limit *= scaled_sup_survival_limit(c.p, config.b, sigma, config.T, lambda);
        if (c.limits[j] < m + 1) {
          exact_ok = false;
        } else {
          exact *= scaled_sup_survival(c.p, config.b, sigma, m, config.T, lambda);
        }
      }
      const std::uint64_t l_hits = hits(std::uint64_t{1} << j);
      if (exact_ok) {
        table.add(frequency_row(lcell, "P(Lambda(T, M, lambda))", l_hits, config.N, exact,
                                config.alpha, "product of scaled_sup_survival"));
      }
      const auto ci = stats::clopper_pearson(l_hits, config.N, config.alpha);
      table.add({lcell, "P(Lambda(T, M, lambda)) vs product of limits",
                 static_cast<double>(l_hits) / static_cast<double>(config.N), limit,
                 ci.half_width(), Verdict::info, "product of scaled_sup_survival_limit"});
    }
  }
  return table;
}

ResultTable run_tightness_test(const ExperimentConfig& config) {
  auto table = make_table("tightness", config);
  const auto& deltas = config.delta;
  const auto& lambdas = config.lambda;

  for (int m : config.m) {
    const PrimeCutoff cutoff =
        choose_prime_cutoff(config.sigma, config.b, m, config.T, config.epsilon, config.c);
    std::map<Prime, StepClock> clocks;
    for (const Prime& p : active_primes(config.sigma, cutoff.p_max)) {
      clocks.emplace(p, StepClock(WalkParams(p, config.b, config.sigma.at(p), m), config.T));
    }

    struct Sample {
      std::vector<double> modulus;  // per delta
      double sup = 0.0;
    };
    const auto samples = run_replicas(config.N, config.workers, [&](std::uint64_t i) {
      const RngStream base(config.seed, mix_keys({kTagTightness, static_cast<std::uint64_t>(m), i}));
      std::map<Prime, SinglePrimePath> components;
      for (const auto& [p, clock] : clocks) {
        RngStream rng = base.substream(p.value());
        components.emplace(p, simulate_single(clock, rng));
      }
      const AdelicPath path(std::move(components), cutoff.p_max, cutoff.bound, config.T);
      const StepPath merged = StepPath::from_adelic(path);
      Sample s;
      for (double delta : deltas) s.modulus.push_back(modified_modulus(merged, delta, config.T));
      s.sup = path_sup_norm(merged, config.T);
      return s;
    });

    std::string cell = "b=" + fmt_num(config.b) + " m=" + std::to_string(m) +
                       " T=" + fmt_num(config.T) + " primes=";
    bool first = true;
    for (const auto& [p, clock] : clocks) {
      cell += (first ? "" : "/") + std::to_string(p.value());
      first = false;
    }
    const auto trials = static_cast<double>(config.N);

    for (double lambda : lambdas) {
      std::vector<std::uint64_t> exceed(deltas.size(), 0);
      for (const auto& s : samples) {
        for (std::size_t d = 0; d < deltas.size(); ++d) exceed[d] += s.modulus[d] >= lambda;
      }
      std::vector<stats::Interval> ci;
      for (std::size_t d = 0; d < deltas.size(); ++d) {
        ci.push_back(stats::clopper_pearson(exceed[d], config.N, config.alpha));
        table.add({cell + " lambda=" + fmt_num(lambda) + " delta=" + fmt_num(deltas[d]),
                   "P(w'_T(x, delta) >= lambda)", static_cast<double>(exceed[d]) / trials, kNaN,
                   ci.back().half_width(), Verdict::info, "adelic_modulus"});
      }
      for (std::size_t d = 0; d + 1 < deltas.size(); ++d) {
        const double rise = static_cast<double>(exceed[d + 1]) / trials -
                            static_cast<double>(exceed[d]) / trials;
        const double slack = ci[d].half_width() + ci[d + 1].half_width();
        table.add({cell + " lambda=" + fmt_num(lambda) + " delta=" + fmt_num(deltas[d]) + "->" +
                       fmt_num(deltas[d + 1]),
                   "exceedance increase along decreasing delta", rise, 0.0, slack,
                   verdict_of(rise <= slack), "adelic_modulus"});
      }

      std::uint64_t below = 0;
      for (const auto& s : samples) below += s.sup < lambda;
      const auto sci = stats::clopper_pearson(below, config.N, config.alpha);
      const double freq = static_cast<double>(below) / trials;
      const std::string lcell = cell + " lambda=" + fmt_num(lambda);
      table.add({lcell, "P(sup_{s<=T} |x(s)|_A >= lambda)", 1.0 - freq, kNaN, sci.half_width(),
                 Verdict::info, "path_sup_norm"});
      const double bound = adelic_sup_bound(config.sigma, config.b, config.T, lambda);
      table.add({lcell, "P(sup_{s<=T} |x(s)|_A < lambda) >= bound", freq, bound, sci.half_width(),
                 verdict_of(freq >= bound - sci.half_width()), "adelic_sup_bound"});
    }
  }
  return table;
}

ResultTable run_oracle_table(const ExperimentConfig& config) {
  auto table = make_table("oracle", config);
  for (const Prime& p : config.primes) {
    const double sigma = config.sigma_for(p);
    const std::string base = "p=" + std::to_string(p.value()) + " b=" + fmt_num(config.b) +
                             " sigma=" + fmt_num(sigma);
    table.add({base, "diffusion constant D", kNaN, diffusion_constant(p, config.b, sigma), kNaN,
               Verdict::info, "diffusion_constant"});
    for (int m : config.m) {
      const WalkParams params(p, config.b, sigma, m);
      for (double lambda : config.lambda) {
        const std::string cell = walk_params(p, config.b, sigma, m) +
                                 " T=" + fmt_num(config.T) + " lambda=" + fmt_num(lambda);
        const int e = bracket_lambda(lambda, p).exponent();
        if (m + e + 1 >= 1) {
          table.add({cell + " n=" + std::to_string(step_count(params, config.T)),
                     "P(sup |x|_p / p < lambda)", kNaN,
                     scaled_sup_survival(p, config.b, sigma, m, config.T, lambda), kNaN,
                     Verdict::info, "scaled_sup_survival"});
        }
      }
    }
    for (double lambda : config.lambda) {
      table.add({base + " T=" + fmt_num(config.T) + " lambda=" + fmt_num(lambda),
                 "m -> infinity limit", kNaN,
                 scaled_sup_survival_limit(p, config.b, sigma, config.T, lambda), kNaN,
                 Verdict::info, "scaled_sup_survival_limit"});
    }
    for (double t : config.times) {
      for (int k = config.k_min; k <= config.k_max; ++k) {
        table.add({base + " t=" + fmt_num(t) + " k=" + std::to_string(k), "P(|Y_t|_p <= p^k)",
                   kNaN, limit_ball_prob(p, config.b, sigma, t, k, config.tol), kNaN,
                   Verdict::info, "limit_ball_prob"});
      }
    }
  }
  if (config.sigma_given) {
    const TailSum tail = prime_tail_sum(config.sigma, config.b, config.M);
    const std::string cell = "b=" + fmt_num(config.b) + " M=" + std::to_string(config.M);
    table.add({cell, "sum_{p>=M} coefficient * sigma_p (band = remainder bound)", kNaN, tail.value,
               tail.remainder_bound, Verdict::info, "prime_tail_sum"});
    table.add({cell + " T=" + fmt_num(config.T) + " c=" + fmt_num(config.c), "survival bound",
               kNaN, adelic_survival_bound(config.sigma, config.b, config.M, config.T, config.c),
               kNaN, Verdict::info, "adelic_survival_bound"});
    for (double lambda : config.lambda) {
      table.add({"b=" + fmt_num(config.b) + " T=" + fmt_num(config.T) + " lambda=" + fmt_num(lambda),
                 "sup bound", kNaN, adelic_sup_bound(config.sigma, config.b, config.T, lambda),
                 kNaN, Verdict::info, "adelic_sup_bound"});
    }
    for (int m : config.m) {
      const PrimeCutoff cutoff =
          choose_prime_cutoff(config.sigma, config.b, m, config.T, config.epsilon, config.c);
      table.add({"b=" + fmt_num(config.b) + " m=" + std::to_string(m) + " T=" + fmt_num(config.T) +
                     " epsilon=" + fmt_num(config.epsilon),
                 "prime cutoff (analytic = truncation bound)", static_cast<double>(cutoff.p_max),
                 cutoff.bound, kNaN, Verdict::info, "choose_prime_cutoff"});
    }
  }
  return table;
}

ResultTable run_experiment(const ExperimentConfig& config) {
  const auto& name = config.experiment;
  if (name == "jump-law") return run_jump_law_test(config);
  if (name == "survival") return run_survival_test(config);
  if (name == "marginal") return run_marginal_convergence(config);
  if (name == "moments") return run_moment_scaling_test(config);
  if (name == "adelic") return run_adelic_test(config);
  if (name == "tightness") return run_tightness_test(config);
  if (name == "oracle") return run_oracle_table(config);
  throw ConfigError("experiment", 0, "unknown or missing experiment '" + name + "'");
}

}  // namespace adelic
