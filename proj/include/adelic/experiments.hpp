#pragma once

#include "adelic/config.hpp"
#include "adelic/results.hpp"

namespace adelic {

// Each runner validates the config before sampling and returns one table.
// Replica i of a cell draws from a stream keyed only by (seed, cell, i), so
// tables are identical for every worker count.

// Radius tail P(K > k) against p^(-kb) under the DKW band, and sphere point
// frequencies against uniform for spheres of at most 4096 points.
ResultTable run_jump_law_test(const ExperimentConfig& config);

// Frequency of sup_{s <= T} |p^m S_{n(s)}|_p / p < lambda against
// scaled_sup_survival with a Clopper-Pearson interval. Throws
// std::domain_error listing every (p, m, lambda) that violates the
// hypothesis, before sampling.
ResultTable run_survival_test(const ExperimentConfig& config);

// sup_k |P(|S^(m)(t)|_p <= p^k) - limit_ball_prob(t, k)| per m. Only the
// largest m is checked against DKW + band; smaller m are reported.
ResultTable run_marginal_convergence(const ExperimentConfig& config);

// E|S^(m)(t)|_p^r on the configured times with a log-log slope fit against
// r / b.
ResultTable run_moment_scaling_test(const ExperimentConfig& config);

// Frequencies of the events that no simulated component with p >= M leaves
// Z_p (resp. the ball of radius lambda) before T, against exact products and
// adelic_survival_bound.
ResultTable run_adelic_test(const ExperimentConfig& config);

// Modulus exceedance P(w'_T >= lambda) along the delta grid and P(sup < lambda)
// against adelic_sup_bound for the truncated adelic walk.
ResultTable run_tightness_test(const ExperimentConfig& config);

// Closed-form values only, no sampling.
ResultTable run_oracle_table(const ExperimentConfig& config);

// Dispatch on config.experiment.
ResultTable run_experiment(const ExperimentConfig& config);

}  // namespace adelic
