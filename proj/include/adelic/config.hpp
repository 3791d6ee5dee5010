#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "adelic/oracles.hpp"
#include "adelic/primes.hpp"
#include "adelic/sigma.hpp"

namespace adelic {

// Error in a configuration file. line is 0 when the problem is not tied to a
// particular line (e.g. a missing key or a command-line override).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, int line, const std::string& message);

  const std::string& key() const noexcept { return key_; }
  int line() const noexcept { return line_; }

 private:
  std::string key_;
  int line_;
};

inline constexpr std::string_view kExperimentNames[] = {"jump-law", "survival", "marginal",
                                                        "moments",  "adelic",   "tightness",
                                                        "oracle"};

// Free parameters of one experiment run. Defaults are applied by
// parse_config; see README for the key reference.
struct ExperimentConfig {
  std::string experiment;
  std::vector<Prime> primes{Prime(2)};
  SigmaSpec sigma;
  bool sigma_given = false;
  double b = 1.0;
  std::vector<int> m{3};
  double T = 1.0;
  std::vector<double> times{1.0};
  std::vector<double> lambda{1.0};
  std::vector<double> delta{0.5, 0.25, 0.1};
  int k_min = -4;
  int k_max = 8;
  std::optional<double> r;
  std::uint64_t N = 100'000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::filesystem::path out = "results";
  SeriesTolerance tol;
  double alpha = 1e-3;
  double epsilon = 1e-3;
  std::uint64_t M = 2;
  double c = 2.0;
  double band = 0.01;
  double slope_tol = 0.05;
  int sphere_k = 2;

  // sigma_p for single-prime experiments: 1 when no sigma was configured.
  double sigma_for(const Prime& p) const { return sigma_given ? sigma.at(p) : 1.0; }
};

// Parses line-based "key = value" text with '#' comments. Lists are
// comma-separated, sigma entries are "p:value", tail is "a,s". Unknown or
// repeated keys, malformed values and violated invariants raise ConfigError
// carrying the key and line.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

// Re-checks the invariants, e.g. after command-line overrides.
void validate_config(const ExperimentConfig& config);

}  // namespace adelic
