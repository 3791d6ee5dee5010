#include "adelic/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace adelic {

ConfigError::ConfigError(std::string key, int line, const std::string& message)
    : std::runtime_error(line > 0 ? "config line " + std::to_string(line) + ", key '" + key +
                                        "': " + message
                                  : "config key '" + key + "': " + message),
      key_(std::move(key)),
      line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t from = 0;
  while (true) {
    const auto at = s.find(sep, from);
    parts.push_back(trim(s.substr(from, at == std::string_view::npos ? at : at - from)));
    if (at == std::string_view::npos) break;
    from = at + 1;
  }
  return parts;
}

// Parsing context for one "key = value" line.
struct Entry {
  std::string key;
  std::string_view value;
  int line;

  [[noreturn]] void fail(const std::string& message) const { throw ConfigError(key, line, message); }

  template <class T>
  T number(std::string_view text) const {
    T out{};
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, out);
    if (text.empty() || ec != std::errc() || ptr != end) {
      fail("malformed number '" + std::string(text) + "'");
    }
    if constexpr (std::is_floating_point_v<T>) {
      if (!std::isfinite(out)) fail("value must be finite");
    }
    return out;
  }

  template <class T>
  T scalar() const {
    return number<T>(value);
  }

  template <class T>
  std::vector<T> list() const {
    std::vector<T> out;
    for (auto part : split(value, ',')) out.push_back(number<T>(part));
    return out;
  }
};

using Setter = std::function<void(ExperimentConfig&, const Entry&)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"experiment",
       [](ExperimentConfig& c, const Entry& e) {
         const auto& names = kExperimentNames;
         if (std::find(std::begin(names), std::end(names), e.value) == std::end(names)) {
           e.fail("unknown experiment '" + std::string(e.value) + "'");
         }
         c.experiment = std::string(e.value);
       }},
      {"primes",
       [](ExperimentConfig& c, const Entry& e) {
         c.primes.clear();
         for (auto v : e.list<std::uint64_t>()) {
           if (!is_prime(v)) e.fail(std::to_string(v) + " is not prime");
           c.primes.emplace_back(v);
         }
       }},
      {"sigma",
       [](ExperimentConfig& c, const Entry& e) {
         std::map<Prime, double> values;
         for (auto part : split(e.value, ',')) {
           const auto colon = part.find(':');
           if (colon == std::string_view::npos) e.fail("sigma entries are written p:value");
           const auto p = e.number<std::uint64_t>(trim(part.substr(0, colon)));
           const auto v = e.number<double>(trim(part.substr(colon + 1)));
           if (!is_prime(p)) e.fail(std::to_string(p) + " is not prime");
           if (v < 0.0) e.fail("sigma values must be nonnegative");
           if (!values.emplace(Prime(p), v).second) e.fail("prime " + std::to_string(p) + " repeated");
         }
         c.sigma = SigmaSpec(std::move(values), c.sigma.tail());
         c.sigma_given = true;
       }},
      {"tail",
       [](ExperimentConfig& c, const Entry& e) {
         const auto v = e.list<double>();
         if (v.size() != 2) e.fail("tail is written a,s");
         if (v[0] < 0.0) e.fail("tail amplitude a must be nonnegative");
         if (!(v[1] > 1.0)) e.fail("tail exponent s must exceed 1");
         c.sigma = SigmaSpec(c.sigma.explicit_values(), PowerTail{v[0], v[1]});
         c.sigma_given = true;
       }},
      {"b", [](ExperimentConfig& c, const Entry& e) { c.b = e.scalar<double>(); }},
      {"m", [](ExperimentConfig& c, const Entry& e) { c.m = e.list<int>(); }},
      {"T", [](ExperimentConfig& c, const Entry& e) { c.T = e.scalar<double>(); }},
      {"times", [](ExperimentConfig& c, const Entry& e) { c.times = e.list<double>(); }},
      {"lambda", [](ExperimentConfig& c, const Entry& e) { c.lambda = e.list<double>(); }},
      {"delta", [](ExperimentConfig& c, const Entry& e) { c.delta = e.list<double>(); }},
      {"k",
       [](ExperimentConfig& c, const Entry& e) {
         const auto v = e.list<int>();
         if (v.size() != 2) e.fail("k is written lo,hi");
         c.k_min = v[0];
         c.k_max = v[1];
       }},
      {"r", [](ExperimentConfig& c, const Entry& e) { c.r = e.scalar<double>(); }},
      {"N", [](ExperimentConfig& c, const Entry& e) { c.N = e.scalar<std::uint64_t>(); }},
      {"seed", [](ExperimentConfig& c, const Entry& e) { c.seed = e.scalar<std::uint64_t>(); }},
      {"workers", [](ExperimentConfig& c, const Entry& e) { c.workers = e.scalar<unsigned>(); }},
      {"out", [](ExperimentConfig& c, const Entry& e) { c.out = std::string(e.value); }},
      {"tol", [](ExperimentConfig& c, const Entry& e) { c.tol.abs_tol = e.scalar<double>(); }},
      {"alpha", [](ExperimentConfig& c, const Entry& e) { c.alpha = e.scalar<double>(); }},
      {"epsilon", [](ExperimentConfig& c, const Entry& e) { c.epsilon = e.scalar<double>(); }},
      {"M", [](ExperimentConfig& c, const Entry& e) { c.M = e.scalar<std::uint64_t>(); }},
      {"c", [](ExperimentConfig& c, const Entry& e) { c.c = e.scalar<double>(); }},
      {"band", [](ExperimentConfig& c, const Entry& e) { c.band = e.scalar<double>(); }},
      {"slope_tol", [](ExperimentConfig& c, const Entry& e) { c.slope_tol = e.scalar<double>(); }},
      {"sphere_k", [](ExperimentConfig& c, const Entry& e) { c.sphere_k = e.scalar<int>(); }},
  };
  return table;
}

using LineOf = std::function<int(const std::string&)>;

void check(const ExperimentConfig& c, const LineOf& line_of) {
  auto require = [&](bool ok, const std::string& key, const std::string& message) {
    if (!ok) throw ConfigError(key, line_of(key), message);
  };
  require(c.N >= 1, "N", "N must be at least 1");
  require(c.workers >= 1, "workers", "workers must be at least 1");
  require(!c.primes.empty(), "primes", "at least one prime is required");
  require(c.b > 0.0, "b", "b must be positive");
  require(!c.m.empty(), "m", "at least one m is required");
  require(std::all_of(c.m.begin(), c.m.end(), [](int m) { return m >= 0; }), "m",
          "m values must be nonnegative");
  require(c.T >= 0.0, "T", "T must be nonnegative");
  require(!c.times.empty(), "times", "at least one time is required");
  require(std::all_of(c.times.begin(), c.times.end(), [](double t) { return t >= 0.0; }),
          "times", "times must be nonnegative");
  require(!c.lambda.empty(), "lambda", "at least one lambda is required");
  require(std::all_of(c.lambda.begin(), c.lambda.end(), [](double l) { return l > 0.0; }),
          "lambda", "lambda values must be positive");
  if (c.experiment == "tightness" || line_of("delta") > 0) {
    require(!c.delta.empty() && std::all_of(c.delta.begin(), c.delta.end(),
                                             [&](double d) { return d > 0.0 && d < c.T; }),
            "delta", "delta values must lie in (0, T)");
  }
  require(c.k_min <= c.k_max, "k", "k range needs lo <= hi");
  require(c.tol.abs_tol > 0.0, "tol", "tol must be positive");
  require(c.alpha > 0.0 && c.alpha < 1.0, "alpha", "alpha must lie in (0, 1)");
  require(c.epsilon > 0.0 && c.epsilon < 1.0, "epsilon", "epsilon must lie in (0, 1)");
  require(c.M >= 2, "M", "M must be at least 2");
  require(c.c > 1.0, "c", "c must exceed 1");
  require(c.band >= 0.0, "band", "band must be nonnegative");
  require(c.slope_tol >= 0.0, "slope_tol", "slope_tol must be nonnegative");
  require(c.sphere_k >= 0, "sphere_k", "sphere_k must be nonnegative");
  if (c.r || c.experiment == "moments") {
    require(c.r.has_value(), "r", "moments needs r");
    require(*c.r > 0.0 && *c.r < c.b, "r", "r must lie in (0, b)");
  }
  if (c.experiment == "marginal") {
    require(std::is_sorted(c.m.begin(), c.m.end()) &&
                std::adjacent_find(c.m.begin(), c.m.end()) == c.m.end(),
            "m", "m list must be increasing");
  }
  if (c.experiment == "tightness") {
    require(std::is_sorted(c.delta.begin(), c.delta.end(), std::greater<>()) &&
                std::adjacent_find(c.delta.begin(), c.delta.end()) == c.delta.end(),
            "delta", "delta grid must be decreasing");
  }
  if (c.experiment == "moments") {
    require(std::is_sorted(c.times.begin(), c.times.end()) &&
                std::adjacent_find(c.times.begin(), c.times.end()) == c.times.end() &&
                c.times.size() >= 2 && c.times.front() > 0.0,
            "times", "moments needs at least two increasing positive times");
  }
  if (c.experiment == "adelic" || c.experiment == "tightness") {
    require(c.sigma_given, "sigma", c.experiment + " needs sigma or tail");
  }
}

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig config;
  std::unordered_map<std::string, int> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view view(raw);
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(std::string(view), line, "expected 'key = value'");
    }
    Entry entry{std::string(trim(view.substr(0, eq))), trim(view.substr(eq + 1)), line};
    const auto setter = setters().find(entry.key);
    if (setter == setters().end()) entry.fail("unknown key");
    if (!seen.emplace(entry.key, line).second) entry.fail("key repeated");
    if (entry.value.empty()) entry.fail("missing value");
    setter->second(config, entry);
  }
  check(config, [&](const std::string& key) {
    const auto it = seen.find(key);
    return it == seen.end() ? 0 : it->second;
  });
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", 0, "cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

void validate_config(const ExperimentConfig& config) {
  check(config, [](const std::string&) { return 0; });
}

}  // namespace adelic
