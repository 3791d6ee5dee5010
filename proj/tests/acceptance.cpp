// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. Sampling sizes are the full ones; expect a few minutes on one core.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "adelic/config.hpp"
#include "adelic/experiments.hpp"
#include "adelic/oracles.hpp"
#include "adelic/results.hpp"
#include "adelic/skorokhod.hpp"
#include "adelic/stats.hpp"
#include "support.hpp"

using namespace adelic;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::vector<const ResultRow*> rows_where(const ResultTable& t,
                                         const std::function<bool(const ResultRow&)>& keep) {
  std::vector<const ResultRow*> out;
  for (const auto& row : t.rows) {
    if (keep(row)) out.push_back(&row);
  }
  return out;
}

bool quantity_is(const ResultRow& row, std::string_view q) { return row.quantity == q; }

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// Configurations of the sampling criteria, shared by both determinism runs.
struct Suite {
  std::vector<std::pair<std::string, std::string>> configs = {
      {"jump-law-2-1", "experiment = jump-law\nprimes = 2\nb = 1\nN = 100000\nsphere_k = 0\n"},
      {"jump-law-3-0.5", "experiment = jump-law\nprimes = 3\nb = 0.5\nN = 100000\nsphere_k = 2\n"},
      {"jump-law-5-2", "experiment = jump-law\nprimes = 5\nb = 2\nN = 100000\nsphere_k = 0\n"},
      {"survival",
       "experiment = survival\nprimes = 2\nb = 1\nsigma = 2:1\nlambda = 1\nT = 1\nm = 1, 2, 3\n"
       "N = 100000\n"},
      {"marginal",
       "experiment = marginal\nprimes = 2\nb = 1\nsigma = 2:1\ntimes = 1\nm = 2, 8\nk = -10, 10\n"
       "N = 100000\n"},
      {"moments",
       "experiment = moments\nprimes = 2\nb = 2\nr = 1\nsigma = 2:1\nm = 6\n"
       "times = 0.015625, 0.03125, 0.0625, 0.125, 0.25, 0.5, 1\nN = 100000\n"},
      {"adelic",
       "experiment = adelic\nsigma = 2:1, 3:0.5\nb = 1\nM = 2\nlambda = 1\nT = 1\nm = 3\n"
       "N = 100000\n"},
      {"adelic-tail",
       "experiment = adelic\nsigma = 2:1, 3:0.5\ntail = 1, 2\nepsilon = 0.01\nc = 2\nb = 1\nM = 2\n"
       "lambda = 1\nT = 1\nm = 3\nN = 100000\n"},
      {"tightness",
       "experiment = tightness\nsigma = 2:1, 3:0.5\nb = 1\nm = 5\nT = 1\nlambda = 1, 2, 4\n"
       "delta = 0.5, 0.25, 0.1, 0.05, 0.02\nN = 20000\n"},
  };

  std::map<std::string, ResultTable> run(const std::filesystem::path& out) const {
    std::map<std::string, ResultTable> tables;
    for (const auto& [name, text] : configs) {
      const auto start = std::chrono::steady_clock::now();
      ResultTable t = run_experiment(parse_config(text));
      const double wall =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      emit_results(t, out / name, wall);
      std::fprintf(stderr, "  ran %-15s %6.1fs  (%zu rows, %zu failed)\n", name.c_str(), wall,
                   t.rows.size(), t.failures());
      tables.emplace(name, std::move(t));
    }
    return tables;
  }
};

Outcome jump_law(const std::map<std::string, ResultTable>& tables) {
  Outcome o{true, ""};
  for (const char* name : {"jump-law-2-1", "jump-law-3-0.5", "jump-law-5-2"}) {
    for (const auto* row : rows_where(tables.at(name), [](const ResultRow& r) {
           return quantity_is(r, "sup_k |P(K > k) - p^-kb|");
         })) {
      o.pass &= row->verdict == Verdict::pass;
      o.detail += "(" + row->params + ") sup " + num(row->empirical) + " <= " + num(row->band) + "; ";
    }
  }
  return o;
}

Outcome sphere(const std::map<std::string, ResultTable>& tables) {
  const auto points = rows_where(tables.at("jump-law-3-0.5"), [](const ResultRow& r) {
    return r.params.find("k=2 point=") != std::string::npos;
  });
  Outcome o{points.size() == 6, ""};
  double worst = 0.0;
  for (const auto* row : points) {
    worst = std::max(worst, std::abs(row->empirical - 1.0 / 6.0));
    o.pass &= std::abs(row->empirical - 1.0 / 6.0) <= 0.01;
  }
  o.detail = std::to_string(points.size()) + " points, max |freq - 1/6| = " + num(worst);
  return o;
}

Outcome gp_oracle() {
  RngStream rng(2024, 3);
  const std::uint64_t primes[] = {2, 3, 5, 7, 11, 101};
  int mismatches = 0;
  for (int i = 0; i < 10000; ++i) {
    const Prime p(primes[i % 6]);
    const auto x = testing::random_gp(p, 1 + static_cast<int>(rng.uniform_below(16)), rng);
    const auto y = testing::random_gp(p, 1 + static_cast<int>(rng.uniform_below(16)), rng);
    mismatches += !(gp_add(x, y) == testing::rational_gp_add(x, y));
  }
  return {mismatches == 0, "10000 pairs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome survival(const std::map<std::string, ResultTable>& tables) {
  const auto rows = rows_where(tables.at("survival"), [](const ResultRow& r) {
    return quantity_is(r, "P(sup |x|_p / p < lambda)");
  });
  Outcome o{rows.size() == 3 && std::abs(rows[0]->analytic - 0.5) < 1e-15, ""};
  for (const auto* row : rows) {
    o.pass &= row->verdict == Verdict::pass;
    o.detail += "(" + row->params.substr(row->params.find("m=")) + ") " + num(row->empirical) +
                " vs " + num(row->analytic) + " +- " + num(row->band) + "; ";
  }
  return o;
}

Outcome limit_formula() {
  const double v = scaled_sup_survival(Prime(2), 1.0, 1.0, 14, 1.0, 1.0);
  const double gap = std::abs(v - std::exp(-2.0 / 3.0));
  return {gap <= 1e-3, "m=14 value " + num(v) + ", gap " + num(gap)};
}

Outcome heat_series(const std::map<std::string, ResultTable>& tables) {
  const Prime p(2);
  const double small_t = limit_ball_prob(p, 1.0, 1.0, 1e-9, 0);
  bool monotone = true;
  double previous = 0.0;
  for (int k = -10; k <= 10; ++k) {
    const double v = limit_ball_prob(p, 1.0, 1.0, 1.0, k);
    monotone &= v >= previous;
    previous = v;
  }
  const auto sups = rows_where(tables.at("marginal"), [](const ResultRow& r) {
    return quantity_is(r, "sup_k |F_walk(k) - F_limit(k)|");
  });
  const ResultRow* m8 = nullptr;
  for (const auto* row : sups) {
    if (row->params.find("m=8") != std::string::npos) m8 = row;
  }
  const double band = stats::dkw_epsilon(100000, 1e-3) + 0.01;
  const bool sampled = m8 && m8->empirical <= band;
  std::string detail = "P(t=1e-9, k=0) = " + num(small_t) + ", monotone " +
                       (monotone ? "yes" : "no");
  if (m8) detail += ", m=8 sup " + num(m8->empirical) + " <= " + num(band);
  if (sups.size() == 2) detail += " (m=2 sup " + num(sups[0]->empirical) + ")";
  return {small_t >= 1.0 - 1e-6 && monotone && sampled, detail};
}

Outcome moments(const std::map<std::string, ResultTable>& tables) {
  const auto rows = rows_where(tables.at("moments"), [](const ResultRow& r) {
    return quantity_is(r, "log-log slope of E|x(t)|_p^r");
  });
  if (rows.size() != 1) return {false, "no slope row"};
  const double slope = rows[0]->empirical;
  return {std::abs(slope - 0.5) <= 0.05, "slope " + num(slope) + " vs 0.5"};
}

Outcome modulus_oracle() {
  RngStream rng(808, 1);
  int mismatches = 0;
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const double T = i % 2 == 0 ? 1.0 : 2.5;
    const StepPath path = testing::random_step_path(Prime(i % 3 == 0 ? 3 : 2), 8, T, rng);
    for (double frac : {0.05, 0.2, 0.5}) {
      ++checked;
      mismatches += modified_modulus(path, frac * T, T) != brute_force_modulus(path, frac * T, T);
    }
  }
  return {mismatches == 0,
          std::to_string(checked) + " comparisons, " + std::to_string(mismatches) + " mismatches"};
}

Outcome adelic_survival(const std::map<std::string, ResultTable>& tables) {
  const auto finite = rows_where(tables.at("adelic"), [](const ResultRow& r) {
    return quantity_is(r, "P(A(T, M; m))");
  });
  const auto bound = rows_where(tables.at("adelic-tail"), [](const ResultRow& r) {
    return quantity_is(r, "P(A(T, M; m)) >= bound");
  });
  if (finite.size() != 1 || bound.size() != 1) return {false, "missing rows"};
  const double expected = std::pow(7.0 / 8.0, 5) * std::pow(26.0 / 27.0, 10);
  const bool product_ok = std::abs(finite[0]->analytic - expected) < 1e-12;
  return {product_ok && finite[0]->verdict == Verdict::pass && bound[0]->verdict == Verdict::pass,
          "product " + num(finite[0]->empirical) + " vs " + num(finite[0]->analytic) + " +- " +
              num(finite[0]->band) + "; tail " + num(bound[0]->empirical) + " >= " +
              num(bound[0]->analytic) + " - " + num(bound[0]->band)};
}

Outcome tightness(const std::map<std::string, ResultTable>& tables) {
  const auto& t = tables.at("tightness");
  const auto mono = rows_where(t, [](const ResultRow& r) {
    return quantity_is(r, "exceedance increase along decreasing delta");
  });
  const auto bound = rows_where(t, [](const ResultRow& r) {
    return quantity_is(r, "P(sup_{s<=T} |x(s)|_A < lambda) >= bound");
  });
  Outcome o{mono.size() == 12 && bound.size() == 3, ""};
  int mono_fail = 0;
  for (const auto* row : mono) mono_fail += row->verdict != Verdict::pass;
  o.pass &= mono_fail == 0;
  o.detail = std::to_string(mono.size() - mono_fail) + "/" + std::to_string(mono.size()) +
             " delta steps nonincreasing; ";
  for (const auto* row : bound) {
    o.pass &= row->verdict == Verdict::pass;
    o.detail += row->params.substr(row->params.find("lambda=")) + ": " + num(row->empirical) +
                " >= " + num(row->analytic) + " - " + num(row->band) + "; ";
  }
  return o;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Outcome determinism(const Suite& suite, const std::filesystem::path& a,
                    const std::filesystem::path& b) {
  int differing = 0;
  for (const auto& [name, text] : suite.configs) {
    const std::string x = read_file(a / name / "results.csv");
    const std::string y = read_file(b / name / "results.csv");
    differing += x.empty() || x != y;
  }
  return {differing == 0, std::to_string(suite.configs.size()) + " results.csv files, " +
                              std::to_string(differing) + " differ"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path out =
      argc > 1 ? std::filesystem::path(argv[1]) : std::filesystem::path("acceptance_out");
  const Suite suite;

  std::fprintf(stderr, "first run\n");
  const auto tables = suite.run(out / "run1");
  std::fprintf(stderr, "second run\n");
  suite.run(out / "run2");

  const std::vector<std::pair<std::string, Outcome>> results = {
      {"jump law tails within DKW band", jump_law(tables)},
      {"sphere point frequencies uniform", sphere(tables)},
      {"G_p addition matches rational oracle", gp_oracle()},
      {"survival frequencies inside Clopper-Pearson CI", survival(tables)},
      {"survival formula near its limit at m=14", limit_formula()},
      {"limit ball series and walk marginals", heat_series(tables)},
      {"moment scaling slope", moments(tables)},
      {"modulus DP matches exhaustive search", modulus_oracle()},
      {"adelic survival product and bound", adelic_survival(tables)},
      {"tightness diagnostics", tightness(tables)},
      {"byte-identical reruns", determinism(suite, out / "run1", out / "run2")},
  };

  int failures = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& [name, o] = results[i];
    failures += !o.pass;
    std::printf("%s criterion %zu: %s -- %s\n", o.pass ? "PASS" : "FAIL", i + 1, name.c_str(),
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(results.size()) - failures,
              results.size());
  return failures == 0 ? 0 : 1;
}
