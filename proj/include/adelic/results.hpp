#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace adelic {

// pass/fail rows are checked comparisons; info rows carry context or trends
// and never affect the outcome.
enum class Verdict { pass, fail, info };

std::string_view verdict_name(Verdict v) noexcept;

struct ResultRow {
  std::string params;    // e.g. "p=2 b=1 sigma=1 m=3 T=1"
  std::string quantity;  // what empirical/analytic measure
  double empirical;
  double analytic;  // NaN when there is no analytic counterpart
  double band;      // CI half-width, DKW band or tolerance
  Verdict verdict;
  std::string oracle;  // operation that produced the analytic column
};

struct ResultTable {
  std::string experiment;
  std::uint64_t seed = 0;
  double alpha = 0.0;
  std::vector<ResultRow> rows;

  void add(ResultRow row) { rows.push_back(std::move(row)); }
  std::size_t passes() const;
  std::size_t failures() const;
  bool all_pass() const { return failures() == 0; }
};

// Pass when the predicate holds, fail otherwise.
inline Verdict verdict_of(bool ok) noexcept { return ok ? Verdict::pass : Verdict::fail; }

// Fixed column order; numbers printed with %.10g, NaN as an empty field.
inline constexpr std::string_view kCsvHeader =
    "experiment,params,quantity,empirical,analytic,band,pass,oracle";
std::string to_csv(const ResultTable& table);

// JSON summary with keys experiment, seed, alpha, rows, passes, failures,
// wall_time_s.
std::string summary_json(const ResultTable& table, double wall_time_s);

struct SummaryRecord {
  std::string experiment;
  std::uint64_t seed;
  std::size_t rows;
  std::size_t passes;
  std::size_t failures;
  double wall_time_s;
};
SummaryRecord parse_summary(std::string_view json);

// Writes results.csv and summary.json into dir, creating it if needed.
// Throws std::runtime_error when the directory cannot be written.
void emit_results(const ResultTable& table, const std::filesystem::path& dir, double wall_time_s);

// Compact "%g" rendering for parameter strings.
std::string fmt_num(double x);

}  // namespace adelic
