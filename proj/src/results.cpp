#include "adelic/results.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace adelic {

namespace {

std::string csv_number(double x) {
  if (std::isnan(x)) return {};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  out.close();
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::info:
      break;
  }
  return "info";
}

std::size_t ResultTable::passes() const {
  return static_cast<std::size_t>(std::count_if(
      rows.begin(), rows.end(), [](const ResultRow& r) { return r.verdict == Verdict::pass; }));
}

std::size_t ResultTable::failures() const {
  return static_cast<std::size_t>(std::count_if(
      rows.begin(), rows.end(), [](const ResultRow& r) { return r.verdict == Verdict::fail; }));
}

std::string to_csv(const ResultTable& table) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& row : table.rows) {
    out += csv_field(table.experiment) + ',' + csv_field(row.params) + ',' +
           csv_field(row.quantity) + ',' + csv_number(row.empirical) + ',' +
           csv_number(row.analytic) + ',' + csv_number(row.band) + ',' +
           std::string(verdict_name(row.verdict)) + ',' + csv_field(row.oracle) + '\n';
  }
  return out;
}

std::string summary_json(const ResultTable& table, double wall_time_s) {
  nlohmann::json doc = {
      {"experiment", table.experiment},
      {"seed", table.seed},
      {"alpha", table.alpha},
      {"ci_method", "Clopper-Pearson; DKW for CDF bands"},
      {"rows", table.rows.size()},
      {"passes", table.passes()},
      {"failures", table.failures()},
      {"all_pass", table.all_pass()},
      {"wall_time_s", wall_time_s},
  };
  return doc.dump(2) + '\n';
}

SummaryRecord parse_summary(std::string_view json) {
  const auto doc = nlohmann::json::parse(json);
  return {doc.at("experiment").get<std::string>(), doc.at("seed").get<std::uint64_t>(),
          doc.at("rows").get<std::size_t>(),       doc.at("passes").get<std::size_t>(),
          doc.at("failures").get<std::size_t>(),   doc.at("wall_time_s").get<double>()};
}

void emit_results(const ResultTable& table, const std::filesystem::path& dir, double wall_time_s) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw std::runtime_error("output directory " + dir.string() + " is not writable");
  }
  write_file(dir / "results.csv", to_csv(table));
  write_file(dir / "summary.json", summary_json(table, wall_time_s));
}

std::string fmt_num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

}  // namespace adelic
