#include "plaw/report.hpp"

#include "plaw/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace plaw {

namespace {

using nlohmann::ordered_json;

std::string display(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string str() const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c > 0) line += "  ";
        line += std::string(width[c] - row[c].size(), ' ') + row[c];
      }
      out += line + "\n";
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string join_csv(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) line += ',';
    line += cells[i];
  }
  return line + "\n";
}

std::string passed_text(bool passed) { return passed ? "true" : "false"; }

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "table") return Format::table;
  throw ParseError("unknown format '" + std::string(text) + "' (expected json, csv or table)");
}

template <Scalar T>
std::string render_reports(const std::vector<VerificationReport<T>>& reports, Format format) {
  switch (format) {
    case Format::json: {
      ordered_json list = ordered_json::array();
      for (const auto& r : reports) {
        list.push_back(ordered_json{
            {"N", r.N},
            {"n", r.n},
            {"k", r.k},
            {"mode", std::string(to_string(r.mode))},
            {"face_count", r.face_count},
            {"diagonal_count", r.diagonal_count},
            {"face_sq_sum", format_scalar(r.face_sq_sum)},
            {"diag_sq_sum", format_scalar(r.diag_sq_sum)},
            {"face_mean_sq", format_scalar(r.face_mean_sq)},
            {"diag_mean_sq", format_scalar(r.diag_mean_sq)},
            {"ratio_sq", format_scalar(r.ratio_sq)},
            {"expected", r.expected},
            {"residual", format_scalar(r.residual)},
            {"tolerance", r.tolerance},
            {"passed", r.passed},
        });
      }
      return ordered_json{{"reports", list}}.dump(2) + "\n";
    }
    case Format::csv: {
      std::string out = join_csv({"N", "n", "k", "mode", "face_count", "diagonal_count", "face_sq_sum", "diag_sq_sum",
                                  "face_mean_sq", "diag_mean_sq", "ratio_sq", "expected", "residual", "tolerance",
                                  "passed"});
      for (const auto& r : reports) {
        out += join_csv({std::to_string(r.N), std::to_string(r.n), std::to_string(r.k), std::string(to_string(r.mode)),
                         std::to_string(r.face_count), std::to_string(r.diagonal_count), format_scalar(r.face_sq_sum),
                         format_scalar(r.diag_sq_sum), format_scalar(r.face_mean_sq), format_scalar(r.diag_mean_sq),
                         format_scalar(r.ratio_sq), std::to_string(r.expected), format_scalar(r.residual),
                         format_scalar(r.tolerance), passed_text(r.passed)});
      }
      return out;
    }
    case Format::table: {
      Table table({"N", "n", "k", "faces", "diagonals", "face_mean_sq", "diag_mean_sq", "ratio_sq", "expected",
                    "ratio", "sqrt(N-k+1)", "residual", "status"});
      for (const auto& r : reports) {
        table.add({std::to_string(r.N), std::to_string(r.n), std::to_string(r.k), std::to_string(r.face_count),
                   std::to_string(r.diagonal_count), format_scalar(r.face_mean_sq), format_scalar(r.diag_mean_sq),
                   format_scalar(r.ratio_sq), std::to_string(r.expected),
                   display(std::sqrt(ScalarTraits<T>::to_double(r.ratio_sq))), display(std::sqrt(r.expected)),
                   format_scalar(r.residual), r.passed ? "ok" : "FAIL"});
      }
      return std::string("mode: ") + std::string(to_string(mode_of<T>)) + "\n" + table.str();
    }
  }
  return {};
}

template <Scalar T>
std::string render_sweep(const SweepSummary<T>& summary, Format format) {
  switch (format) {
    case Format::json: {
      ordered_json cells = ordered_json::array();
      for (const auto& c : summary.cells) {
        cells.push_back(ordered_json{{"N", c.N},
                                     {"k", c.k},
                                     {"expected", c.N - c.k + 1},
                                     {"trials", c.trials},
                                     {"max_abs_residual", format_scalar(c.max_abs_residual)},
                                     {"max_relative_residual", c.max_relative_residual}});
      }
      ordered_json failures = ordered_json::array();
      for (const auto& f : summary.failures) {
        failures.push_back(
            ordered_json{{"seed", f.seed}, {"N", f.N}, {"k", f.k}, {"residual", format_scalar(f.residual)}});
      }
      return ordered_json{{"mode", std::string(to_string(summary.mode))},
                          {"trials_per_cell", summary.trials_per_cell},
                          {"passed", summary.passed()},
                          {"cells", cells},
                          {"failures", failures}}
                 .dump(2) +
             "\n";
    }
    case Format::csv: {
      std::string out = join_csv({"N", "k", "expected", "trials", "max_abs_residual", "max_relative_residual"});
      for (const auto& c : summary.cells) {
        out += join_csv({std::to_string(c.N), std::to_string(c.k), std::to_string(c.N - c.k + 1),
                         std::to_string(c.trials), format_scalar(c.max_abs_residual),
                         format_scalar(c.max_relative_residual)});
      }
      return out;
    }
    case Format::table: {
      Table table({"N", "k", "expected", "trials", "max_abs_residual", "max_rel_residual"});
      for (const auto& c : summary.cells) {
        table.add({std::to_string(c.N), std::to_string(c.k), std::to_string(c.N - c.k + 1), std::to_string(c.trials),
                   format_scalar(c.max_abs_residual), display(c.max_relative_residual)});
      }
      std::string out = std::string("mode: ") + std::string(to_string(summary.mode)) + "\n" + table.str();
      for (const auto& f : summary.failures) {
        out += "FAIL seed=" + std::to_string(f.seed) + " N=" + std::to_string(f.N) + " k=" + std::to_string(f.k) +
               " residual=" + format_scalar(f.residual) + "\n";
      }
      out += summary.passed() ? "all cells passed\n" : std::to_string(summary.failures.size()) + " failure(s)\n";
      return out;
    }
  }
  return {};
}

template std::string render_reports(const std::vector<VerificationReport<Rational>>&, Format);
template std::string render_reports(const std::vector<VerificationReport<double>>&, Format);
template std::string render_sweep(const SweepSummary<Rational>&, Format);
template std::string render_sweep(const SweepSummary<double>&, Format);

}  // namespace plaw
