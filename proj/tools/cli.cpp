#include "cli.hpp"

#include "plaw/combinatorics.hpp"
#include "plaw/error.hpp"
#include "plaw/harness.hpp"
#include "plaw/input_document.hpp"
#include "plaw/parallelotope.hpp"
#include "plaw/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

namespace plaw::cli {

namespace {

struct VerifyArgs {
  std::string input;
  std::optional<int> k;
  bool all_k = false;
  std::string mode;
  double tolerance = 1e-9;
  std::string format = "table";
};

struct EnumerateArgs {
  std::string input;
  int k = 0;
  std::string what;
  bool measures = false;
  std::string mode;
  std::string format = "table";
};

struct RandomArgs {
  int N = 0;
  int n = 0;
  std::uint64_t seed = 0;
  std::int64_t low = -9;
  std::int64_t high = 9;
  std::string out;
};

struct SweepArgs {
  int from = 2;
  int to = kDefaultMaxSweepDimension;
  int trials = 1;
  std::uint64_t seed = 0;
  std::string mode = "exact";
  double tolerance = 1e-9;
  std::string format = "table";
  unsigned threads = 0;
};

Mode resolve_mode(const std::string& flag, const InputDocument& doc) {
  return flag.empty() ? doc.default_mode() : parse_mode(flag);
}

template <Scalar T>
int verify_with(const VerifyArgs& args, const InputDocument& doc, std::ostream& out) {
  const Generators<T> g(document_vectors<T>(doc));
  const VerifyOptions options{args.tolerance};
  std::vector<VerificationReport<T>> reports;
  if (args.k && !args.all_k) {
    reports.push_back(verify(g, *args.k, options));
  } else {
    reports = verify_all(g, options);
  }
  out << render_reports(reports, parse_format(args.format));
  const bool all_passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
  return all_passed ? kExitOk : kExitViolation;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  if (!(args.tolerance >= 0.0)) throw InvalidRange("tolerance must be non-negative");
  const InputDocument doc = read_input_document(args.input);
  parse_format(args.format);
  return resolve_mode(args.mode, doc) == Mode::exact ? verify_with<Rational>(args, doc, out)
                                                     : verify_with<double>(args, doc, out);
}

std::string quote_csv(const std::string& s) { return "\"" + s + "\""; }

struct LabelCell {
  const char* key;
  const char* json_key;
  std::string value;
};

template <Scalar T>
int enumerate_with(const EnumerateArgs& args, const InputDocument& doc, std::ostream& out) {
  const Generators<T> g(document_vectors<T>(doc));
  const int N = g.count();
  const int k = args.k;
  const bool faces = args.what == "faces";
  const Format format = parse_format(args.format);
  const std::uint64_t expected = faces ? count_faces(N, k) : count_diagonals(N, k);
  const std::string closed_form = "2^" + std::to_string(N - k) + " * C(" + std::to_string(N) + "," +
                                  std::to_string(faces ? k : N - k + 1) + ")";

  // Rows are rendered as they are enumerated; nothing is materialised beyond the output.
  std::uint64_t count = 0;
  nlohmann::ordered_json labels = nlohmann::ordered_json::array();
  std::string text;
  if (format == Format::csv) {
    text = faces ? "subset,translation" : "t,part1,part2";
    text += args.measures ? ",measure_sq\n" : "\n";
  }
  auto emit = [&](const std::vector<LabelCell>& cells, const std::optional<T>& measure) {
    ++count;
    if (format == Format::json) {
      nlohmann::ordered_json row;
      for (const auto& cell : cells) row[cell.json_key] = cell.value;
      if (measure) row["measure_sq"] = format_scalar(*measure);
      labels.push_back(std::move(row));
      return;
    }
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) line += format == Format::csv ? "," : "  ";
      line += format == Format::csv ? quote_csv(cells[i].value) : std::string(cells[i].key) + "=" + cells[i].value;
    }
    if (measure) line += (format == Format::csv ? "," : "  measure_sq=") + format_scalar(*measure);
    text += line + "\n";
  };

  if (faces) {
    for (const FaceLabel& f : face_labels(N, k)) {
      emit({{"S", "subset", f.subset.to_string()}, {"I", "translation", f.translation_string()}},
           args.measures ? std::optional<T>(face_measure_sq(g, f)) : std::nullopt);
    }
  } else {
    for (const DiagonalLabel& d : diagonal_labels(N, k)) {
      emit({{"T", "t", d.t().to_string()}, {"T1", "part1", d.part1().to_string()}, {"T2", "part2", d.part2().to_string()}},
           args.measures ? std::optional<T>(diagonal_measure_sq(g, d)) : std::nullopt);
    }
  }
  const bool matches = count == expected;
  const std::string count_line = std::to_string(count) + (matches ? " = " : " != ") + closed_form;
  if (format == Format::json) {
    out << nlohmann::ordered_json{{"what", args.what}, {"N", N},           {"k", k},
                                  {"labels", labels},  {"count", count},   {"closed_form", closed_form},
                                  {"matches", matches}}
               .dump(2)
        << "\n";
  } else {
    out << text << (format == Format::csv ? "# " : "") << count_line << "\n";
  }
  return matches ? kExitOk : kExitViolation;
}

int cmd_enumerate(const EnumerateArgs& args, std::ostream& out) {
  if (args.what != "faces" && args.what != "diagonals") {
    throw ParseError("--what must be faces or diagonals");
  }
  const InputDocument doc = read_input_document(args.input);
  return resolve_mode(args.mode, doc) == Mode::exact ? enumerate_with<Rational>(args, doc, out)
                                                     : enumerate_with<double>(args, doc, out);
}

int cmd_random(const RandomArgs& args, std::ostream& out) {
  InstanceSpec spec;
  spec.N = args.N;
  spec.n = args.n;
  spec.seed = args.seed;
  spec.entry_low = args.low;
  spec.entry_high = args.high;
  const IntegerRows rows = random_integer_rows(spec);
  const auto vectors = to_vectors<Rational>(rows);
  std::ofstream file(args.out);
  if (!file) throw ParseError("cannot write " + args.out);
  file << write_input_document(rows);
  file.close();
  if (!file) throw ParseError("failed writing " + args.out);
  out << "wrote " << args.out << "\n";
  out << "independence certificate: det(gram) = " << format_scalar(k_measure_sq<Rational>(vectors)) << "\n";
  return kExitOk;
}

template <Scalar T>
int sweep_with(const SweepArgs& args, std::ostream& out) {
  SweepOptions options;
  options.n_min = args.from;
  options.n_max = args.to;
  options.trials = args.trials;
  options.base_seed = args.seed;
  options.verify.relative_tolerance = args.tolerance;
  options.threads = args.threads;
  const SweepSummary<T> summary = sweep<T>(options);
  out << render_sweep(summary, parse_format(args.format));
  return summary.passed() ? kExitOk : kExitViolation;
}

int cmd_sweep(const SweepArgs& args, std::ostream& out) {
  parse_format(args.format);
  return parse_mode(args.mode) == Mode::exact ? sweep_with<Rational>(args, out) : sweep_with<double>(args, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Face and diagonal measures of parallelotopes; generalized parallelogram law verifier", "plaw"};
  app.require_subcommand(1);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Verify the law for one k or every k");
  verify_cmd->add_option("input", verify_args.input, "Generator file (JSON with key \"vectors\")")->required();
  auto* k_opt = verify_cmd->add_option("-k", verify_args.k, "Face/diagonal dimension, 1 <= k <= N-1");
  verify_cmd->add_flag("--all-k", verify_args.all_k, "Verify every k (default when -k is absent)")->excludes(k_opt);
  verify_cmd->add_option("--mode", verify_args.mode, "exact|float (default: exact unless the file has decimals)");
  verify_cmd->add_option("--tol", verify_args.tolerance, "Relative tolerance for float mode")
      ->capture_default_str();
  verify_cmd->add_option("--format", verify_args.format, "json|csv|table")->capture_default_str();

  EnumerateArgs enum_args;
  auto* enum_cmd = app.add_subcommand("enumerate", "List the k-faces or k-diagonals");
  enum_cmd->add_option("input", enum_args.input, "Generator file")->required();
  enum_cmd->add_option("-k", enum_args.k, "Dimension, 1 <= k <= N-1")->required();
  enum_cmd->add_option("--what", enum_args.what, "faces|diagonals")->required();
  enum_cmd->add_flag("--measures", enum_args.measures, "Include squared measures");
  enum_cmd->add_option("--mode", enum_args.mode, "exact|float");
  enum_cmd->add_option("--format", enum_args.format, "json|csv|table")->capture_default_str();

  RandomArgs random_args;
  auto* random_cmd = app.add_subcommand("random", "Write a random independent generator file");
  random_cmd->add_option("--N", random_args.N, "Number of generators")->required();
  random_cmd->add_option("--n", random_args.n, "Ambient dimension")->required();
  random_cmd->add_option("--seed", random_args.seed, "Seed")->capture_default_str();
  random_cmd->add_option("--low", random_args.low, "Smallest coordinate")->capture_default_str();
  random_cmd->add_option("--high", random_args.high, "Largest coordinate")->capture_default_str();
  random_cmd->add_option("-o,--out", random_args.out, "Output path")->required();

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Verify seeded random instances across a range of N");
  sweep_cmd->add_option("--from", sweep_args.from, "Smallest N")->capture_default_str();
  sweep_cmd->add_option("--to", sweep_args.to, "Largest N")->capture_default_str();
  sweep_cmd->add_option("--trials", sweep_args.trials, "Instances per N")->capture_default_str();
  sweep_cmd->add_option("--seed", sweep_args.seed, "Base seed")->capture_default_str();
  sweep_cmd->add_option("--mode", sweep_args.mode, "exact|float")->capture_default_str();
  sweep_cmd->add_option("--tol", sweep_args.tolerance, "Relative tolerance for float mode")->capture_default_str();
  sweep_cmd->add_option("--format", sweep_args.format, "json|csv|table")->capture_default_str();
  sweep_cmd->add_option("--threads", sweep_args.threads, "Worker threads (0 = all cores)")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(verify_args, out);
    if (enum_cmd->parsed()) return cmd_enumerate(enum_args, out);
    if (random_cmd->parsed()) return cmd_random(random_args, out);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace plaw::cli
