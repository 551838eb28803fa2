#include "cli.hpp"
#include "plaw/harness.hpp"
#include "plaw/input_document.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace plaw;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "plaw");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

class CliTest : public ::testing::Test {
 protected:
  std::filesystem::path dir;

  void SetUp() override {
    dir = std::filesystem::temp_directory_path() /
          ("plaw_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir);
  }
  void TearDown() override { std::filesystem::remove_all(dir); }

  std::string file(const std::string& name, const std::string& content) {
    const auto path = dir / name;
    std::ofstream(path) << content;
    return path.string();
  }
};

}  // namespace

TEST(InputDocument, ParsesMixedEntries) {
  const auto doc = parse_input_document(R"({"vectors": [[1, "1/2"], ["-3", 4]]})");
  EXPECT_FALSE(doc.has_decimals);
  EXPECT_EQ(doc.default_mode(), Mode::exact);
  const auto vs = document_vectors<Rational>(doc);
  EXPECT_EQ(vs[0][1], Rational(1, 2));
  EXPECT_EQ(vs[1][0], -3);

  const auto dec = parse_input_document(R"({"vectors": [[0.1, 0], [0, "2.5"]]})");
  EXPECT_TRUE(dec.has_decimals);
  EXPECT_EQ(dec.default_mode(), Mode::floating);
  EXPECT_EQ(document_vectors<Rational>(dec)[0][0], Rational(1, 10));
}

TEST(InputDocument, Rejections) {
  EXPECT_THROW(parse_input_document("{"), ParseError);
  EXPECT_THROW(parse_input_document(R"({"rows": [[1]]})"), ParseError);
  EXPECT_THROW(parse_input_document(R"({"vectors": [[1, 0]]})"), ParseError);
  EXPECT_THROW(parse_input_document(R"({"vectors": [[1, 0], [1]]})"), ParseError);
  EXPECT_THROW(parse_input_document(R"({"vectors": [[1, 0], [1, "x"]]})"), ParseError);
  EXPECT_THROW(parse_input_document(R"({"vectors": [[1, 0], [1, true]]})"), ParseError);
}

TEST(InputDocument, WriterRoundTripsRationals) {
  const std::vector<Vector<Rational>> vs{{Rational(1), Rational(-2, 3)}, {Rational(5, 7), Rational(0)}};
  const std::string text = write_input_document(vs);
  EXPECT_EQ(text, "{\"vectors\":[[1,\"-2/3\"],[\"5/7\",0]]}\n");
  EXPECT_EQ(document_vectors<Rational>(parse_input_document(text)), vs);
}

TEST_F(CliTest, VerifyParallelogram) {
  const auto path = file("p.json", R"({"vectors": [[1, 0], [1, 1]]})");
  const auto r = run({"verify", path, "-k", "1", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto report = json::parse(r.out)["reports"][0];
  EXPECT_EQ(report["ratio_sq"], "2");
  EXPECT_EQ(report["expected"], 2);
  EXPECT_EQ(report["face_mean_sq"], "3/2");
  EXPECT_EQ(report["diag_mean_sq"], "3");
  EXPECT_EQ(report["mode"], "exact");
}

TEST_F(CliTest, VerifyAllK) {
  const auto path = file("four.json", R"({"vectors": [[1,0,0,2],[0,1,3,0],[1,1,1,1],[2,0,-1,0]]})");
  const auto r = run({"verify", path, "--all-k", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto reports = json::parse(r.out)["reports"];
  ASSERT_EQ(reports.size(), 3U);
  EXPECT_EQ(reports[0]["expected"], 4);
  EXPECT_EQ(reports[1]["expected"], 3);
  EXPECT_EQ(reports[2]["expected"], 2);
  EXPECT_EQ(run({"verify", path}).code, 0);
}

TEST_F(CliTest, VerifyErrorsExitTwo) {
  const auto dependent = run({"verify", file("d.json", R"({"vectors": [[1, 0], [2, 0]]})")});
  EXPECT_EQ(dependent.code, 2);
  EXPECT_NE(dependent.err.find("dependent generators"), std::string::npos);
  EXPECT_EQ(count_lines(dependent.err), 1U);

  EXPECT_EQ(run({"verify", (dir / "missing.json").string()}).code, 2);
  EXPECT_EQ(run({"verify", file("r.json", R"({"vectors": [[1, 0], [1]]})")}).code, 2);
  const auto ok = file("ok.json", R"({"vectors": [[1, 0], [1, 1]]})");
  EXPECT_EQ(run({"verify", ok, "-k", "2"}).code, 2);
  EXPECT_EQ(run({"verify", ok, "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"verify", ok, "--mode", "fuzzy"}).code, 2);
  EXPECT_EQ(run({"verify", ok, "-k", "1", "--all-k"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST_F(CliTest, IdentityViolationExitsOne) {
  // Float rounding leaves a residual of about 4e-16, which a zero tolerance rejects.
  const auto path = file("dec.json", R"({"vectors": [[0.1, 0.7], [0.3, 0.9]]})");
  EXPECT_EQ(run({"verify", path, "--tol", "0"}).code, 1);
  EXPECT_EQ(run({"verify", path}).code, 0);
  const auto exact = run({"verify", path, "--mode", "exact", "--format", "csv"});
  EXPECT_EQ(exact.code, 0);
  EXPECT_NE(exact.out.find(",7/10,7/5,2,2,0,"), std::string::npos) << exact.out;
}

TEST_F(CliTest, FormatParity) {
  const auto path = file("p.json", R"({"vectors": [[1, 2, 0], ["1/3", 1, 1], [0, -1, 2]]})");
  for (const std::string mode : {"exact", "float"}) {
    const auto j = run({"verify", path, "--mode", mode, "--format", "json"});
    const auto c = run({"verify", path, "--mode", mode, "--format", "csv"});
    ASSERT_EQ(j.code, 0);
    ASSERT_EQ(c.code, 0);
    const auto reports = json::parse(j.out)["reports"];
    std::istringstream lines(c.out);
    std::string header;
    std::getline(lines, header);
    std::vector<std::string> columns;
    std::stringstream hs(header);
    for (std::string col; std::getline(hs, col, ',');) columns.push_back(col);
    for (const auto& report : reports) {
      std::string row;
      std::getline(lines, row);
      std::stringstream rs(row);
      std::size_t i = 0;
      for (std::string cell; std::getline(rs, cell, ','); ++i) {
        const auto& value = report[columns[i]];
        if (value.is_string()) {
          EXPECT_EQ(value.get<std::string>(), cell) << columns[i];
        } else if (value.is_boolean()) {
          EXPECT_EQ(value.get<bool>() ? "true" : "false", cell);
        } else {
          EXPECT_DOUBLE_EQ(value.get<double>(), std::stod(cell)) << columns[i];
        }
      }
    }
  }
}

TEST_F(CliTest, EnumerateFaces) {
  const auto axes = file("axes.json", R"({"vectors": [[1,0,0],[0,1,0],[0,0,1]]})");
  const auto r = run({"enumerate", axes, "-k", "2", "--what", "faces"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count_lines(r.out), 7U);
  EXPECT_NE(r.out.find("S={0,1}  I=0\n"), std::string::npos);
  EXPECT_NE(r.out.find("6 = 2^1 * C(3,2)\n"), std::string::npos);

  const auto d = run({"enumerate", axes, "-k", "1", "--what", "diagonals"});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(count_lines(d.out), 5U);
  EXPECT_NE(d.out.find("4 = 2^2 * C(3,3)"), std::string::npos);
}

TEST_F(CliTest, EnumerateDiagonalMeasures) {
  const auto path = file("p.json", R"({"vectors": [[1, 0], [1, 1]]})");
  const auto r = run({"enumerate", path, "-k", "1", "--what", "diagonals", "--measures", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  ASSERT_EQ(doc["labels"].size(), 2U);
  EXPECT_EQ(doc["labels"][0]["measure_sq"], "5");
  EXPECT_EQ(doc["labels"][1]["measure_sq"], "1");
  EXPECT_EQ(doc["labels"][1]["part2"], "{1}");
  EXPECT_EQ(doc["count"], 2);
  EXPECT_TRUE(doc["matches"].get<bool>());

  const auto csv = run({"enumerate", path, "-k", "1", "--what", "faces", "--measures", "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_NE(csv.out.find("\"{1}\",\"0\",2\n"), std::string::npos) << csv.out;
  EXPECT_EQ(run({"enumerate", path, "-k", "1", "--what", "edges"}).code, 2);
  EXPECT_EQ(run({"enumerate", path, "-k", "3", "--what", "faces"}).code, 2);
}

TEST_F(CliTest, RandomIsDeterministicAndRoundTrips) {
  const auto a = (dir / "a.json").string();
  const auto b = (dir / "b.json").string();
  const auto r = run({"random", "--N", "4", "--n", "6", "--seed", "42", "-o", a});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("independence certificate: det(gram) = "), std::string::npos);
  EXPECT_EQ(run({"random", "--N", "4", "--n", "6", "--seed", "42", "-o", b}).code, 0);
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());

  InstanceSpec spec;
  spec.N = 4;
  spec.n = 6;
  spec.seed = 42;
  EXPECT_EQ(Generators<Rational>(document_vectors<Rational>(read_input_document(a))),
            random_generators<Rational>(spec));
}

TEST_F(CliTest, RandomThenVerify) {
  const auto path = (dir / "r.json").string();
  ASSERT_EQ(run({"random", "--N", "3", "--n", "3", "--seed", "5", "-o", path}).code, 0);
  EXPECT_EQ(run({"verify", path, "--all-k"}).code, 0);
}

TEST_F(CliTest, RandomErrors) {
  EXPECT_EQ(run({"random", "--N", "3", "--n", "2", "-o", (dir / "x.json").string()}).code, 2);
  EXPECT_EQ(run({"random", "--N", "2", "--n", "2", "-o", (dir / "no/such/dir/x.json").string()}).code, 2);
  EXPECT_EQ(
      run({"random", "--N", "2", "--n", "2", "--low", "0", "--high", "0", "-o", (dir / "z.json").string()}).code, 2);
}

TEST_F(CliTest, Sweep) {
  const auto r = run({"sweep", "--from", "2", "--to", "6", "--trials", "5", "--mode", "exact", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["cells"].size(), 15U);
  for (const auto& cell : doc["cells"]) EXPECT_EQ(cell["max_abs_residual"], "0");

  const auto one = run({"sweep", "--from", "2", "--to", "2", "--format", "json"});
  EXPECT_EQ(one.code, 0);
  const auto cells = json::parse(one.out)["cells"];
  ASSERT_EQ(cells.size(), 1U);
  EXPECT_EQ(cells[0]["expected"], 2);

  EXPECT_EQ(run({"sweep", "--from", "5", "--to", "3"}).code, 2);
  EXPECT_EQ(run({"sweep", "--from", "2", "--to", "3", "--mode", "float"}).code, 0);
}

TEST(Cli, HelpExitsZero) {
  EXPECT_EQ(run({"--help"}).code, 0);
}
