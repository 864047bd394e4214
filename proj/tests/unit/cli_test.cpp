#include "commands.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "rookdom/closed_form.hpp"
#include "test_support.hpp"

namespace rookdom::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliPolyTest, Examples) {
  EXPECT_EQ(run({"poly", "--n", "2", "--m", "2", "--method", "closed", "--format", "text"}).out,
            "6*x^2 + 4*x^3 + x^4\n");
  EXPECT_EQ(run({"poly", "--n", "1", "--m", "1", "--method", "oracle", "--format", "csv"}).out, "k,count\n0,0\n1,1\n");
  const auto empty = run({"poly", "--n", "0", "--m", "5", "--method", "closed", "--format", "text"});
  EXPECT_EQ(empty.code, kExitOk);
  EXPECT_EQ(empty.out, "1\n");
}

TEST(CliPolyTest, JsonSchema) {
  EXPECT_EQ(run({"poly", "--n", "2", "--m", "2", "--format", "json"}).out,
            R"({"n":2,"m":2,"method":"closed","coeffs":["0","0","6","4","1"]})" "\n");
}

TEST(CliPolyTest, DefaultsToClosedText) {
  EXPECT_EQ(run({"poly", "--n", "3", "--m", "3"}).out, to_string(domination_poly_closed({3, 3})) + "\n");
}

TEST(CliPolyTest, AllMethodsPrintTheSamePolynomial) {
  for (const char* method : {"closed", "symmetric", "recursive", "oracle"}) {
    EXPECT_EQ(run({"poly", "--n", "3", "--m", "4", "--method", method}).out,
              run({"poly", "--n", "4", "--m", "3"}).out)
        << method;
  }
}

TEST(CliPolyTest, FormatsRoundTripExactly) {
  for (BoardDims dims : {BoardDims{1, 1}, BoardDims{2, 3}, BoardDims{8, 8}, BoardDims{0, 4}}) {
    const auto expected = domination_poly_closed(dims).padded(dims.cells() + 1);
    const std::string n = std::to_string(dims.rows), m = std::to_string(dims.cols);
    EXPECT_EQ(parse_json_coeffs(run({"poly", "--n", n, "--m", m, "--format", "json"}).out), expected);
    EXPECT_EQ(parse_csv_coeffs(run({"poly", "--n", n, "--m", m, "--format", "csv"}).out), expected);
  }
}

TEST(CliPolyTest, ErrorsMapToExitCodes) {
  EXPECT_EQ(run({"poly", "--n", "5", "--m", "5", "--method", "oracle"}).code, kExitCapacity);
  EXPECT_EQ(run({"poly", "--n", "2", "--m", "2", "--method", "magic"}).code, kExitUsage);
  EXPECT_EQ(run({"poly", "--n", "2", "--m", "2", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run({"poly", "--n", "-1", "--m", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"poly", "--n", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"poly", "--n", "0", "--m", "2", "--method", "recursive"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  const auto cap = run({"poly", "--n", "5", "--m", "5", "--method", "oracle"});
  EXPECT_TRUE(cap.out.empty());
  EXPECT_NE(cap.err.find("24"), std::string::npos);
}

TEST(CliPolyTest, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, kExitOk); }

TEST(CliCheckTest, AllPass) {
  const auto r = run({"check", "--max-n", "5", "--max-m", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("25 boards checked, 0 failed"), std::string::npos);
  EXPECT_NE(r.out.find("4x5 pass (4 methods)"), std::string::npos);
  EXPECT_NE(r.out.find("5x5 pass (3 methods)"), std::string::npos);
  EXPECT_EQ(run({"check", "--max-n", "1", "--max-m", "1"}).code, kExitOk);
}

TEST(CliCheckTest, InjectedFaultIsReported) {
  CheckRequest req{3, 3, 20, [](Method method, BoardDims dims, IntPolynomial& poly) {
                     if (method == Method::recursive && dims == BoardDims{2, 3}) {
                       auto c = poly.padded(dims.cells() + 1);
                       c[4] += 1;
                       poly = IntPolynomial(std::move(c));
                     }
                   }};
  std::ostringstream out, err;
  EXPECT_EQ(run_check(req, out, err), kExitVerificationFailure);
  EXPECT_NE(out.str().find("2x3 FAIL at k=4: closed=15 symmetric=15 recursive=16 oracle=15"), std::string::npos)
      << out.str();
  EXPECT_NE(out.str().find("9 boards checked, 1 failed"), std::string::npos);
}

TEST(CliCheckTest, BadArguments) {
  EXPECT_EQ(run({"check", "--max-n", "0", "--max-m", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"check", "--max-n", "2", "--max-m", "2", "--oracle-cap", "30"}).code, kExitCapacity);
}

TEST(CliEvalTest, Examples) {
  EXPECT_EQ(run({"eval", "--n", "2", "--m", "2", "--x", "1"}).out, "11\n");
  EXPECT_EQ(run({"eval", "--n", "3", "--m", "3", "--x", "0"}).out, "0\n");
  EXPECT_EQ(run({"eval", "--n", "2", "--m", "2", "--x", "2"}).out, "72\n");
  EXPECT_EQ(run({"eval", "--n", "2", "--m", "2", "--x", "-3"}).out, "27\n");
  EXPECT_EQ(run({"eval", "--n", "8", "--m", "8", "--x", "1"}).out, "18412604442711949187\n");
}

TEST(CliEvalTest, MalformedX) {
  for (const char* x : {"1.5", "abc", "", "-", "+1", "1e3"}) {
    EXPECT_EQ(run({"eval", "--n", "2", "--m", "2", "--x", x}).code, kExitUsage) << x;
  }
}

TEST(CliSequenceTest, Examples) {
  EXPECT_EQ(run({"sequence", "A368831", "--limit", "2"}).out, "1\n6 4 1\n");
  EXPECT_EQ(run({"sequence", "A287274", "--limit", "3"}).out, "1\n11\n421\n");
  EXPECT_EQ(run({"sequence", "A055599", "--limit", "1"}).out, "1\n");
  EXPECT_EQ(run({"sequence", "A000045", "--limit", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"sequence", "A287274", "--limit", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"sequence", "A287274", "--limit", "2", "--format", "json"}).out,
            R"({"id":"A287274","rows":[["1"],["11"]]})" "\n");
}

std::string joined_fixture(const std::string& name) {
  std::string s;
  for (const auto& line : testing::fixture_lines(name)) s += line + "\n";
  return s;
}

TEST(CliSequenceTest, MatchesCheckedInFixtures) {
  EXPECT_EQ(run({"sequence", "A368831", "--limit", "8"}).out, joined_fixture("oeis_A368831.txt"));
  EXPECT_EQ(run({"sequence", "A287274", "--limit", "8"}).out, joined_fixture("oeis_A287274.txt"));
  EXPECT_EQ(run({"sequence", "A055599", "--limit", "4"}).out, joined_fixture("oeis_A055599.txt"));
}

TEST(CliBenchTest, AgreementAndTimingSection) {
  const auto r = run({"bench", "--n", "4", "--m", "5", "--methods", "closed,symmetric,recursive,oracle", "--repeats", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("methods agree: closed symmetric recursive oracle"), std::string::npos);
  EXPECT_NE(r.out.find("result fnv1a64 " + result_hash(domination_poly_closed({4, 5}))), std::string::npos);
  EXPECT_NE(r.out.find("[timings"), std::string::npos);
}

TEST(CliBenchTest, ErrorPaths) {
  EXPECT_EQ(run({"bench", "--n", "2", "--m", "2", "--methods", "oracle", "--repeats", "3"}).code, kExitOk);
  EXPECT_EQ(run({"bench", "--n", "5", "--m", "5", "--methods", "closed,oracle"}).code, kExitCapacity);
  EXPECT_EQ(run({"bench", "--n", "2", "--m", "2", "--methods", "closed,nope"}).code, kExitUsage);
  EXPECT_EQ(run({"bench", "--n", "2", "--m", "2", "--repeats", "0"}).code, kExitUsage);
}

TEST(CliDeterminismTest, ByteIdenticalOutput) {
  const std::vector<std::vector<std::string>> invocations = {
      {"poly", "--n", "6", "--m", "5", "--format", "json"},
      {"poly", "--n", "4", "--m", "4", "--method", "oracle", "--format", "csv"},
      {"check", "--max-n", "3", "--max-m", "4"},
      {"eval", "--n", "7", "--m", "3", "--x", "-2"},
      {"sequence", "A368831", "--limit", "5"},
  };
  for (const auto& args : invocations) {
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(MethodReportTest, RecordsPositiveElapsedAndFullDegree) {
  for (Method m : {Method::closed, Method::symmetric, Method::recursive, Method::oracle}) {
    const auto report = run_method(m, {3, 4});
    EXPECT_EQ(report.method, m);
    EXPECT_EQ(report.poly.degree(), 12);
    EXPECT_GT(report.elapsed.count(), 0);
  }
}

TEST(ParseExactIntegerTest, Accepts) {
  EXPECT_EQ(parse_exact_integer("-123456789012345678901234567890"), BigInt("-123456789012345678901234567890"));
  EXPECT_EQ(parse_exact_integer("0"), BigInt(0));
  EXPECT_FALSE(parse_exact_integer(" 1"));
}

}  // namespace
}  // namespace rookdom::cli
