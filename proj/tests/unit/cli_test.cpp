#include <bandlim_cli/cli.hpp>
#include <bandlim_cli/commands.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace bandlim::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "bandlim");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  ADD_FAILURE() << "missing column " << name;
  return 0;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "bandlim_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

TEST(ParseRadians, AcceptedForms) {
  EXPECT_DOUBLE_EQ(parse_radians("2.5"), 2.5);
  EXPECT_DOUBLE_EQ(parse_radians("pi"), kPi);
  EXPECT_DOUBLE_EQ(parse_radians("-pi/3"), -kPi / 3);
  EXPECT_DOUBLE_EQ(parse_radians("5pi/6"), 5 * kPi / 6);
  EXPECT_DOUBLE_EQ(parse_radians("5*pi/6"), 5 * kPi / 6);
  EXPECT_DOUBLE_EQ(parse_radians("0.95pi"), 0.95 * kPi);
  EXPECT_THROW(parse_radians("five"), UsageError);
  EXPECT_THROW(parse_radians("pi/0"), UsageError);
}

TEST(ParseSignal, Names) {
  EXPECT_EQ(parse_signal("sinc-combo", 2.0).label, "sinc-combo");
  EXPECT_EQ(parse_signal("linear-growth", 2.0).growth_exponent, 1.0);
  const SignalSpec tone = parse_signal("tone:pi/4:2", 2.0);
  EXPECT_TRUE(tone.complex_valued);
  EXPECT_EQ(tone.growth_exponent, 2.0);
  EXPECT_THROW(parse_signal("chirp", 2.0), UsageError);
  EXPECT_THROW(parse_signal("tone:1", 2.0), UsageError);
}

TEST(FormatReal, SeventeenDigits) {
  EXPECT_EQ(format_real(0.1), "0.10000000000000001");
  EXPECT_EQ(format_real(-2.0), "-2");
}

TEST(Sweep, ReproducesReferenceTable) {
  const Result r = invoke({"sweep", "--method", "classical,d1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"method", "t", "L", "reconstructed", "truth", "abs_error"}));
  EXPECT_EQ(rows[1][0], "classical");
  EXPECT_EQ(rows[4][0], "d1");
  EXPECT_EQ(rows[6][2], "500");
  EXPECT_LT(std::abs(std::stod(rows[6][5]) - 4.34947278194e-9) / 4.34947278194e-9, 1e-6);
}

TEST(Sweep, IntegerTimeHasZeroError) {
  const Result r = invoke({"sweep", "--t", "3", "--signal", "linear-growth"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(rows[i][5], "0");
}

TEST(Sweep, ToneAddsImaginaryColumns) {
  const Result r = invoke({"sweep", "--signal", "tone:0.5:0", "--L", "20", "--method", "d1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows[0].size(), 8u);
  EXPECT_EQ(rows[0][6], "reconstructed_im");
  EXPECT_EQ(rows[0][7], "truth_im");
}

TEST(Sweep, Deterministic) {
  const std::vector<std::string> args{"sweep", "--L", "40,80", "--t", "0.123"};
  const char* saved = std::getenv("BANDLIM_THREADS");
  const std::string restore = saved ? saved : "";
  setenv("BANDLIM_THREADS", "1", 1);
  const Result one = invoke(args);
  setenv("BANDLIM_THREADS", "3", 1);
  const Result three = invoke(args);
  if (saved) setenv("BANDLIM_THREADS", restore.c_str(), 1); else unsetenv("BANDLIM_THREADS");
  EXPECT_EQ(one.out, three.out);
  EXPECT_EQ(one.out, invoke(args).out);
}

TEST(Coeffs, DeltaRowAtIntegerTime) {
  const Result r = invoke({"coeffs", "--t", "4", "--L", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  const auto& h = rows[0];
  ASSERT_EQ(rows.size(), 12u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const std::string want = rows[i][0] == "4" ? "1" : "0";
    EXPECT_EQ(rows[i][column(h, "a_classical")], want);
    EXPECT_EQ(rows[i][column(h, "a_d1")], want);
    EXPECT_EQ(rows[i][column(h, "a_general")], want);
  }
}

TEST(Coeffs, FirstOrderColumnsAgree) {
  const Result r = invoke({"coeffs", "--alpha", "0", "--d", "1", "--L", "60"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  const auto& h = rows[0];
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double d1 = std::stod(rows[i][column(h, "a_d1")]);
    const double general = std::stod(rows[i][column(h, "a_general")]);
    EXPECT_NEAR(d1, general, 1e-8) << rows[i][0];
  }
}

TEST(Coeffs, DecayDiagnostics) {
  const Result r = invoke({"coeffs", "--t", "-1.7", "--L", "500"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  const auto& h = rows[0];
  double l_near = 0, l_far = 0, m_near = 0, m_far = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const long k = std::stol(rows[i][0]);
    const double lk = std::stod(rows[i][column(h, "L_k")]);
    const double mk = std::stod(rows[i][column(h, "M_k")]);
    const long dist = std::abs(k + 2);
    if (dist >= 25 && dist <= 50) { l_near = std::max(l_near, lk); m_near = std::max(m_near, mk); }
    if (dist >= 250) { l_far = std::max(l_far, lk); m_far = std::max(m_far, mk); }
  }
  EXPECT_GT(l_far, l_near);
  EXPECT_LT(m_far, m_near);
}

TEST(Seams, CleanAndCorrupted) {
  const Result clean = invoke({"seams", "--d", "2", "--points", "10"});
  EXPECT_EQ(clean.code, 0) << clean.err;
  EXPECT_EQ(parse_csv(clean.out).size(), 11u);
  const Result bad = invoke({"seams", "--d", "2", "--points", "10", "--corrupt"});
  EXPECT_EQ(bad.code, 3);
  EXPECT_FALSE(bad.err.empty());
}

TEST(Seams, SpliceDump) {
  const auto path = scratch("splice.csv");
  std::filesystem::remove(path);
  const Result r = invoke({"seams", "--d", "3", "--points", "2", "--splice-dump", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "kind,index,value");
}

TEST(Interp, ValuesOnly) {
  const Result r = invoke({"interp", "--L", "50", "--method", "d1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"method", "t", "L", "value"}));
}

TEST(Output, WritesFile) {
  const auto path = scratch("sweep.csv");
  std::filesystem::remove(path);
  const Result r = invoke({"sweep", "--L", "10", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), invoke({"sweep", "--L", "10"}).out);
}

TEST(Config, FileWithFlagOverride) {
  const auto path = scratch("run.ini");
  {
    std::ofstream cfg(path);
    cfg << "t = 0.25\nL = 30\nmethod = d1\nsignal = linear-growth\n";
  }
  const Result from_file = invoke({"sweep", "--config", path.string()});
  ASSERT_EQ(from_file.code, 0) << from_file.err;
  EXPECT_EQ(from_file.out, invoke({"sweep", "--t", "0.25", "--L", "30", "--method", "d1", "--signal", "linear-growth"}).out);
  const Result overridden = invoke({"sweep", "--config", path.string(), "--L", "40"});
  ASSERT_EQ(overridden.code, 0) << overridden.err;
  EXPECT_EQ(parse_csv(overridden.out)[1][2], "40");
}

TEST(ExitCodes, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"launch"}).code, 2);
  EXPECT_EQ(invoke({"sweep", "--omega", "4pi/3"}).code, 2);
  EXPECT_EQ(invoke({"sweep", "--N", "5"}).code, 2);
  EXPECT_EQ(invoke({"sweep", "--method", "spline"}).code, 2);
  EXPECT_EQ(invoke({"sweep", "--L", "0"}).code, 2);
  EXPECT_EQ(invoke({"sweep", "--signal", "tone:4:0"}).code, 2);
}

TEST(ExitCodes, IntegrityFromTolerance) {
  EXPECT_EQ(invoke({"sweep", "--abs-tol", "1e-300", "--method", "general", "--L", "5"}).code, 3);
}

TEST(ExitCodes, Help) { EXPECT_EQ(invoke({"--help"}).code, 0); }

}  // namespace
}  // namespace bandlim::cli
