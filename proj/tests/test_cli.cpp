#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using lsseq::cli::run_cli;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = run_cli(args, out, err, in);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ParamsCheck) {
  const Result ok = run({"params", "check", "2,1,1"});
  EXPECT_EQ(ok.code, 0);
  const json j = json::parse(ok.out);
  EXPECT_TRUE(j["valid"].get<bool>());
  EXPECT_TRUE(j["pisot"].get<bool>());
  EXPECT_NEAR(j["beta"].get<double>(), 0.392647, 1e-6);
  EXPECT_EQ(j["conjugates"].size(), 2u);
  EXPECT_NEAR(j["conjugates"][0]["modulus"].get<double>(), 1.5959, 1e-4);

  const Result bad = run({"params", "check", "0,1"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(json::parse(bad.out)["reason"], "ZeroEndpoint");
  EXPECT_EQ(run({"params", "check", "1,1"}).code, 0);
  EXPECT_EQ(json::parse(run({"params", "check", "1,0,0,0,1"}).out)["reason"],
            "RootConditionViolated");
}

TEST(Cli, Gen) {
  const Result r = run({"gen", "2,1,1", "--count", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "index,value\n1,0.39264678170264083\n2,0.78529356340528167\n3,0.93946505858672302\n");
  const Result z = run({"gen", "2,1,1", "--count", "2", "--start", "0", "--no-header", "--coeffs"});
  EXPECT_EQ(z.out, "0,0,\n1,0.39264678170264083,1:1\n");
  const json j = json::parse(run({"gen", "1,1", "--count", "2", "--format", "json"}).out);
  EXPECT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["index"], 1);
  EXPECT_EQ(run({"gen", "0,1", "--count", "2"}).code, 1);
  EXPECT_EQ(run({"gen", "1,1"}).code, 1);
}

TEST(Cli, GenIsChunkedAndDeterministic) {
  const std::vector<std::string> args{"gen", "3,2,1", "--count", "70000", "--start", "5"};
  const Result a = run(args);
  EXPECT_EQ(a.out, run(args).out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 70001);
}

TEST(Cli, Digits) {
  EXPECT_EQ(run({"digits", "2,1,1", "9"}).out, "(1,2);(1,0)\nN=9\n");
  EXPECT_EQ(run({"digits", "2,1,1", "--expansion", "(1,0);(0,0);(0,0)"}).out,
            "(1,0);(0,0);(0,0)\nN=10\n");
  EXPECT_EQ(run({"digits", "2,1,1", "--expansion", "(1,0);(1,2)"}).code, 1);
  EXPECT_EQ(run({"digits", "2,1,1", "-4"}).code, 1);
  EXPECT_EQ(run({"digits", "2,1,1", "0"}).out, "\nN=0\n");
}

TEST(Cli, Counts) {
  EXPECT_EQ(run({"counts", "1,1", "--levels", "5"}).out,
            "n,t,l1,l2\n0,1,1,0\n1,2,1,1\n2,3,2,1\n3,5,3,2\n4,8,5,3\n5,13,8,5\n");
}

TEST(Cli, Partition) {
  EXPECT_EQ(run({"partition", "1,1", "--level", "2"}).out,
            "left,exponent\n0,2\n0.3819660112501051,3\n0.61803398874989479,2\n");
  EXPECT_EQ(run({"partition", "2,1,1", "--level", "1", "--endpoints", "--no-header"}).out,
            "0\n0.39264678170264083\n0.78529356340528167\n0.93946505858672302\n");
}

TEST(Cli, DiscRoundTrip) {
  const Result gen = run({"gen", "2,1,1", "--count", "5000"});
  const Result direct = run({"disc", "2,1,1", "--count", "5000"});
  const Result piped = run({"disc", "--file", "-"}, gen.out);
  EXPECT_EQ(direct.code, 0);
  EXPECT_EQ(piped.code, 0);
  EXPECT_EQ(direct.out, piped.out);
  const json j = json::parse(direct.out);
  EXPECT_EQ(j["n_points"], 5000);
  EXPECT_LE(j["star"].get<double>(), j["extreme"].get<double>());

  const auto path = std::filesystem::temp_directory_path() / "lsseq_cli_points.csv";
  EXPECT_EQ(run({"gen", "2,1,1", "--count", "5000", "-o", path.string()}).code, 0);
  EXPECT_EQ(run({"disc", "--file", path.string()}).out, direct.out);
  std::filesystem::remove(path);

  EXPECT_EQ(run({"disc", "--file", "/nonexistent/points.csv"}).code, 3);
  EXPECT_EQ(run({"disc", "--file", "-"}, "value\n0.5\nabc\n").code, 3);
  EXPECT_EQ(run({"disc", "--file", "-"}, "1.5\n").code, 1);
  EXPECT_EQ(run({"gen", "1,1", "--count", "3", "-o", "/nonexistent/dir/out.csv"}).code, 3);
}

TEST(Cli, Bound) {
  const json g = json::parse(run({"bound", "2,1,1", "--root-digits", "3"}).out);
  EXPECT_NEAR(g["main_coeff"].get<double>(), 51.4562, 0.01);
  EXPECT_NEAR(g["additive_coeff"].get<double>(), 122.5173, 0.01);
  const json c = json::parse(run({"bound", "1,1", "--kind", "classical", "--n", "1000"}).out);
  EXPECT_EQ(c["printed_main_coeff"], 2.366);
  EXPECT_NEAR(c["structural_residual"].get<double>(), 0.0, 1e-12);
  EXPECT_TRUE(c["certified"].get<bool>());
  EXPECT_EQ(run({"bound", "2,1,1", "--kind", "classical"}).code, 1);
}

TEST(Cli, Verify) {
  const Result a = run({"verify", "1,1", "--max-n", "100000"});
  EXPECT_EQ(a.code, 0) << a.err;
  const auto rows = std::count(a.out.begin(), a.out.end(), '\n') - 1;
  EXPECT_GE(rows, 50);
  EXPECT_NE(a.out.find("\n75025,"), std::string::npos);  // t_23 = F_25
  EXPECT_EQ(run({"verify", "2,1,1", "--max-n", "100000"}).code, 0);
  EXPECT_EQ(run({"verify", "3,2,1", "--max-n", "10000"}).code, 0);
  EXPECT_EQ(run({"verify", "2,1", "--max-n", "20000", "--kind", "classical"}).code, 0);
  EXPECT_EQ(run({"verify", "1,1", "--max-n", "2000000"}).code, 1);
}

TEST(Cli, Integrate) {
  const json x2 = json::parse(run({"integrate", "1,1", "--count", "10000", "--function", "x2"}).out);
  EXPECT_TRUE(x2["koksma_bound_ok"].get<bool>());
  EXPECT_LE(x2["abs_error"].get<double>(), x2["star_disc"].get<double>());
  const json c = json::parse(
      run({"integrate", "2,1,1", "--count", "10000", "--function", "cos2pi"}).out);
  EXPECT_LE(std::abs(c["estimate"].get<double>()), 4.0 * c["star_disc"].get<double>());
  const json one = json::parse(run({"integrate", "2,1,1", "--count", "1", "--function", "exp"}).out);
  EXPECT_DOUBLE_EQ(one["estimate"].get<double>(), std::exp(0.39264678170264083));
  EXPECT_EQ(run({"integrate", "2,1,1", "--count", "10", "--function", "sin"}).code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}
