#include <gtest/gtest.h>

#include <random>

#include "lsseq/discrepancy.hpp"
#include "lsseq/error.hpp"
#include "lsseq/points.hpp"
#include "oracles.hpp"

using namespace lsseq;

namespace {

ErrorCode code_of(std::vector<double> v) {
  try {
    discrepancy_report(v);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Discrepancy, SmallSets) {
  EXPECT_DOUBLE_EQ(star_discrepancy(std::vector<double>{0.5}), 0.5);
  EXPECT_DOUBLE_EQ(extreme_discrepancy(std::vector<double>{0.5}), 1.0);
  EXPECT_DOUBLE_EQ(star_discrepancy(std::vector<double>{0.25, 0.75}), 0.25);
  EXPECT_DOUBLE_EQ(extreme_discrepancy(std::vector<double>{0.25, 0.75}), 0.5);
  EXPECT_DOUBLE_EQ(extreme_discrepancy(std::vector<double>{0.0, 0.5}), 0.5);
  const double b = 0.39264678170264083;
  const std::vector<double> first{0.0, b, 2 * b, 2 * b + b * b};
  EXPECT_NEAR(star_discrepancy(first), 0.285294, 1e-6);
}

TEST(Discrepancy, Errors) {
  EXPECT_EQ(code_of({}), ErrorCode::EmptySet);
  EXPECT_EQ(code_of({0.2, 1.0}), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of({-0.1}), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of({std::nan("")}), ErrorCode::OutOfRange);
  std::vector<double> big(kMaxBruteForcePoints + 1, 0.5);
  try {
    brute_force_discrepancy(big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(Discrepancy, BruteForceSmallSets) {
  const auto one = brute_force_discrepancy(std::vector<double>{0.5});
  EXPECT_DOUBLE_EQ(one.star, 0.5);
  EXPECT_DOUBLE_EQ(one.extreme, 1.0);
  const auto two = brute_force_discrepancy(std::vector<double>{0.25, 0.75});
  EXPECT_DOUBLE_EQ(two.star, 0.25);
  EXPECT_DOUBLE_EQ(two.extreme, 0.5);
}

TEST(Discrepancy, FormulasMatchBruteForce) {
  std::mt19937_64 rng(20241018);
  std::uniform_int_distribution<int> size(1, 200);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v(static_cast<std::size_t>(size(rng)));
    for (double& x : v) x = unit(rng);
    // a few exact ties
    if (trial % 10 == 0 && v.size() > 3) v[1] = v[2];
    const auto r = discrepancy_report(v);
    const auto bf = brute_force_discrepancy(v);
    EXPECT_NEAR(r.star, bf.star, 1e-12) << trial;
    EXPECT_NEAR(r.extreme, bf.extreme, 1e-12) << trial;
    EXPECT_LE(r.star, r.extreme);
    EXPECT_LE(r.extreme, 2.0 * r.star);
    EXPECT_DOUBLE_EQ(r.extreme, r.d_plus + r.d_minus);
  }
}

TEST(Discrepancy, SerialAndParallelAgree) {
  LsSequence s(Params::parse("3,2,1"));
  const auto v = s.values(1, 50001);
  const auto a = discrepancy_report(v);
  const auto b = discrepancy_report_serial(v);
  EXPECT_EQ(a.star, b.star);
  EXPECT_EQ(a.extreme, b.extreme);
  EXPECT_EQ(a.n_points, 50000u);
  std::vector<double> copy = v;
  EXPECT_EQ(discrepancy_report_inplace(copy).extreme, a.extreme);
  EXPECT_TRUE(std::is_sorted(copy.begin(), copy.end()));
}

TEST(Discrepancy, SequencesAreWellSpread) {
  for (const auto& text : oracle::test_params()) {
    LsSequence s(Params::parse(text));
    EXPECT_LT(star_discrepancy(s.values(1, 10001)), 0.01) << text;
  }
}

TEST(Discrepancy, PartitionEndpoints) {
  EXPECT_DOUBLE_EQ(partition_discrepancy(Params::parse("1,1"), 0), 1.0);
  // The endpoint at 0 always costs 1/t_n.
  const CountsTable c(Params::parse("1,1"), 13);
  for (std::size_t n = 1; n <= 13; ++n) {
    const double t = c.t(n).convert_to<double>();
    EXPECT_GE(t * partition_discrepancy(Params::parse("1,1"), n), 1.0 - 1e-9);
    const SignedDeviation d = partition_signed_deviation(Params::parse("1,1"), n);
    EXPECT_GE(d.max, 0.0);
    EXPECT_LE(d.min, 0.0);
  }
}
