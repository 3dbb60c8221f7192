#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lsseq/counts.hpp"
#include "lsseq/error.hpp"
#include "lsseq/params.hpp"
#include "lsseq/spectral.hpp"
#include "oracles.hpp"

using namespace lsseq;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    validate_params(Params::parse(text).coeffs());
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << text << " was accepted";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Params, ParsesAndReports) {
  const Params p = Params::parse(" 2, 1 ,1");
  EXPECT_EQ(p.k(), 3u);
  EXPECT_EQ(p.L(1), 2);
  EXPECT_EQ(p.L(4), 0);
  EXPECT_EQ(p.alphabet(), 4);
  EXPECT_EQ(p.partial_sum(2), 3);
  EXPECT_EQ(p.to_string(), "2,1,1");
  EXPECT_TRUE(p.is_monotone());
  EXPECT_FALSE(Params::parse("1,0,1").is_monotone());
}

TEST(Params, RejectsBadTuples) {
  auto parse_code = [](const std::string& text) {
    try {
      Params::parse(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(parse_code(""), ErrorCode::EmptyTuple);
  EXPECT_EQ(parse_code("0,1"), ErrorCode::ZeroEndpoint);
  EXPECT_EQ(parse_code("1,0"), ErrorCode::ZeroEndpoint);
  EXPECT_EQ(parse_code("1"), ErrorCode::DegenerateAlphabet);
  EXPECT_EQ(parse_code("2,-1,1"), ErrorCode::NegativeCoefficient);
  EXPECT_THROW(Params::parse("2,x"), Error);
}

TEST(ValidateParams, Examples) {
  EXPECT_NO_THROW(validate_params(Params::parse("1,1").coeffs()));
  EXPECT_NO_THROW(validate_params(Params::parse("2,1,1").coeffs()));
  EXPECT_EQ(code_of("0,1"), ErrorCode::ZeroEndpoint);
  // z^5 - z^4 - 1 has the factor z^2 - z + 1 with roots on the unit circle.
  EXPECT_EQ(code_of("1,0,0,0,1"), ErrorCode::RootConditionViolated);
}

TEST(Spectral, GoldenRatio) {
  const Spectral s = Spectral::solve(Params::parse("1,1"));
  EXPECT_NEAR(s.beta(), (std::sqrt(5.0) - 1.0) / 2.0, 1e-15);
  ASSERT_EQ(s.conjugates().size(), 1u);
  EXPECT_NEAR(s.root(1).real(), -(1.0 + std::sqrt(5.0)) / 2.0, 1e-12);
  EXPECT_NEAR(s.lambda(0, 1).real(), (1.0 + std::sqrt(5.0)) / (2.0 * std::sqrt(5.0)), 1e-12);
  EXPECT_NEAR((s.lambda(0, 1) + s.lambda(1, 1)).real(), 1.0, 1e-12);
}

TEST(Spectral, TwoOneOne) {
  const Spectral s = Spectral::solve(Params::parse("2,1,1"));
  EXPECT_NEAR(s.beta(), 0.392647, 1e-6);
  ASSERT_EQ(s.conjugates().size(), 2u);
  for (auto r : s.conjugates()) {
    EXPECT_NEAR(r.real(), -0.696, 5e-4);
    EXPECT_NEAR(std::abs(r.imag()), 1.436, 5e-4);
  }
  EXPECT_NEAR(s.lambda(0, 0).real() * std::pow(s.beta(), 3), 0.0924, 5e-4);
  const Spectral rounded = round_roots(s, 3);
  const double ratio = -std::log(std::abs(rounded.lambda(0, 0)) * std::pow(0.393, 3));
  EXPECT_NEAR(ratio, 122.5173 / 51.4562, 1e-4);
}

TEST(Spectral, BinaryPattern) {
  const Spectral s = Spectral::solve(Params::parse("2"));
  EXPECT_DOUBLE_EQ(s.beta(), 0.5);
  EXPECT_TRUE(s.conjugates().empty());
  EXPECT_NEAR(s.lambda(0, 1).real(), 1.0, 1e-15);
  EXPECT_TRUE(std::isinf(s.min_conjugate_modulus()));
}

TEST(Spectral, LambdaRelations) {
  for (const auto& text : oracle::test_params()) {
    const Spectral s = Spectral::solve(Params::parse(text));
    const Params& p = s.params();
    EXPECT_LE(s.residual(), kLambdaResidualTol) << text;
    EXPECT_GT(s.lambda(0, 0).real(), 0.0) << text;
    EXPECT_NEAR(s.lambda(0, 0).imag(), 0.0, 1e-12) << text;
    for (std::size_t j = 0; j < p.k(); ++j) {
      std::complex<double> sum = 0.0;
      for (std::size_t i = 1; i <= p.k(); ++i) sum += s.lambda(j, i);
      EXPECT_LE(std::abs(sum - s.lambda(j, 0)), kLambdaConsistencyTol) << text;
      const auto inv = 1.0 / s.root(j);
      for (std::size_t i = 1; i < p.k(); ++i) {
        const auto expect = inv * s.lambda(j, i) - static_cast<double>(p.L(i)) * s.lambda(j, 1);
        EXPECT_LE(std::abs(s.lambda(j, i + 1) - expect), kLambdaConsistencyTol) << text;
      }
    }
  }
}

TEST(Spectral, RandomTuplesEitherSolveCleanlyOrAreRejected) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(1, 4);
  std::uniform_int_distribution<int> coeff(0, 10);
  int accepted = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(len(rng)));
    for (auto& x : c) x = coeff(rng);
    c.front() = std::max<std::int64_t>(c.front(), 1);
    c.back() = std::max<std::int64_t>(c.back(), 1);
    if (c.size() == 1) c[0] = std::max<std::int64_t>(c[0], 2);
    const Params p = Params::from_coefficients(c);
    try {
      const Spectral s = Spectral::solve(p);
      ++accepted;
      EXPECT_LE(std::abs(pattern_polynomial(p, s.beta())), kRootResidualTol) << p.to_string();
      EXPECT_GT(s.min_conjugate_modulus(), 1.0) << p.to_string();
      EXPECT_LE(s.residual(), kLambdaResidualTol);
      for (auto r : s.conjugates()) {
        bool paired = false;
        for (auto q : s.conjugates()) paired |= std::abs(q - std::conj(r)) <= 1e-10;
        EXPECT_TRUE(paired) << p.to_string();
      }
    } catch (const Error& e) {
      EXPECT_FALSE(p.is_monotone()) << p.to_string() << " " << e.what();
      EXPECT_TRUE(e.code() == ErrorCode::RootConditionViolated ||
                  e.code() == ErrorCode::MultipleRoot)
          << p.to_string();
    }
  }
  EXPECT_GT(accepted, 100);
}

TEST(Spectral, FromRootsSkipsGates) {
  const Spectral s = Spectral::solve(Params::parse("2,1,1"));
  const Spectral same = Spectral::from_roots(s.params(), {s.roots().begin(), s.roots().end()});
  EXPECT_EQ(same.beta(), s.beta());
  EXPECT_THROW(Spectral::from_roots(s.params(), {s.root(0)}), Error);
  const Spectral rounded = round_roots(s, 3);
  EXPECT_EQ(rounded.beta(), 0.393);
  EXPECT_GT(rounded.residual(), s.residual());
}
