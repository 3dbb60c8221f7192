#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "lsseq/params.hpp"
#include "lsseq/spectral.hpp"

namespace lsseq {

/// Pattern (L, S): L pieces of length beta and S of length beta^2.
struct ClassicalIngredients {
  std::int64_t L = 0;
  std::int64_t S = 0;
  double beta = 0.0;
  double tau1 = 0.0;
  double lambda0 = 0.0;
  double lambda1 = 0.0;
  double r_tilde = 0.0;
};

/// Throws Error{InvalidClassicalParams} for L < 1 or S < 1.
ClassicalIngredients classical_ingredients(std::int64_t L, std::int64_t S);

struct GeneralizedIngredients {
  Spectral spectral;
  std::vector<double> Lambda;  // Lambda[j-1] for conjugate j = 1..k-1
  double r_tilde = 0.0;
};

GeneralizedIngredients generalized_ingredients(const Spectral& spectral);

enum class BoundKind { Classical, Generalized };
std::string_view to_string(BoundKind kind) noexcept;

/// main_coeff * log-term(N) / N + additive_coeff / N, where the log term is
/// log N (classical) or log(N+1) (generalized). n0 is the first N the bound
/// is certified for.
struct BoundReport {
  BoundKind kind = BoundKind::Generalized;
  double main_coeff = 0.0;
  double additive_coeff = 0.0;
  double r_tilde = 0.0;
  double beta = 0.0;
  std::uint64_t n0 = 1;

  double log_term(double N) const noexcept;
  double value_at(double N) const noexcept;
  bool certified_at(double N) const noexcept { return N >= static_cast<double>(n0); }
};

BoundReport classical_bound(std::int64_t L, std::int64_t S);
BoundReport generalized_bound(const Spectral& spectral);
BoundReport generalized_bound(const Params& params);

/// Smallest N = t_n from which t_n >= |lambda_{1,0}| beta^{-n} - 1 holds at
/// every level.
std::uint64_t generalized_threshold(const Spectral& spectral);

/// Classical main coefficient over 2L / log L. Throws for L < 2.
double asymptotic_ratio(std::int64_t L, std::int64_t S);

/// Bracketed constant of the closed-form signed deviation of the (1,1)
/// partitions at level n >= 1 (the 1/t_n factor left out).
double kakutani_deviation(std::size_t n);
/// n -> infinity limit of kakutani_deviation over even n.
double kakutani_deviation_limit();

inline constexpr double kFibonacciEvenUpper = 0.4068;
inline constexpr double kFibonacciEvenLower = 0.0652;
inline constexpr double kFibonacciOddBound = 0.2764;

/// 2 * 0.4068 / |log beta| for the (1,1) pattern.
double fibonacci_star_coefficient();

/// Classical constants as printed for two patterns; kept for comparison
/// output only, they do not follow from classical_bound.
struct PrintedClassicalConstants {
  std::int64_t L;
  std::int64_t S;
  double main_coeff;
  double additive_coeff;
};
inline constexpr PrintedClassicalConstants kPrintedClassical[] = {
    {1, 1, 2.366, 3.139},
    {10, 1, 8.66, 22.02},
};

}  // namespace lsseq
