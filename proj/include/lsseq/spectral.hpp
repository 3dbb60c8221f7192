#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "lsseq/params.hpp"

namespace lsseq {

// Validation tolerances. Fixed at compile time so verdicts are reproducible.
inline constexpr double kRootResidualTol = 1e-12;
inline constexpr double kUnitCircleMargin = 1e-9;
inline constexpr double kRootSeparation = 1e-8;
inline constexpr double kLambdaResidualTol = 1e-6;
inline constexpr double kLambdaConsistencyTol = 1e-9;

/// Roots of L_k X^k + ... + L_1 X - 1 and the coefficients of the closed form
///
///   l_{n,i} = sum_j lambda(j, i) * root(j)^{-n},   i = 0..k (i = 0 is t_n).
///
/// Root index 0 is the dominant root beta in (0,1); indices 1..k-1 are the
/// conjugates. Immutable after construction.
class Spectral {
 public:
  /// Finds the roots, checks the root condition and solves for lambda.
  /// Throws Error{RootConditionViolated, MultipleRoot, IllConditioned}.
  static Spectral solve(const Params& params);

  /// Builds the lambda table from caller-supplied roots (roots[0] must be the
  /// real root in (0,1)). Neither the root condition nor the residual gate is
  /// applied; residual() reports the reconstruction error.
  static Spectral from_roots(const Params& params,
                             std::vector<std::complex<double>> roots);

  const Params& params() const noexcept { return params_; }
  std::size_t k() const noexcept { return params_.k(); }
  double beta() const noexcept { return roots_[0].real(); }

  std::complex<double> root(std::size_t j) const { return roots_.at(j); }
  std::span<const std::complex<double>> roots() const noexcept { return roots_; }
  std::span<const std::complex<double>> conjugates() const noexcept {
    return std::span<const std::complex<double>>(roots_).subspan(1);
  }

  /// lambda_{j,i}; j in [0,k), i in [0,k].
  std::complex<double> lambda(std::size_t j, std::size_t i) const {
    return lambdas_.at(j * (k() + 1) + i);
  }

  /// max_{n <= k+10, i <= k} |sum_j lambda_{j,i} root_j^{-n} - l_{n,i}| / max(1, l_{n,i})
  double residual() const noexcept { return residual_; }

  /// Smallest conjugate modulus (infinity when k = 1).
  double min_conjugate_modulus() const noexcept;

 private:
  Spectral(Params params, std::vector<std::complex<double>> roots);

  Params params_;
  std::vector<std::complex<double>> roots_;
  std::vector<std::complex<double>> lambdas_;  // row-major k x (k+1)
  double residual_ = 0.0;
};

/// Same parameters, roots rounded to `decimals` decimal places (real and
/// imaginary parts separately), lambda table re-solved from the rounded roots.
Spectral round_roots(const Spectral& spectral, int decimals);

/// The polynomial L_1 x + ... + L_k x^k - 1 at x.
double pattern_polynomial(const Params& params, double x) noexcept;

}  // namespace lsseq
