#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lsseq/counts.hpp"
#include "lsseq/numeration.hpp"
#include "lsseq/spectral.hpp"

namespace lsseq {

/// sum_m c_m beta^m with non-negative integer coefficients, powers m >= 1.
/// Kept trimmed (no trailing zero coefficients), so == is exact equality of
/// representations.
class BetaPolynomial {
 public:
  BetaPolynomial() = default;

  /// Coefficients of beta^1, beta^2, ... in order.
  static BetaPolynomial from_coefficients(std::span<const std::uint32_t> by_power);

  void add(std::size_t power, std::uint32_t amount);
  std::uint32_t coefficient(std::size_t power) const noexcept;
  std::size_t max_power() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Horner in descending powers.
  double evaluate(double beta) const noexcept;
  /// Compensated Horner (error-free transforms); reference for evaluate().
  double evaluate_compensated(double beta) const noexcept;

  /// "1:2;3:1" (power:coefficient, zero coefficients omitted).
  std::string to_string() const;

  friend bool operator==(const BetaPolynomial&, const BetaPolynomial&) = default;

 private:
  void trim();
  std::vector<std::uint32_t> coeffs_;  // coeffs_[m-1] = c_m
};

struct BetaPoint {
  BigInt index;
  BetaPolynomial coeffs;
  double value = 0.0;
};

/// Amount digit value d = eps + eta contributes to beta^{position+j}, j = 1..k.
std::uint32_t digit_piece(const Params& params, std::int64_t d, std::size_t j) noexcept;

/// Coefficient vector of the point with the given expansion.
BetaPolynomial point_coefficients(const DigitExpansion& digits, const Params& params);

/// I_x^(m) = [xi^x, xi^x + beta^m).
struct ElementaryInterval {
  std::uint64_t x = 0;
  std::size_t m = 0;
  BetaPoint left;
  double right_value = 0.0;
};

/// Generalized LS-sequence of points for one parameter tuple. Owns the
/// spectral data and an exact counts table that grows on demand; methods
/// that may grow the table are non-const. After reserve(), the const
/// members may be called concurrently.
class LsSequence {
 public:
  explicit LsSequence(const Params& params);
  explicit LsSequence(Spectral spectral);

  const Params& params() const noexcept { return spectral_.params(); }
  const Spectral& spectral() const noexcept { return spectral_; }
  double beta() const noexcept { return spectral_.beta(); }
  const CountsTable& counts() const noexcept { return counts_; }

  /// Grows the counts table so every index <= max_index is covered.
  void reserve(const BigInt& max_index);

  DigitExpansion digits(const BigInt& N);

  /// xi^N through the exact BigInt numeration (the serial reference path).
  BetaPoint point(const BigInt& N);

  /// point(N) for N in [start, end).
  std::vector<BetaPoint> point_range(std::uint64_t start, std::uint64_t end);

  /// Values of xi^N for N in [start, end), one point at a time through
  /// point(). Reference for values().
  std::vector<double> values_serial(std::uint64_t start, std::uint64_t end);

  /// Same values from the OpenMP kernel (64-bit counts when they suffice).
  /// Bitwise identical to values_serial.
  std::vector<double> values(std::uint64_t start, std::uint64_t end);

  /// [xi^x, xi^x + beta^m) is a cell of the level-m partition. True for x = 0;
  /// otherwise the piece xi^x starts at birth must be no shorter than beta^m.
  bool is_elementary(std::uint64_t x, std::size_t m);

  /// Throws Error{NotElementary}.
  ElementaryInterval elementary_interval(std::uint64_t x, std::size_t m);

  /// A_x^(m)(N) = #{l <= N : xi^l in I_x^(m)} from the digits of N.
  /// N is a member when its digits below position m spell phi(x).
  /// Throws Error{NotElementary, NotMember}.
  BigInt count_in_elementary(std::uint64_t x, std::size_t m, const BigInt& N);

  /// A_x^(m)(N) - N beta^m.
  double local_remainder(std::uint64_t x, std::size_t m, const BigInt& N);

 private:
  const FastCountsTable& fast_counts();

  Spectral spectral_;
  CountsTable counts_;
  std::optional<FastCountsTable> fast_;
};

}  // namespace lsseq
