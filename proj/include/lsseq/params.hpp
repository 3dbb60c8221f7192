#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lsseq {

/// Splitting pattern (L_1, ..., L_k): each maximal interval is cut into L_1
/// pieces of relative length beta, L_2 of beta^2, ..., L_k of beta^k.
///
/// A Params value always satisfies the coefficient constraints (k >= 1,
/// L_1 >= 1, L_k >= 1, L_i >= 0, sum L_i >= 2). The root condition is checked
/// separately by validate_params / Spectral::solve.
class Params {
 public:
  /// Throws Error{EmptyTuple, NegativeCoefficient, ZeroEndpoint,
  /// DegenerateAlphabet, InvalidArgument}.
  static Params from_coefficients(std::span<const std::int64_t> coeffs);

  /// Parses "2,1,1" (whitespace tolerated) and applies from_coefficients.
  static Params parse(std::string_view text);

  std::size_t k() const noexcept { return coeffs_.size(); }

  /// L_i for 1 <= i <= k; 0 outside that range.
  std::int64_t L(std::size_t i) const noexcept {
    return (i >= 1 && i <= coeffs_.size()) ? coeffs_[i - 1] : 0;
  }

  /// L_1 + ... + L_m (m clamped to k).
  std::int64_t partial_sum(std::size_t m) const noexcept {
    return prefix_[m < prefix_.size() ? m : prefix_.size() - 1];
  }

  /// L_1 + ... + L_k, the number of pieces per split.
  std::int64_t alphabet() const noexcept { return prefix_.back(); }

  std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }

  /// L_1 >= L_2 >= ... >= L_k > 0.
  bool is_monotone() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Params&, const Params&) = default;

 private:
  explicit Params(std::vector<std::int64_t> coeffs);

  std::vector<std::int64_t> coeffs_;
  std::vector<std::int64_t> prefix_;  // prefix_[m] = L_1 + ... + L_m
};

/// Full validation: coefficient constraints plus the root condition
/// (unique simple root in (0,1), every other root of modulus > 1).
Params validate_params(std::span<const std::int64_t> coeffs);

}  // namespace lsseq
