#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lsseq/params.hpp"
#include "lsseq/points.hpp"

namespace lsseq {

inline constexpr std::uint64_t kMaxPartitionSize = 10'000'000;

/// Level-n partition of [0,1) built by repeated splitting. Intervals are kept
/// left to right; each has an exact left endpoint (coefficients of beta^1..)
/// and a length exponent m (length beta^m).
class Partition {
 public:
  static Partition trivial(const Params& params);

  const Params& params() const noexcept { return params_; }
  std::size_t level() const noexcept { return level_; }
  std::size_t size() const noexcept { return exponents_.size(); }

  /// Coefficients of beta^1 .. beta^stride() of the i-th left endpoint.
  std::span<const std::uint32_t> left_coefficients(std::size_t i) const;
  BetaPolynomial left(std::size_t i) const;
  std::size_t exponent(std::size_t i) const { return exponents_.at(i); }
  std::size_t stride() const noexcept { return stride_; }

  /// Number of intervals with exponent level+i-1, for i = 1..k (index i-1).
  std::vector<std::uint64_t> exponent_counts() const;

  /// Splits every interval of exponent level() into L_1 pieces of exponent
  /// level+1, then L_2 of level+2, ..., left to right.
  Partition refine() const;

 private:
  explicit Partition(Params params) : params_(std::move(params)) {}

  Params params_;
  std::size_t level_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint32_t> coeffs_;  // size() rows of stride_ entries
  std::vector<std::uint32_t> exponents_;
};

/// n-fold refinement of [0,1). Throws Error{TooLarge} when t_n > 1e7.
Partition partition_at_level(const Params& params, std::size_t n);

/// Left endpoint values in increasing order.
std::vector<double> left_endpoints(const Partition& partition, double beta);

}  // namespace lsseq
