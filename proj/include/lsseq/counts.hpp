#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lsseq/params.hpp"

namespace lsseq {

using BigInt = boost::multiprecision::cpp_int;

class Spectral;

/// Interval counts of the successive partitions: t_n intervals in total,
/// l_{n,i} of them of length beta^{n+i-1}. Rows are exact and append-only.
///
/// Int is BigInt for the reference path or std::uint64_t for the fast
/// kernels; the 64-bit table refuses to grow past the first overflow.
///
/// Concurrent reads of a built table are safe; growth is single-writer.
template <class Int>
class BasicCountsTable {
 public:
  explicit BasicCountsTable(Params params, std::size_t n_max = 0);

  const Params& params() const noexcept { return params_; }
  std::size_t k() const noexcept { return params_.k(); }

  /// Number of rows built (levels 0 .. size()-1).
  std::size_t size() const noexcept { return t_.size(); }
  std::size_t max_level() const noexcept { return t_.size() - 1; }

  /// Grows the table to include level n_max. For 64-bit tables throws
  /// std::overflow_error when a row no longer fits.
  void extend_to(std::size_t n_max);

  /// Grows the table until t_{max_level} > value, so level_of(value) works.
  void cover(const Int& value);

  const Int& t(std::size_t n) const { return t_.at(n); }

  /// l_{n,i} with the conventions l_{n,0} = t_n, l_{n,i} = 0 for i > k or n < 0.
  const Int& l(std::ptrdiff_t n, std::size_t i) const;

  /// Unique n with t_n <= N < t_{n+1}. Throws Error{NonPositiveIndex} for
  /// N < 1 and std::out_of_range when the table does not cover N.
  std::size_t level_of(const Int& N) const;

  /// l_{n,1} + ... + l_{n,min(r,k)}.
  Int head_sum(std::size_t n, std::size_t r) const;

 private:
  Params params_;
  std::vector<Int> t_;
  std::vector<Int> l_;  // row-major, k entries per level
};

using CountsTable = BasicCountsTable<BigInt>;
using FastCountsTable = BasicCountsTable<std::uint64_t>;

/// Largest 64-bit table covering as many levels of `params` as fit.
FastCountsTable make_fast_counts(const Params& params);

/// sum_j lambda_{j,i} root_j^{-n} as a real number. Throws
/// Error{IllConditioned} when the imaginary part exceeds 1e-6 relative.
double closed_form_count(const Spectral& spectral, std::size_t n, std::size_t i);

}  // namespace lsseq
