#include "lsseq/partition.hpp"

#include <algorithm>
#include <string>

#include "lsseq/counts.hpp"
#include "lsseq/error.hpp"

namespace lsseq {

Partition Partition::trivial(const Params& params) {
  Partition p(params);
  p.stride_ = params.k();
  p.coeffs_.assign(p.stride_, 0);
  p.exponents_.push_back(0);
  return p;
}

std::span<const std::uint32_t> Partition::left_coefficients(std::size_t i) const {
  if (i >= size()) throw std::out_of_range("partition interval index");
  return std::span<const std::uint32_t>(coeffs_).subspan(i * stride_, stride_);
}

BetaPolynomial Partition::left(std::size_t i) const {
  return BetaPolynomial::from_coefficients(left_coefficients(i));
}

std::vector<std::uint64_t> Partition::exponent_counts() const {
  std::vector<std::uint64_t> counts(params_.k(), 0);
  for (std::uint32_t e : exponents_) {
    const std::size_t slot = e - level_;
    if (slot < counts.size()) ++counts[slot];
  }
  return counts;
}

Partition Partition::refine() const {
  const std::size_t k = params_.k();
  const std::size_t n = level_;
  std::uint64_t longest = 0;
  for (std::uint32_t e : exponents_) longest += (e == n);
  const std::uint64_t pieces = static_cast<std::uint64_t>(params_.alphabet());
  const std::uint64_t next_size = size() - longest + longest * pieces;
  if (next_size > kMaxPartitionSize) {
    throw Error(ErrorCode::TooLarge, "partition would have " + std::to_string(next_size) +
                                         " intervals");
  }

  Partition out(params_);
  out.level_ = n + 1;
  out.stride_ = n + 1 + k;
  out.coeffs_.reserve(next_size * out.stride_);
  out.exponents_.reserve(next_size);

  std::vector<std::uint32_t> cursor(out.stride_);
  for (std::size_t i = 0; i < size(); ++i) {
    const auto row = left_coefficients(i);
    std::fill(cursor.begin(), cursor.end(), 0);
    std::copy(row.begin(), row.end(), cursor.begin());
    if (exponents_[i] != n) {
      out.coeffs_.insert(out.coeffs_.end(), cursor.begin(), cursor.end());
      out.exponents_.push_back(exponents_[i]);
      continue;
    }
    for (std::size_t j = 1; j <= k; ++j) {
      for (std::int64_t r = 0; r < params_.L(j); ++r) {
        out.coeffs_.insert(out.coeffs_.end(), cursor.begin(), cursor.end());
        out.exponents_.push_back(static_cast<std::uint32_t>(n + j));
        ++cursor[n + j - 1];
      }
    }
  }
  return out;
}

Partition partition_at_level(const Params& params, std::size_t n) {
  CountsTable counts(params, n);
  if (counts.t(n) > kMaxPartitionSize) {
    throw Error(ErrorCode::TooLarge, "t_" + std::to_string(n) + " exceeds 1e7 intervals");
  }
  Partition p = Partition::trivial(params);
  for (std::size_t level = 0; level < n; ++level) p = p.refine();
  return p;
}

std::vector<double> left_endpoints(const Partition& partition, double beta) {
  std::vector<double> out;
  out.reserve(partition.size());
  for (std::size_t i = 0; i < partition.size(); ++i) {
    out.push_back(partition.left(i).evaluate(beta));
  }
  return out;
}

}  // namespace lsseq
