#include "lsseq/counts.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <type_traits>

#include "lsseq/error.hpp"
#include "lsseq/spectral.hpp"

namespace lsseq {

namespace {

template <class Int>
Int checked_add(const Int& a, const Int& b) {
  if constexpr (std::is_integral_v<Int>) {
    Int out;
    if (__builtin_add_overflow(a, b, &out)) {
      throw std::overflow_error("interval count exceeds 64 bits");
    }
    return out;
  } else {
    return a + b;
  }
}

template <class Int>
Int checked_mul(const Int& a, std::int64_t b) {
  if constexpr (std::is_integral_v<Int>) {
    Int out;
    if (__builtin_mul_overflow(a, static_cast<Int>(b), &out)) {
      throw std::overflow_error("interval count exceeds 64 bits");
    }
    return out;
  } else {
    return a * b;
  }
}

}  // namespace

template <class Int>
BasicCountsTable<Int>::BasicCountsTable(Params params, std::size_t n_max)
    : params_(std::move(params)) {
  const std::size_t k = params_.k();
  t_.push_back(Int(1));
  l_.assign(k, Int(0));
  l_[0] = Int(1);
  extend_to(n_max);
}

template <class Int>
void BasicCountsTable<Int>::extend_to(std::size_t n_max) {
  const std::size_t k = params_.k();
  while (t_.size() <= n_max) {
    const std::size_t prev = t_.size() - 1;
    const Int longest = l_[prev * k];
    std::vector<Int> row(k);
    Int total(0);
    // l_{n,i} = l_{n-1,i+1} + L_i l_{n-1,1}
    for (std::size_t i = 0; i < k; ++i) {
      Int next = (i + 1 < k) ? l_[prev * k + i + 1] : Int(0);
      row[i] = checked_add(next, checked_mul(longest, params_.L(i + 1)));
      total = checked_add(total, row[i]);
    }
    l_.insert(l_.end(), row.begin(), row.end());
    t_.push_back(total);
  }
}

template <class Int>
void BasicCountsTable<Int>::cover(const Int& value) {
  while (t_.back() <= value) extend_to(t_.size());
}

template <class Int>
const Int& BasicCountsTable<Int>::l(std::ptrdiff_t n, std::size_t i) const {
  static const Int zero(0);
  if (n < 0 || i > k()) return zero;
  const auto level = static_cast<std::size_t>(n);
  if (i == 0) return t_.at(level);
  if (level >= t_.size()) throw std::out_of_range("counts level not built");
  return l_[level * k() + i - 1];
}

template <class Int>
std::size_t BasicCountsTable<Int>::level_of(const Int& N) const {
  if (N < 1) {
    throw Error(ErrorCode::NonPositiveIndex, "level_of requires N >= 1");
  }
  if (N >= t_.back()) {
    throw std::out_of_range("counts table does not cover index");
  }
  auto it = std::upper_bound(t_.begin(), t_.end(), N);
  return static_cast<std::size_t>(it - t_.begin()) - 1;
}

template <class Int>
Int BasicCountsTable<Int>::head_sum(std::size_t n, std::size_t r) const {
  Int sum(0);
  const std::size_t top = std::min(r, k());
  for (std::size_t i = 1; i <= top; ++i) sum += l(static_cast<std::ptrdiff_t>(n), i);
  return sum;
}

template class BasicCountsTable<BigInt>;
template class BasicCountsTable<std::uint64_t>;

FastCountsTable make_fast_counts(const Params& params) {
  FastCountsTable table(params);
  try {
    for (;;) table.extend_to(table.size());
  } catch (const std::overflow_error&) {
  }
  return table;
}

double closed_form_count(const Spectral& spectral, std::size_t n, std::size_t i) {
  if (i > spectral.k()) return 0.0;
  std::complex<double> sum = 0.0;
  for (std::size_t j = 0; j < spectral.k(); ++j) {
    sum += spectral.lambda(j, i) *
           std::pow(1.0 / spectral.root(j), static_cast<double>(n));
  }
  if (std::abs(sum.imag()) > 1e-6 * std::max(1.0, std::abs(sum.real()))) {
    throw Error(ErrorCode::IllConditioned,
                "closed form has a non-negligible imaginary part");
  }
  return sum.real();
}

}  // namespace lsseq
