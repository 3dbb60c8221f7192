#pragma once

// Independent reference computations shared by the unit and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "lsseq/params.hpp"

namespace lsseq::oracle {

inline const std::vector<std::string>& test_params() {
  static const std::vector<std::string> p{"1,1", "2,1", "3,1", "2,1,1", "3,2,1", "4"};
  return p;
}

// Base-b radical inverse, exact for b a power of two.
inline double radical_inverse(std::uint64_t n, std::uint64_t b) {
  double value = 0.0;
  double scale = 1.0 / static_cast<double>(b);
  while (n > 0) {
    value += static_cast<double>(n % b) * scale;
    n /= b;
    scale /= static_cast<double>(b);
  }
  return value;
}

// Counts rows straight from the splitting rule: the longest l_{n-1,1}
// intervals each become L_1 + ... + L_k pieces, the rest shift one slot.
inline std::vector<std::vector<std::uint64_t>> count_rows(const Params& p, std::size_t n_max) {
  const std::size_t k = p.k();
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<std::uint64_t> row(k, 0);
  row[0] = 1;
  rows.push_back(row);
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<std::uint64_t> next(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      next[i] = (i + 1 < k ? row[i + 1] : 0) + static_cast<std::uint64_t>(p.L(i + 1)) * row[0];
    }
    row = next;
    rows.push_back(row);
  }
  return rows;
}

// #{l <= N : lo - margin <= values[l] < hi - margin}, values indexed from 0.
inline std::uint64_t brute_count(const std::vector<double>& values, std::uint64_t N, double lo,
                                 double hi, double margin = 1e-9) {
  std::uint64_t c = 0;
  for (std::uint64_t l = 0; l <= N; ++l) {
    if (values[l] >= lo - margin && values[l] < hi - margin) ++c;
  }
  return c;
}

}  // namespace lsseq::oracle
