#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lsseq/params.hpp"

namespace lsseq {

inline constexpr std::uint64_t kMaxDiscrepancyPoints = 10'000'000;
inline constexpr std::size_t kMaxBruteForcePoints = 500;

/// d_plus = max_i (i/N - x_(i)), d_minus = max_i (x_(i) - (i-1)/N) over the
/// sorted values; star = max(d_plus, d_minus), extreme = d_plus + d_minus.
struct DiscrepancyReport {
  std::uint64_t n_points = 0;
  double star = 0.0;
  double extreme = 0.0;
  double d_plus = 0.0;
  double d_minus = 0.0;
};

/// Sorts a copy of `values` and scans it in parallel.
/// Throws Error{EmptySet, OutOfRange, TooLarge}.
DiscrepancyReport discrepancy_report(std::span<const double> values);
/// Same, sorting in place to avoid the copy.
DiscrepancyReport discrepancy_report_inplace(std::vector<double>& values);
/// Single-threaded scan; reference for discrepancy_report.
DiscrepancyReport discrepancy_report_serial(std::span<const double> values);

double star_discrepancy(std::span<const double> values);
double extreme_discrepancy(std::span<const double> values);

struct BruteForceDiscrepancy {
  double star = 0.0;
  double extreme = 0.0;
};

/// Direct supremum over all critical interval endpoints, O(N^2 log N).
/// Throws Error{TooLarge} above 500 points.
BruteForceDiscrepancy brute_force_discrepancy(std::span<const double> values);

/// Star discrepancy of the t_n left endpoints of the level-n partition.
double partition_discrepancy(const Params& params, std::size_t n);

/// Extremes over b of #{endpoints < b}/t_n - b for the level-n partition.
struct SignedDeviation {
  double max = 0.0;
  double min = 0.0;
};
SignedDeviation partition_signed_deviation(const Params& params, std::size_t n);

}  // namespace lsseq
