#include "lsseq/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lsseq/error.hpp"
#include "lsseq/partition.hpp"
#include "lsseq/spectral.hpp"

namespace lsseq {

namespace {

void check_input(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::EmptySet, "no points");
  if (values.size() > kMaxDiscrepancyPoints) {
    throw Error(ErrorCode::TooLarge, std::to_string(values.size()) + " points exceed 1e7");
  }
  for (double v : values) {
    if (!(v >= 0.0 && v < 1.0)) {
      throw Error(ErrorCode::OutOfRange, "value " + std::to_string(v) + " outside [0,1)");
    }
  }
}

DiscrepancyReport finish(std::size_t n, double d_plus, double d_minus) {
  DiscrepancyReport r;
  r.n_points = n;
  r.d_plus = d_plus;
  r.d_minus = d_minus;
  r.star = std::max(d_plus, d_minus);
  r.extreme = d_plus + d_minus;
  return r;
}

DiscrepancyReport scan_parallel(std::span<const double> sorted) {
  const auto n = static_cast<std::int64_t>(sorted.size());
  const double inv = 1.0 / static_cast<double>(n);
  double d_plus = -1.0;
  double d_minus = -1.0;
#pragma omp parallel for reduction(max : d_plus, d_minus) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const double x = sorted[static_cast<std::size_t>(i)];
    d_plus = std::max(d_plus, static_cast<double>(i + 1) * inv - x);
    d_minus = std::max(d_minus, x - static_cast<double>(i) * inv);
  }
  return finish(sorted.size(), d_plus, d_minus);
}

struct Endpoint {
  double value;
  bool plus;  // right limit value+
};

// #{x : a <= x < b} for sorted x.
std::size_t count_between(std::span<const double> sorted, Endpoint a, Endpoint b) {
  const auto lo = a.plus ? std::upper_bound(sorted.begin(), sorted.end(), a.value)
                         : std::lower_bound(sorted.begin(), sorted.end(), a.value);
  const auto hi = b.plus ? std::upper_bound(sorted.begin(), sorted.end(), b.value)
                         : std::lower_bound(sorted.begin(), sorted.end(), b.value);
  return hi > lo ? static_cast<std::size_t>(hi - lo) : 0;
}

}  // namespace

DiscrepancyReport discrepancy_report(std::span<const double> values) {
  check_input(values);
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return scan_parallel(sorted);
}

DiscrepancyReport discrepancy_report_inplace(std::vector<double>& values) {
  check_input(values);
  std::sort(values.begin(), values.end());
  return scan_parallel(values);
}

DiscrepancyReport discrepancy_report_serial(std::span<const double> values) {
  check_input(values);
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double inv = 1.0 / static_cast<double>(sorted.size());
  double d_plus = -1.0;
  double d_minus = -1.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    d_plus = std::max(d_plus, static_cast<double>(i + 1) * inv - sorted[i]);
    d_minus = std::max(d_minus, sorted[i] - static_cast<double>(i) * inv);
  }
  return finish(sorted.size(), d_plus, d_minus);
}

double star_discrepancy(std::span<const double> values) {
  return discrepancy_report(values).star;
}

double extreme_discrepancy(std::span<const double> values) {
  return discrepancy_report(values).extreme;
}

BruteForceDiscrepancy brute_force_discrepancy(std::span<const double> values) {
  if (values.size() > kMaxBruteForcePoints) {
    throw Error(ErrorCode::TooLarge, "brute force limited to 500 points");
  }
  check_input(values);
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());

  std::vector<Endpoint> ends{{0.0, false}, {1.0, false}};
  for (double x : sorted) {
    ends.push_back({x, false});
    ends.push_back({x, true});
  }
  auto deviation = [&](Endpoint a, Endpoint b) {
    return std::abs(static_cast<double>(count_between(sorted, a, b)) / n - (b.value - a.value));
  };

  BruteForceDiscrepancy out;
  for (const Endpoint& b : ends) {
    out.star = std::max(out.star, deviation({0.0, false}, b));
    for (const Endpoint& a : ends) {
      if (a.value > b.value || (a.value == b.value && a.plus && !b.plus)) continue;
      out.extreme = std::max(out.extreme, deviation(a, b));
    }
  }
  return out;
}

double partition_discrepancy(const Params& params, std::size_t n) {
  const Spectral spectral = Spectral::solve(params);
  return star_discrepancy(left_endpoints(partition_at_level(params, n), spectral.beta()));
}

SignedDeviation partition_signed_deviation(const Params& params, std::size_t n) {
  const Spectral spectral = Spectral::solve(params);
  const DiscrepancyReport r =
      discrepancy_report(left_endpoints(partition_at_level(params, n), spectral.beta()));
  // b = 0 and b = 1 both give deviation 0.
  return {std::max(0.0, r.d_plus), std::min(0.0, -r.d_minus)};
}

}  // namespace lsseq
