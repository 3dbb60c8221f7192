#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lsseq/counts.hpp"
#include "lsseq/params.hpp"

namespace lsseq {

struct Digit {
  int epsilon = 0;         // 0 or 1
  std::int64_t eta = 0;    // 0 .. alphabet-2

  friend bool operator==(const Digit&, const Digit&) = default;
};

/// ((eps_n, eta_n), ..., (eps_0, eta_0)), stored most-significant first.
/// The empty expansion represents 0.
class DigitExpansion {
 public:
  DigitExpansion() = default;
  explicit DigitExpansion(std::vector<Digit> msd_first) : digits_(std::move(msd_first)) {}

  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }

  /// Digit at position i, where position 0 is the least significant.
  const Digit& at_position(std::size_t i) const { return digits_.at(digits_.size() - 1 - i); }

  std::span<const Digit> digits() const noexcept { return digits_; }
  std::vector<Digit>& mutable_digits() noexcept { return digits_; }

  /// Digits at positions >= m, re-indexed so that position m becomes 0.
  DigitExpansion shifted(std::size_t m) const;

  /// "(1,2);(1,0)"; empty string for the empty expansion.
  std::string to_string() const;

  /// Inverse of to_string. Throws Error{InvalidArgument}.
  static DigitExpansion parse(std::string_view text);

  friend bool operator==(const DigitExpansion&, const DigitExpansion&) = default;

 private:
  std::vector<Digit> digits_;
};

/// Checks the admissibility rules: leading eps = 1, eta in [0, alphabet-2],
/// eps = 0 implies eta = 0, and eta_i >= L_1+...+L_m - 1 implies
/// eps_{i+m} = 0 for 1 <= m <= k-1. The empty expansion is valid.
bool is_valid_expansion(const DigitExpansion& digits, const Params& params);

/// Greedy expansion of N. N = 0 maps to the empty expansion.
/// Pre: counts covers N (see BasicCountsTable::cover).
template <class Int>
DigitExpansion phi(const Int& N, const BasicCountsTable<Int>& counts);

/// Allocation-free variant of phi for hot loops; `out` is overwritten.
template <class Int>
void phi_into(const Int& N, const BasicCountsTable<Int>& counts, std::vector<Digit>& out);

/// sum_i (eps_i T_i + eta_i l_{i,1}). Throws Error{InvalidExpansion}.
/// Pre: counts built up to level digits.size()-1.
template <class Int>
Int psi(const DigitExpansion& digits, const BasicCountsTable<Int>& counts);

/// The weights T_i by position (index 0 = position 0): T_n = t_n at the top,
/// otherwise T_i = l_{i,1} + ... + l_{i,j+2} where j is the number of
/// consecutive zero eps directly above position i.
template <class Int>
std::vector<Int> position_weights(const DigitExpansion& digits,
                                  const BasicCountsTable<Int>& counts);

/// sum over positions i < m of (eps_i T_i + eta_i l_{i,1}), with the T_i of
/// the full expansion.
template <class Int>
Int truncated_value(const DigitExpansion& digits, std::size_t m,
                    const BasicCountsTable<Int>& counts);

inline constexpr std::size_t kMaxEnumerationLength = 12;

/// Visits every valid expansion of length 1..n_max, by length and then
/// lexicographically (pairs compared as (eps, eta)). Throws Error{TooLarge}
/// for n_max > kMaxEnumerationLength.
void for_each_expansion(const Params& params, std::size_t n_max,
                        const std::function<void(const DigitExpansion&)>& visit);

std::vector<DigitExpansion> enumerate_expansions(const Params& params, std::size_t n_max);

}  // namespace lsseq
