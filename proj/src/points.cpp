#include "lsseq/points.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lsseq/error.hpp"

namespace lsseq {

namespace {

// sum_{m>=1} coeffs[m-1] beta^m, descending powers.
template <class Coeff>
double horner(std::span<const Coeff> coeffs, double beta) noexcept {
  double v = 0.0;
  for (std::size_t m = coeffs.size(); m >= 1; --m) {
    v = (v + static_cast<double>(coeffs[m - 1])) * beta;
  }
  return v;
}

void two_sum(double a, double b, double& s, double& e) noexcept {
  s = a + b;
  const double bb = s - a;
  e = (a - (s - bb)) + (b - bb);
}

void two_prod(double a, double b, double& p, double& e) noexcept {
  p = a * b;
  e = std::fma(a, b, -p);
}

// Accumulates the contributions of one digit expansion into coeffs, indexed
// by power - 1.
template <class Coeff>
void accumulate_digits(std::span<const Digit> msd_first, const Params& params,
                       std::vector<Coeff>& coeffs) {
  const std::size_t top = msd_first.size() - 1;
  const std::size_t k = params.k();
  coeffs.assign(msd_first.size() + k, Coeff(0));
  for (std::size_t slot = 0; slot < msd_first.size(); ++slot) {
    const std::size_t position = top - slot;
    const std::int64_t d = msd_first[slot].epsilon + msd_first[slot].eta;
    if (d == 0) continue;
    for (std::size_t j = 1; j <= k; ++j) {
      coeffs[position + j - 1] += static_cast<Coeff>(digit_piece(params, d, j));
    }
  }
}

template <class Int>
void fill_values(const Params& params, double beta, const BasicCountsTable<Int>& counts,
                 std::uint64_t start, std::uint64_t end, double* out) {
  const auto first = static_cast<std::int64_t>(start);
  const auto last = static_cast<std::int64_t>(end);
#pragma omp parallel
  {
    std::vector<Digit> digits;
    std::vector<std::uint32_t> coeffs;
#pragma omp for schedule(static)
    for (std::int64_t idx = first; idx < last; ++idx) {
      phi_into(Int(static_cast<std::uint64_t>(idx)), counts, digits);
      double value = 0.0;
      if (!digits.empty()) {
        accumulate_digits<std::uint32_t>(digits, params, coeffs);
        value = horner<std::uint32_t>(coeffs, beta);
      }
      out[idx - first] = value;
    }
  }
}

}  // namespace

BetaPolynomial BetaPolynomial::from_coefficients(std::span<const std::uint32_t> by_power) {
  BetaPolynomial p;
  p.coeffs_.assign(by_power.begin(), by_power.end());
  p.trim();
  return p;
}

void BetaPolynomial::add(std::size_t power, std::uint32_t amount) {
  if (power == 0) throw Error(ErrorCode::InvalidArgument, "beta polynomial powers start at 1");
  if (amount == 0) return;
  if (coeffs_.size() < power) coeffs_.resize(power, 0);
  coeffs_[power - 1] += amount;
}

std::uint32_t BetaPolynomial::coefficient(std::size_t power) const noexcept {
  return (power >= 1 && power <= coeffs_.size()) ? coeffs_[power - 1] : 0;
}

double BetaPolynomial::evaluate(double beta) const noexcept {
  return horner<std::uint32_t>(coeffs_, beta);
}

double BetaPolynomial::evaluate_compensated(double beta) const noexcept {
  double s = 0.0;
  double c = 0.0;
  for (std::size_t m = coeffs_.size(); m >= 1; --m) {
    double p, pi, sigma;
    two_sum(s, static_cast<double>(coeffs_[m - 1]), s, sigma);
    c += sigma;
    two_prod(s, beta, p, pi);
    s = p;
    c = c * beta + pi;
  }
  return s + c;
}

std::string BetaPolynomial::to_string() const {
  std::string out;
  for (std::size_t m = 1; m <= coeffs_.size(); ++m) {
    if (coeffs_[m - 1] == 0) continue;
    if (!out.empty()) out += ';';
    out += std::to_string(m) + ':' + std::to_string(coeffs_[m - 1]);
  }
  return out;
}

void BetaPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint32_t digit_piece(const Params& params, std::int64_t d, std::size_t j) noexcept {
  // Pieces of the split are laid out L_1 of length beta, then L_2 of beta^2,
  // ...; a digit d lands after d pieces, so it takes
  // clamp(d - (L_1+...+L_{j-1}), 0, L_j) steps of each length beta^j.
  const std::int64_t over = d - params.partial_sum(j - 1);
  if (over <= 0) return 0;
  return static_cast<std::uint32_t>(std::min(over, params.L(j)));
}

BetaPolynomial point_coefficients(const DigitExpansion& digits, const Params& params) {
  if (digits.empty()) return BetaPolynomial();
  std::vector<std::uint32_t> coeffs;
  accumulate_digits<std::uint32_t>(digits.digits(), params, coeffs);
  return BetaPolynomial::from_coefficients(coeffs);
}

LsSequence::LsSequence(const Params& params) : LsSequence(Spectral::solve(params)) {}

LsSequence::LsSequence(Spectral spectral)
    : spectral_(std::move(spectral)), counts_(spectral_.params(), 1) {}

void LsSequence::reserve(const BigInt& max_index) { counts_.cover(max_index); }

DigitExpansion LsSequence::digits(const BigInt& N) {
  reserve(N);
  return phi(N, counts_);
}

BetaPoint LsSequence::point(const BigInt& N) {
  BetaPoint out;
  out.index = N;
  out.coeffs = point_coefficients(digits(N), params());
  out.value = out.coeffs.evaluate(beta());
  return out;
}

std::vector<BetaPoint> LsSequence::point_range(std::uint64_t start, std::uint64_t end) {
  std::vector<BetaPoint> out;
  if (end <= start) return out;
  out.reserve(end - start);
  for (std::uint64_t n = start; n < end; ++n) out.push_back(point(BigInt(n)));
  return out;
}

std::vector<double> LsSequence::values_serial(std::uint64_t start, std::uint64_t end) {
  std::vector<double> out;
  if (end <= start) return out;
  out.reserve(end - start);
  for (std::uint64_t n = start; n < end; ++n) out.push_back(point(BigInt(n)).value);
  return out;
}

const FastCountsTable& LsSequence::fast_counts() {
  if (!fast_) fast_.emplace(make_fast_counts(params()));
  return *fast_;
}

std::vector<double> LsSequence::values(std::uint64_t start, std::uint64_t end) {
  std::vector<double> out;
  if (end <= start) return out;
  out.resize(end - start);
  const FastCountsTable& fast = fast_counts();
  if (end - 1 < fast.t(fast.max_level())) {
    fill_values(params(), beta(), fast, start, end, out.data());
  } else {
    reserve(BigInt(end - 1));
    fill_values(params(), beta(), counts_, start, end, out.data());
  }
  return out;
}

bool LsSequence::is_elementary(std::uint64_t x, std::size_t m) {
  if (x == 0) return true;
  // xi^x is born as the left end of a piece of length beta^e; every later split
  // keeps it as the left end of a first piece, one power shorter per level.
  const DigitExpansion d = digits(BigInt(x));
  const std::int64_t top = 1 + d.digits().front().eta;
  std::size_t type = 1;
  while (top >= params().partial_sum(type)) ++type;
  return d.size() - 1 + type <= m;
}

ElementaryInterval LsSequence::elementary_interval(std::uint64_t x, std::size_t m) {
  if (!is_elementary(x, m)) {
    throw Error(ErrorCode::NotElementary,
                "I_" + std::to_string(x) + "^(" + std::to_string(m) + ") is not elementary");
  }
  ElementaryInterval out;
  out.x = x;
  out.m = m;
  out.left = point(BigInt(x));
  out.right_value = out.left.value + std::pow(beta(), static_cast<double>(m));
  return out;
}

BigInt LsSequence::count_in_elementary(std::uint64_t x, std::size_t m, const BigInt& N) {
  if (!is_elementary(x, m)) {
    throw Error(ErrorCode::NotElementary,
                "I_" + std::to_string(x) + "^(" + std::to_string(m) + ") is not elementary");
  }
  const DigitExpansion d = digits(N);
  const auto low = d.digits().last(std::min(m, d.size()));
  auto first = std::find_if(low.begin(), low.end(), [](const Digit& g) { return g.epsilon; });
  const DigitExpansion own(std::vector<Digit>(first, low.end()));
  if (own != digits(BigInt(x))) {
    throw Error(ErrorCode::NotMember, "point is not in I_" + std::to_string(x) + "^(" +
                                          std::to_string(m) + ")");
  }
  return psi(d.shifted(m), counts_) + 1;
}

double LsSequence::local_remainder(std::uint64_t x, std::size_t m, const BigInt& N) {
  const BigInt count = count_in_elementary(x, m, N);
  return count.convert_to<double>() -
         N.convert_to<double>() * std::pow(beta(), static_cast<double>(m));
}

}  // namespace lsseq
