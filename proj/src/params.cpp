#include "lsseq/params.hpp"

#include <charconv>
#include <limits>

#include "lsseq/error.hpp"
#include "lsseq/spectral.hpp"

namespace lsseq {

namespace {

constexpr std::size_t kMaxDegree = 64;
constexpr std::int64_t kMaxCoefficient = std::numeric_limits<std::int32_t>::max();

}  // namespace

Params::Params(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  prefix_.assign(coeffs_.size() + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    prefix_[i + 1] = prefix_[i] + coeffs_[i];
  }
}

Params Params::from_coefficients(std::span<const std::int64_t> coeffs) {
  if (coeffs.empty()) {
    throw Error(ErrorCode::EmptyTuple, "parameter tuple is empty");
  }
  if (coeffs.size() > kMaxDegree) {
    throw Error(ErrorCode::InvalidArgument,
                "parameter tuple longer than " + std::to_string(kMaxDegree));
  }
  std::int64_t total = 0;
  for (std::int64_t c : coeffs) {
    if (c < 0) {
      throw Error(ErrorCode::NegativeCoefficient,
                  "coefficient " + std::to_string(c) + " is negative");
    }
    if (c > kMaxCoefficient) {
      throw Error(ErrorCode::InvalidArgument,
                  "coefficient " + std::to_string(c) + " is too large");
    }
    total += c;
  }
  if (coeffs.front() == 0 || coeffs.back() == 0) {
    throw Error(ErrorCode::ZeroEndpoint, "L_1 and L_k must be nonzero");
  }
  if (total < 2) {
    throw Error(ErrorCode::DegenerateAlphabet,
                "L_1 + ... + L_k must be at least 2");
  }
  return Params(std::vector<std::int64_t>(coeffs.begin(), coeffs.end()));
}

Params Params::parse(std::string_view text) {
  std::vector<std::int64_t> coeffs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view field = text.substr(pos, end - pos);
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) {
      field.remove_prefix(1);
    }
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) {
      field.remove_suffix(1);
    }
    if (field.empty()) {
      if (text.find_first_not_of(" \t") == std::string_view::npos) break;
      throw Error(ErrorCode::InvalidArgument,
                  "empty field in parameter list '" + std::string(text) + "'");
    }
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
      throw Error(ErrorCode::InvalidArgument,
                  "not an integer: '" + std::string(field) + "'");
    }
    coeffs.push_back(value);
    pos = end + 1;
  }
  return from_coefficients(coeffs);
}

bool Params::is_monotone() const noexcept {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] > coeffs_[i - 1]) return false;
  }
  return coeffs_.back() > 0;
}

std::string Params::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coeffs_[i]);
  }
  return out;
}

Params validate_params(std::span<const std::int64_t> coeffs) {
  Params params = Params::from_coefficients(coeffs);
  (void)Spectral::solve(params);
  return params;
}

}  // namespace lsseq
