#include "lsseq/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "lsseq/counts.hpp"
#include "lsseq/error.hpp"

namespace lsseq {

namespace {

double golden_beta() { return (std::sqrt(5.0) - 1.0) / 2.0; }

double classical_main(const ClassicalIngredients& c) {
  const double f = static_cast<double>(2 * c.L + c.S - 2);
  return f * (c.r_tilde / (1.0 - static_cast<double>(c.S) * c.beta) + 1.0);
}

}  // namespace

ClassicalIngredients classical_ingredients(std::int64_t L, std::int64_t S) {
  if (L < 1 || S < 1) {
    throw Error(ErrorCode::InvalidClassicalParams,
                "need L >= 1 and S >= 1, got (" + std::to_string(L) + "," + std::to_string(S) +
                    ")");
  }
  ClassicalIngredients c;
  c.L = L;
  c.S = S;
  const double l = static_cast<double>(L);
  const double s = static_cast<double>(S);
  const double root = std::sqrt(l * l + 4.0 * s);
  c.beta = (-l + root) / (2.0 * s);
  c.tau1 = (-l - 2.0 * s + root) / (2.0 * root);
  c.lambda0 = (l + root) / (2.0 * root);
  c.lambda1 = (-l + root) / (2.0 * root);
  c.r_tilde = std::max(std::abs(c.tau1),
                       std::abs(c.tau1 + static_cast<double>(L + S - 2) * c.lambda1));
  if (!(s * c.beta < 1.0)) {
    throw Error(ErrorCode::InvalidClassicalParams, "need S <= L, otherwise S beta >= 1");
  }
  return c;
}

GeneralizedIngredients generalized_ingredients(const Spectral& spectral) {
  GeneralizedIngredients g{spectral, {}, 0.0};
  const std::size_t k = spectral.k();
  const double tail = static_cast<double>(spectral.params().alphabet() - 2);
  g.r_tilde = 1.0 + std::abs(spectral.lambda(0, 0));
  for (std::size_t j = 1; j < k; ++j) {
    const double shrink = 1.0 - 1.0 / std::abs(spectral.root(j));
    double best = -std::numeric_limits<double>::infinity();
    double head = std::abs(spectral.lambda(j, 1));
    for (std::size_t ell = 2; ell <= k; ++ell) {
      head += std::abs(spectral.lambda(j, ell));
      best = std::max(best, (head + tail * std::abs(spectral.lambda(j, 1))) / shrink);
    }
    g.Lambda.push_back(best);
    g.r_tilde += 2.0 * best + std::abs(spectral.lambda(j, 0));
  }
  return g;
}

std::string_view to_string(BoundKind kind) noexcept {
  return kind == BoundKind::Classical ? "classical" : "generalized";
}

double BoundReport::log_term(double N) const noexcept {
  return kind == BoundKind::Classical ? std::log(N) : std::log(N + 1.0);
}

double BoundReport::value_at(double N) const noexcept {
  return (main_coeff * log_term(N) + additive_coeff) / N;
}

BoundReport classical_bound(std::int64_t L, std::int64_t S) {
  const ClassicalIngredients c = classical_ingredients(L, S);
  const double log_beta = std::abs(std::log(c.beta));
  BoundReport r;
  r.kind = BoundKind::Classical;
  r.main_coeff = classical_main(c) / log_beta;
  r.additive_coeff = classical_main(c) + 2.0;
  r.r_tilde = c.r_tilde;
  r.beta = c.beta;
  r.n0 = 2;
  return r;
}

std::uint64_t generalized_threshold(const Spectral& spectral) {
  const double beta = spectral.beta();
  const double lead = std::abs(spectral.lambda(0, 0));
  CountsTable counts(spectral.params(), 1);
  std::size_t first_good = 0;
  for (std::size_t n = 0;; ++n) {
    double tail = 0.0;
    for (std::size_t j = 1; j < spectral.k(); ++j) {
      tail += std::abs(spectral.lambda(j, 0)) *
              std::pow(std::abs(spectral.root(j)), -static_cast<double>(n));
    }
    counts.extend_to(n);
    const double t = counts.t(n).convert_to<double>();
    if (lead * std::pow(beta, -static_cast<double>(n)) - 1.0 > t) first_good = n + 1;
    if (tail < 1.0 && n >= first_good) break;
    if (n > 4096) throw Error(ErrorCode::IllConditioned, "threshold scan did not settle");
  }
  counts.extend_to(first_good);
  const BigInt& t = counts.t(first_good);
  if (t > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::TooLarge, "threshold does not fit 64 bits");
  }
  return t.convert_to<std::uint64_t>();
}

BoundReport generalized_bound(const Spectral& spectral) {
  const GeneralizedIngredients g = generalized_ingredients(spectral);
  const Params& p = spectral.params();
  const double beta = spectral.beta();
  const double factor = static_cast<double>(p.alphabet() + p.L(1) - 2);
  BoundReport r;
  r.kind = BoundKind::Generalized;
  r.main_coeff = factor * g.r_tilde / std::abs(std::log(beta));
  r.additive_coeff =
      r.main_coeff *
      -std::log(std::abs(spectral.lambda(0, 0)) * std::pow(beta, static_cast<double>(p.k())));
  r.r_tilde = g.r_tilde;
  r.beta = beta;
  r.n0 = generalized_threshold(spectral);
  return r;
}

BoundReport generalized_bound(const Params& params) {
  return generalized_bound(Spectral::solve(params));
}

double asymptotic_ratio(std::int64_t L, std::int64_t S) {
  if (L < 2) throw Error(ErrorCode::InvalidClassicalParams, "asymptotic ratio needs L >= 2");
  const double l = static_cast<double>(L);
  return classical_bound(L, S).main_coeff / (2.0 * l / std::log(l));
}

double kakutani_deviation(std::size_t n) {
  const double b = golden_beta();
  const double s = std::pow(-b, static_cast<double>(n));
  const double bn = std::pow(b, static_cast<double>(n));
  return (b - 1.0) / (1.0 + b * b) *
         (b * b * (1.0 - s) - b + s * bn * (1.0 + b) - s);
}

double kakutani_deviation_limit() {
  const double b = golden_beta();
  return (b - 1.0) * (b * b - b) / (1.0 + b * b);
}

double fibonacci_star_coefficient() {
  return 2.0 * kFibonacciEvenUpper / std::abs(std::log(golden_beta()));
}

}  // namespace lsseq
