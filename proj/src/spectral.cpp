#include "lsseq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "lsseq/counts.hpp"
#include "lsseq/error.hpp"

namespace lsseq {

namespace {

using cplx = std::complex<double>;

// Rows of the lambda systems are checked up to n = k + kResidualExtraLevels.
constexpr std::size_t kResidualExtraLevels = 10;

double refine_beta(const Params& params) {
  // p is increasing on (0,1) with p(0) = -1 and p(1) = sum L_i - 1 >= 1.
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (pattern_polynomial(params, mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 4; ++it) {
    double p = 0.0;
    double dp = 0.0;
    for (std::size_t i = params.k(); i >= 1; --i) {
      dp = dp * x + p;
      p = p * x + static_cast<double>(params.L(i));
    }
    dp = dp * x + p;
    p = p * x - 1.0;
    if (dp == 0.0) break;
    const double next = x - p / dp;
    if (!(next > 0.0 && next < 1.0)) break;
    if (std::abs(pattern_polynomial(params, next)) > std::abs(p)) break;
    x = next;
  }
  return x;
}

// q(z) = z^k - L_1 z^{k-1} - ... - L_k, whose roots are the 1/beta_j.
void characteristic(const Params& params, cplx z, cplx& q, cplx& dq) {
  q = 1.0;
  dq = 0.0;
  for (std::size_t i = 1; i <= params.k(); ++i) {
    dq = dq * z + q;
    q = q * z - static_cast<double>(params.L(i));
  }
}

cplx polish(const Params& params, cplx z) {
  for (int it = 0; it < 6; ++it) {
    cplx q, dq;
    characteristic(params, z, q, dq);
    if (std::abs(dq) == 0.0) break;
    const cplx next = z - q / dq;
    cplx qn, dqn;
    characteristic(params, next, qn, dqn);
    if (std::abs(qn) >= std::abs(q)) break;
    z = next;
  }
  return z;
}

std::vector<cplx> conjugate_roots(const Params& params, double beta) {
  const std::size_t k = params.k();
  if (k == 1) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    companion(0, static_cast<Eigen::Index>(i)) = static_cast<double>(params.L(i + 1));
  }
  for (std::size_t i = 1; i < k; ++i) {
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::IllConditioned, "companion eigenvalue solve failed");
  }
  std::vector<cplx> inverse_roots;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    inverse_roots.push_back(solver.eigenvalues()[i]);
  }
  // Drop the eigenvalue matching 1/beta.
  const cplx dominant(1.0 / beta, 0.0);
  auto closest = std::min_element(
      inverse_roots.begin(), inverse_roots.end(),
      [&](cplx a, cplx b) { return std::abs(a - dominant) < std::abs(b - dominant); });
  inverse_roots.erase(closest);

  std::vector<cplx> roots;
  for (cplx r : inverse_roots) {
    const double scale = std::max(1.0, std::abs(r));
    if (std::abs(r.imag()) <= 1e-12 * scale) {
      r = polish(params, cplx(r.real(), 0.0));
      roots.push_back(cplx(1.0 / r.real(), 0.0));
    } else if (r.imag() > 0.0) {
      r = polish(params, r);
      const cplx b = 1.0 / r;
      roots.push_back(b);
      roots.push_back(std::conj(b));
    }
  }
  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

}  // namespace

double pattern_polynomial(const Params& params, double x) noexcept {
  double p = 0.0;
  for (std::size_t i = params.k(); i >= 1; --i) {
    p = p * x + static_cast<double>(params.L(i));
  }
  return p * x - 1.0;
}

Spectral::Spectral(Params params, std::vector<std::complex<double>> roots)
    : params_(std::move(params)), roots_(std::move(roots)) {
  const std::size_t k = params_.k();
  const std::size_t levels = k + kResidualExtraLevels;
  CountsTable counts(params_, levels);

  using Matrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<cplx, Eigen::Dynamic, 1>;
  const auto dim = static_cast<Eigen::Index>(k);
  Matrix vandermonde(dim, dim);
  for (Eigen::Index n = 0; n < dim; ++n) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      vandermonde(n, j) = std::pow(1.0 / roots_[static_cast<std::size_t>(j)],
                                   static_cast<double>(n));
    }
  }
  Eigen::PartialPivLU<Matrix> lu(vandermonde);

  lambdas_.assign(k * (k + 1), cplx(0.0, 0.0));
  for (std::size_t i = 0; i <= k; ++i) {
    Vector rhs(dim);
    for (Eigen::Index n = 0; n < dim; ++n) {
      rhs(n) = counts.l(n, i).convert_to<double>();
    }
    Vector sol = lu.solve(rhs);
    for (std::size_t j = 0; j < k; ++j) {
      lambdas_[j * (k + 1) + i] = sol(static_cast<Eigen::Index>(j));
    }
  }

  residual_ = 0.0;
  for (std::size_t n = 0; n <= levels; ++n) {
    for (std::size_t i = 0; i <= k; ++i) {
      cplx sum = 0.0;
      for (std::size_t j = 0; j < k; ++j) {
        sum += lambda(j, i) * std::pow(1.0 / roots_[j], static_cast<double>(n));
      }
      const double exact = counts.l(static_cast<std::ptrdiff_t>(n), i).convert_to<double>();
      const double err = std::abs(sum - cplx(exact, 0.0)) / std::max(1.0, exact);
      if (!(err <= residual_)) residual_ = err;  // NaN propagates
    }
  }
}

Spectral Spectral::solve(const Params& params) {
  const double beta = refine_beta(params);
  if (!(std::abs(pattern_polynomial(params, beta)) <= kRootResidualTol)) {
    throw Error(ErrorCode::IllConditioned, "could not refine the root in (0,1)");
  }
  std::vector<cplx> roots{cplx(beta, 0.0)};
  for (cplx r : conjugate_roots(params, beta)) roots.push_back(r);

  for (std::size_t a = 0; a < roots.size(); ++a) {
    for (std::size_t b = a + 1; b < roots.size(); ++b) {
      if (std::abs(roots[a] - roots[b]) <= kRootSeparation) {
        throw Error(ErrorCode::MultipleRoot,
                    "pattern polynomial of (" + params.to_string() +
                        ") has a multiple root");
      }
    }
  }
  for (std::size_t j = 1; j < roots.size(); ++j) {
    if (!(std::abs(roots[j]) > 1.0 + kUnitCircleMargin)) {
      throw Error(ErrorCode::RootConditionViolated,
                  "root of modulus " + std::to_string(std::abs(roots[j])) +
                      " <= 1 for (" + params.to_string() + ")");
    }
  }

  Spectral spectral(params, std::move(roots));
  if (!(spectral.residual() <= kLambdaResidualTol)) {
    throw Error(ErrorCode::IllConditioned,
                "lambda reconstruction residual " +
                    std::to_string(spectral.residual()) + " exceeds tolerance");
  }
  return spectral;
}

Spectral Spectral::from_roots(const Params& params,
                              std::vector<std::complex<double>> roots) {
  if (roots.size() != params.k()) {
    throw Error(ErrorCode::InvalidArgument, "expected k roots");
  }
  return Spectral(params, std::move(roots));
}

double Spectral::min_conjugate_modulus() const noexcept {
  double m = std::numeric_limits<double>::infinity();
  for (cplx r : conjugates()) m = std::min(m, std::abs(r));
  return m;
}

Spectral round_roots(const Spectral& spectral, int decimals) {
  const double scale = std::pow(10.0, decimals);
  std::vector<cplx> rounded;
  for (cplx r : spectral.roots()) {
    rounded.emplace_back(std::round(r.real() * scale) / scale,
                         std::round(r.imag() * scale) / scale);
  }
  return Spectral::from_roots(spectral.params(), std::move(rounded));
}

}  // namespace lsseq
