#include "hzeta/stieltjes.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hzeta/errors.hpp"

namespace hzeta {

namespace {

constexpr double kRadius = 0.9;
constexpr int kDegree = 20;
constexpr int kCheckDegree = 26;
constexpr double kAgreement = 1e-5;

// Taylor coefficients about s = 1 (orders 0..order) of the degree-`degree`
// interpolant of g at Chebyshev nodes s = 1 + R cos(π(k+1/2)/(degree+1)).
std::vector<double> taylor_from_chebyshev(const HurwitzParams& params, int degree, int order) {
  const int nodes = degree + 1;
  std::vector<double> t(nodes), g(nodes);
  for (int k = 0; k < nodes; ++k) {
    t[k] = std::cos(std::numbers::pi * (k + 0.5) / nodes);
    g[k] = zeta_em_regular(1.0 + kRadius * t[k], params);
  }
  // Chebyshev coefficients by the discrete cosine sum.
  std::vector<double> cheb(nodes, 0.0);
  for (int j = 0; j < nodes; ++j) {
    double sum = 0.0;
    for (int k = 0; k < nodes; ++k) {
      sum += g[k] * std::cos(std::numbers::pi * j * (k + 0.5) / nodes);
    }
    cheb[j] = (j == 0 ? 1.0 : 2.0) * sum / nodes;
  }
  // Monomial coefficients of T_j by T_{j+1} = 2t T_j - T_{j-1}; all integers
  // below 2^degree, hence exact.
  std::vector<std::vector<double>> mono(nodes, std::vector<double>(nodes, 0.0));
  mono[0][0] = 1.0;
  if (nodes > 1) {
    mono[1][1] = 1.0;
  }
  for (int j = 1; j + 1 < nodes; ++j) {
    for (int n = 0; n < nodes; ++n) {
      mono[j + 1][n] = (n > 0 ? 2.0 * mono[j][n - 1] : 0.0) - mono[j - 1][n];
    }
  }
  std::vector<double> taylor(order + 1, 0.0);
  double scale = 1.0;
  for (int n = 0; n <= order; ++n) {
    double sum = 0.0;
    for (int j = degree; j >= n; --j) {
      sum += cheb[j] * mono[j][n];
    }
    taylor[n] = sum / scale;
    scale *= kRadius;
  }
  return taylor;
}

}  // namespace

double StieltjesExpansion::evaluate(double s) const {
  const double u = s - 1.0;
  double poly = 0.0;
  for (int n = order; n >= 0; --n) {
    poly = poly * u + coeffs[n];
  }
  return 1.0 / u + poly;
}

StieltjesExpansion stieltjes(double a, int order) {
  if (order < 0 || order > kMaxStieltjesOrder) {
    throw DomainError("stieltjes: order must satisfy 0 <= N <= 8");
  }
  const auto params = HurwitzParams::with(a);
  params.validate();
  auto coeffs = taylor_from_chebyshev(params, kDegree, order);
  const auto check = taylor_from_chebyshev(params, kCheckDegree, order);
  for (int n = 1; n <= order; ++n) {
    if (std::abs(coeffs[n] - check[n]) > kAgreement * std::max(1.0, std::abs(coeffs[n]))) {
      std::ostringstream msg;
      msg << "stieltjes: coefficient " << n << " for a = " << a << " not converged (" << coeffs[n]
          << " vs " << check[n] << ")";
      throw NumericError(msg.str());
    }
  }
  // The constant term is available exactly at s = 1.
  coeffs[0] = zeta_em_regular(1.0, params);
  return {a, order, std::move(coeffs)};
}

double stieltjes_beta_map(const StieltjesExpansion& expansion, int order, double beta) {
  const double u = beta - 1.0;
  double series = 0.0;
  double pw = u * u;
  for (int n = 1; n <= order; ++n) {
    series += expansion.coeffs[n] * pw;
    pw *= u;
  }
  return 1.0 - (1.0 + series) / expansion.coeffs[0];
}

StieltjesBeta beta_via_stieltjes(double a, int order, int max_iter) {
  if (!(a > 0.0 && a < 0.2)) {
    throw DomainError("beta_via_stieltjes: shift parameter must satisfy 0 < a < 0.2");
  }
  if (order < 1 || order > kMaxStieltjesOrder) {
    throw DomainError("beta_via_stieltjes: order must satisfy 1 <= N <= 8");
  }
  const auto expansion = stieltjes(a, order);
  double beta = 1.0 - a;
  for (int it = 1; it <= max_iter; ++it) {
    const double next = stieltjes_beta_map(expansion, order, beta);
    const bool done = std::abs(next - beta) < 1e-12;
    beta = next;
    if (done) {
      const double bound = std::abs(expansion.coeffs[order]) * std::pow(std::abs(beta - 1.0), order + 1) /
                           std::abs(expansion.coeffs[0]);
      return {beta, it, bound};
    }
  }
  std::ostringstream msg;
  msg.precision(17);
  msg << "beta_via_stieltjes: no convergence after " << max_iter << " iterations for a = " << a
      << " (last iterate " << beta << ")";
  throw NumericError(msg.str());
}

}  // namespace hzeta
