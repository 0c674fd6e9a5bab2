#include "hzeta/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hzeta/errors.hpp"
#include "hzeta/hurwitz.hpp"
#include "hzeta/zeros.hpp"

namespace hzeta {

std::vector<double> default_nonvanishing_grid() { return linear_grid(0.005, 0.995, 200); }

NonvanishingReport nonvanishing_scan(double a, std::span<const double> sigma_grid) {
  if (!(a >= 0.5 && a <= 1.0)) {
    throw DomainError("nonvanishing_scan: shift parameter must satisfy 1/2 <= a <= 1");
  }
  NonvanishingReport report;
  report.a = a;
  report.max_value = -std::numeric_limits<double>::infinity();
  for (const double sigma : sigma_grid) {
    const double v = zeta_em(sigma, a).value;
    report.max_value = std::max(report.max_value, v);
    if (!(v < 0.0)) {
      ++report.violations;
    }
    ++report.points;
  }
  return report;
}

NonvanishingReport nonvanishing_scan(double a) {
  const auto grid = default_nonvanishing_grid();
  return nonvanishing_scan(a, grid);
}

int uniqueness_scan(double a, int points) {
  const auto grid = linear_grid(0.01, 0.999, points);
  std::vector<double> values;
  values.reserve(grid.size());
  for (const double sigma : grid) {
    values.push_back(zeta_em(sigma, a).value);
  }
  return count_sign_changes(values);
}

double dirichlet_L_check(int q, std::span<const double> chi, double sigma) {
  if (q < 1 || q > 12) {
    throw DomainError("dirichlet_L_check: modulus must satisfy 1 <= q <= 12");
  }
  if (chi.size() != static_cast<std::size_t>(q)) {
    throw DomainError("dirichlet_L_check: character table length must equal q");
  }
  if (!(sigma > 0.0 && sigma < 1.0)) {
    throw DomainError("dirichlet_L_check: sigma must satisfy 0 < sigma < 1");
  }
  double sum = 0.0;
  for (int r = 1; r <= q; ++r) {
    const double c = chi[static_cast<std::size_t>(r - 1)];
    if (c != 0.0) {
      sum += c * zeta_em(sigma, static_cast<double>(r) / q).value;
    }
  }
  return std::exp(-sigma * std::log(static_cast<double>(q))) * sum;
}

}  // namespace hzeta
