#include "hzeta/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "hzeta/checks.hpp"
#include "hzeta/errors.hpp"
#include "hzeta/hurwitz.hpp"
#include "hzeta/kernel.hpp"
#include "hzeta/mellin.hpp"
#include "hzeta/special_fn.hpp"
#include "hzeta/stieltjes.hpp"
#include "hzeta/zeros.hpp"

namespace hzeta {

namespace {

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

// Interior points of an equispaced partition of [lo, hi] into n+1 pieces.
std::vector<double> interior_grid(double lo, double hi, int n) {
  auto g = linear_grid(lo, hi, n + 2);
  return {g.begin() + 1, g.end() - 1};
}

std::vector<double> resolve_grid(const SuiteGrid& grid, std::vector<double> fallback, double lo,
                                 double hi, bool lo_open, bool hi_open, const char* domain) {
  if (!grid.a_min && !grid.a_max && !grid.points) {
    return fallback;
  }
  const double a_min = grid.a_min.value_or(fallback.front());
  const double a_max = grid.a_max.value_or(fallback.back());
  const int points = grid.points.value_or(static_cast<int>(fallback.size()));
  const bool lo_ok = lo_open ? a_min > lo : a_min >= lo;
  const bool hi_ok = hi_open ? a_max < hi : a_max <= hi;
  if (!(lo_ok && hi_ok && a_min <= a_max)) {
    throw DomainError(std::string("a-grid must satisfy ") + domain + " with a-min <= a-max");
  }
  if (points < 1) {
    throw DomainError("points must satisfy points >= 1");
  }
  return grid.log_spaced ? log_grid(a_min, a_max, points) : linear_grid(a_min, a_max, points);
}

SuiteReport nonvanishing(const SuiteGrid& grid) {
  SuiteReport r{"nonvanishing", {}};
  const auto as = resolve_grid(grid, {0.5, 0.6, 0.75, 0.9, 1.0}, 0.5, 1.0, false, false, "1/2 <= a <= 1");
  for (const double a : as) {
    const auto rep = nonvanishing_scan(a);
    r.cases.push_back({"a=" + fmt(a),
                       "max zeta=" + fmt(rep.max_value) + " violations=" + std::to_string(rep.violations) +
                           "/" + std::to_string(rep.points),
                       rep.passed()});
  }
  return r;
}

SuiteReport uniqueness(const SuiteGrid& grid) {
  SuiteReport r{"uniqueness", {}};
  const auto as = resolve_grid(grid, interior_grid(0.01, 0.49, 30), 0.01, 0.49, false, false,
                               "0.01 <= a <= 0.49");
  for (const double a : as) {
    const int changes = uniqueness_scan(a);
    const auto zero = find_beta(a);
    const bool ok = changes == 1 && zero.dsigma < 0.0 && std::abs(zero.dsigma) > kMinZeroSlope &&
                    zero.residual <= 1e-12 * std::max(1.0, std::abs(zero.dsigma));
    r.cases.push_back({"a=" + fmt(a),
                       "sign changes=" + std::to_string(changes) + " beta=" + fmt(zero.beta) +
                           " dsigma=" + fmt(zero.dsigma) + " residual=" + fmt(zero.residual),
                       ok});
  }
  return r;
}

SuiteReport monotonicity(const SuiteGrid& grid) {
  SuiteReport r{"monotonicity", {}};
  const auto as = resolve_grid(grid, interior_grid(0.02, 0.48, 20), 0.0, 0.5, true, true, "0 < a < 1/2");
  const auto sigmas = linear_grid(0.05, 0.95, 50);
  for (const double a : as) {
    const double x0 = find_x0(a).x0;
    int bad = 0;
    double prev = scaled_gamma_zeta(sigmas.front(), a, x0);
    for (std::size_t i = 1; i < sigmas.size(); ++i) {
      const double cur = scaled_gamma_zeta(sigmas[i], a, x0);
      if (!(cur - prev < 0.0)) {
        ++bad;
      }
      prev = cur;
    }
    r.cases.push_back({"a=" + fmt(a), "x0=" + fmt(x0) + " non-decreasing steps=" + std::to_string(bad),
                       bad == 0});
  }
  return r;
}

SuiteReport sign_structure(const SuiteGrid& grid) {
  SuiteReport r{"sign-structure", {}};
  const auto as = resolve_grid(grid, interior_grid(0.01, 0.49, 50), 0.0, 0.5, true, true, "0 < a < 1/2");
  for (const double a : as) {
    const auto profile = find_x0(a);
    const int bad = profile.violations();
    r.cases.push_back({"a=" + fmt(a),
                       "x0=" + fmt(profile.x0) + " violations=" + std::to_string(bad) + "/" +
                           std::to_string(profile.grid_checked.size()),
                       bad == 0});
  }
  return r;
}

SuiteReport asymptotic(const SuiteGrid& grid) {
  SuiteReport r{"asymptotic", {}};
  auto as = resolve_grid(grid, {1e-2, 3e-3, 1e-3, 3e-4, 1e-4}, 1e-6, 0.4999, false, false,
                         "1e-6 <= a <= 0.4999");
  std::sort(as.begin(), as.end(), std::greater<>());
  const auto cmp = asym_compare(as);
  for (std::size_t i = 0; i < cmp.rows.size(); ++i) {
    const auto& row = cmp.rows[i];
    const auto& res = cmp.residuals[i];
    bool ok = std::abs(row.normalized) <= kNormalizedDefectBound &&
              std::abs(res.basic) <= kBasicResidualBound && std::abs(res.second) <= kSecondResidualBound;
    if (i > 0) {
      ok = ok && std::abs(row.defect) < std::abs(cmp.rows[i - 1].defect);
    }
    r.cases.push_back({"a=" + fmt(row.a),
                       "normalized=" + fmt(row.normalized) + " basic=" + fmt(res.basic) +
                           " second=" + fmt(res.second),
                       ok});
  }
  return r;
}

SuiteReport representation(const SuiteGrid& grid) {
  SuiteReport r{"representation", {}};
  const auto as = resolve_grid(grid, linear_grid(0.05, 1.0, 10), 0.0, 1.0, true, false, "0 < a <= 1");
  const auto sigmas = linear_grid(0.1, 0.9, 10);
  for (const double a : as) {
    double worst = 0.0;
    for (const double sigma : sigmas) {
      const double quad = mellin_gamma_zeta(sigma, a).value;
      const double direct = gamma(sigma) * zeta_em(sigma, a).value;
      worst = std::max(worst, std::abs(quad - direct));
    }
    r.cases.push_back({"a=" + fmt(a), "max |quadrature - gamma*zeta|=" + fmt(worst), worst <= 1e-8});
  }
  return r;
}

SuiteReport stieltjes_suite(const SuiteGrid& grid) {
  SuiteReport r{"stieltjes", {}};
  const auto as = resolve_grid(grid, {0.1, 0.25, 0.5, 1.0}, 0.0, 1.0, true, false, "0 < a <= 1");
  for (const double a : as) {
    const auto exp = stieltjes(a);
    const double gap = std::abs(exp.coeffs[0] + digamma(a));
    double recon = 0.0;
    for (const double s : {0.95, 1.05}) {
      recon = std::max(recon, std::abs(exp.evaluate(s) - zeta_em(s, a).value));
    }
    r.cases.push_back({"a=" + fmt(a), "|gamma0 + psi|=" + fmt(gap) + " laurent error=" + fmt(recon),
                       gap <= 1e-9 && recon <= 1e-8});
  }
  for (const double a : {0.01, 0.05, 0.1}) {
    const auto fixed = beta_via_stieltjes(a, 6);
    const double exact = find_beta(a).beta;
    const double diff = std::abs(fixed.beta - exact);
    r.cases.push_back({"fixed-point a=" + fmt(a), "|beta - exact|=" + fmt(diff) + " bound=" + fmt(fixed.truncation_bound),
                       diff <= fixed.truncation_bound});
  }
  return r;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const SuiteCase& c) { return c.ok; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"nonvanishing", "uniqueness", "monotonicity",
                                                 "sign-structure", "asymptotic", "representation",
                                                 "stieltjes"};
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteGrid& grid) {
  static const std::map<std::string, SuiteReport (*)(const SuiteGrid&), std::less<>> suites = {
      {"nonvanishing", nonvanishing},     {"uniqueness", uniqueness},
      {"monotonicity", monotonicity},     {"sign-structure", sign_structure},
      {"asymptotic", asymptotic},         {"representation", representation},
      {"stieltjes", stieltjes_suite}};
  const auto it = suites.find(name);
  if (it == suites.end()) {
    throw DomainError("suite must be one of nonvanishing, uniqueness, monotonicity, sign-structure, "
                      "asymptotic, representation, stieltjes");
  }
  return it->second(grid);
}

}  // namespace hzeta
