#include "hzeta/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "hzeta/errors.hpp"
#include "hzeta/hurwitz.hpp"
#include "hzeta/kernel.hpp"
#include "hzeta/quadrature.hpp"
#include "hzeta/special_fn.hpp"

namespace hzeta {

namespace {

void check_sigma_a(double sigma, double a, const char* fn) {
  if (!(sigma >= 0.05 && sigma <= 0.95)) {
    throw DomainError(std::string(fn) + ": sigma must satisfy 0.05 <= sigma <= 0.95");
  }
  if (!(a > 0.0 && a <= 1.0)) {
    throw DomainError(std::string(fn) + ": shift parameter must satisfy 0 < a <= 1");
  }
}

// ∫_C^∞ e^{-ax} x^{σ-1}/(1 - e^{-x}) dx <= C^{σ-1} e^{-aC} / (a(1 - e^{-C})).
double kernel_tail_bound(double sigma, double a, double c) {
  return std::pow(c, sigma - 1.0) * std::exp(-a * c) / (a * -std::expm1(-c));
}

// ∫_C^∞ e^{-ax} x^σ/(1 - e^{-x}) dx <= C^σ e^{-aC} / ((a - σ/C)(1 - e^{-C})), C > σ/a.
double weighted_tail_bound(double sigma, double a, double c) {
  const double rate = a - sigma / c;
  if (rate <= 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return std::pow(c, sigma) * std::exp(-a * c) / (rate * -std::expm1(-c));
}

// Panel edges: the breakpoints, then dyadic steps from the last breakpoint up
// to the cutoff.
std::vector<double> panel_edges(const QuadratureSpec& spec) {
  std::vector<double> edges(spec.split_points.begin(), spec.split_points.end());
  double x = edges.back();
  while (2.0 * x < spec.upper_cutoff) {
    x *= 2.0;
    edges.push_back(x);
  }
  edges.push_back(spec.upper_cutoff);
  return edges;
}

struct Accumulator {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
  bool converged = true;

  void add(const std::function<double(double)>& f, double lo, double hi, double tol) {
    const auto r = integrate_gk15(f, lo, hi, tol);
    value += r.value;
    error += r.error;
    evaluations += r.evaluations;
    converged = converged && r.converged;
  }
};

[[noreturn]] void report_unmet(const char* fn, double sigma, double a, const Accumulator& acc,
                               double tol) {
  std::ostringstream msg;
  msg << fn << ": tolerance " << tol << " not met at sigma = " << sigma << ", a = " << a
      << " (estimate " << acc.value << ", achieved error " << acc.error << ")";
  throw QuadratureError(msg.str(), acc.value, acc.error);
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0)) {
    throw DomainError("QuadratureSpec: abs_tol must be positive");
  }
  if (split_points.empty()) {
    throw DomainError("QuadratureSpec: at least one split point is required");
  }
  if (!(split_points.front() > 0.0) || !std::is_sorted(split_points.begin(), split_points.end()) ||
      std::adjacent_find(split_points.begin(), split_points.end()) != split_points.end()) {
    throw DomainError("QuadratureSpec: split points must be positive and strictly ascending");
  }
  if (!(upper_cutoff > split_points.back())) {
    throw DomainError("QuadratureSpec: upper_cutoff must exceed the last split point");
  }
}

QuadratureSpec default_quadrature_spec(double sigma, double a, double abs_tol) {
  check_sigma_a(sigma, a, "default_quadrature_spec");
  QuadratureSpec spec;
  spec.abs_tol = abs_tol;
  spec.split_points.push_back(1.0);
  if (a < 0.5) {
    const double x0 = find_x0(a).x0;
    if (std::abs(x0 - 1.0) > 1e-3) {
      spec.split_points.push_back(x0);
    }
  }
  std::sort(spec.split_points.begin(), spec.split_points.end());
  double c = 2.0 * spec.split_points.back();
  while (kernel_tail_bound(sigma, a, c) > kDefaultTailTarget ||
         weighted_tail_bound(sigma, a, c) > kDefaultTailTarget) {
    c *= 2.0;
  }
  spec.upper_cutoff = c;
  return spec;
}

QuadratureResult mellin_gamma_zeta(double sigma, double a, const QuadratureSpec& spec) {
  check_sigma_a(sigma, a, "mellin_gamma_zeta");
  spec.validate();
  const auto edges = panel_edges(spec);
  const double tol = spec.abs_tol / static_cast<double>(edges.size());
  const double inv_sigma = 1.0 / sigma;
  const std::size_t last_split = spec.split_points.size() - 1;

  Accumulator acc;
  // (0, s0]: ∫ H(a,x) x^{σ-1} dx = (1/σ) ∫_0^{s0^σ} H(a, t^{1/σ}) dt.
  acc.add(
      [&](double t) {
        const double x = std::pow(t, inv_sigma);
        return x > 0.0 ? kernel_H(a, x) : 0.5 - a;
      },
      0.0, std::pow(edges.front(), sigma), tol * sigma);
  acc.value *= inv_sigma;
  acc.error *= inv_sigma;

  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (i < last_split) {
      acc.add([&](double x) { return kernel_H(a, x) * std::pow(x, sigma - 1.0); }, edges[i],
              edges[i + 1], tol);
    } else {
      acc.add([&](double x) { return std::exp(-a * x) / -std::expm1(-x) * std::pow(x, sigma - 1.0); },
              edges[i], edges[i + 1], tol);
    }
  }
  const double p = spec.split_points.back();
  acc.value -= std::pow(p, sigma - 1.0) / (1.0 - sigma);

  if (!acc.converged) {
    report_unmet("mellin_gamma_zeta", sigma, a, acc, spec.abs_tol);
  }
  QuadratureResult r;
  r.tail_bound = kernel_tail_bound(sigma, a, spec.upper_cutoff);
  r.value = acc.value;
  r.error_estimate = acc.error + r.tail_bound;
  r.evaluations = acc.evaluations;
  return r;
}

QuadratureResult mellin_gamma_zeta(double sigma, double a) {
  return mellin_gamma_zeta(sigma, a, default_quadrature_spec(sigma, a));
}

double scaled_gamma_zeta(double sigma, double a, double x0) {
  if (!(x0 > 0.0)) {
    throw DomainError("scaled_gamma_zeta: x0 must be positive");
  }
  return std::exp(-sigma * std::log(x0)) * gamma(sigma) * zeta_em(sigma, a).value;
}

double scaled_derivative_integrand(double sigma, double a, double x0, double x) {
  const double ratio = x / x0;
  return kernel_H(a, x) * std::pow(ratio, sigma) * std::log(ratio);
}

QuadratureResult dzeta_da_integral(double sigma, double a, const QuadratureSpec& spec) {
  check_sigma_a(sigma, a, "dzeta_da_integral");
  spec.validate();
  const double tail = weighted_tail_bound(sigma, a, spec.upper_cutoff);
  if (!std::isfinite(tail)) {
    throw DomainError("dzeta_da_integral: upper_cutoff must exceed sigma/a");
  }
  const auto edges = panel_edges(spec);
  const double tol = spec.abs_tol / static_cast<double>(edges.size());
  const double inv_sigma = 1.0 / sigma;
  // x e^{(1-a)x}/(e^x - 1), equal to 1 at x = 0.
  auto weight = [a](double x) { return x > 0.0 ? x * std::exp(-a * x) / -std::expm1(-x) : 1.0; };

  Accumulator acc;
  acc.add([&](double t) { return weight(std::pow(t, inv_sigma)); }, 0.0,
          std::pow(edges.front(), sigma), tol * sigma);
  acc.value *= inv_sigma;
  acc.error *= inv_sigma;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    acc.add([&](double x) { return weight(x) * std::pow(x, sigma - 1.0); }, edges[i], edges[i + 1],
            tol);
  }
  if (!acc.converged) {
    report_unmet("dzeta_da_integral", sigma, a, acc, spec.abs_tol);
  }
  const double g = gamma(sigma);
  QuadratureResult r;
  r.tail_bound = tail / g;
  r.value = -acc.value / g;
  r.error_estimate = (acc.error + tail) / g;
  r.evaluations = acc.evaluations;
  return r;
}

QuadratureResult dzeta_da_integral(double sigma, double a) {
  return dzeta_da_integral(sigma, a, default_quadrature_spec(sigma, a));
}

}  // namespace hzeta
