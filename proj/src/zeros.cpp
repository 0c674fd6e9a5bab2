#include "hzeta/zeros.hpp"

#include <cmath>
#include <sstream>

#include "hzeta/errors.hpp"
#include "hzeta/roots.hpp"

namespace hzeta {

namespace {

constexpr double kSigmaLeft = 0.01;
constexpr double kSigmaRight = 1.0 - 1e-9;
constexpr double kSigmaFloor = 1e-12;
constexpr int kScanPoints = 64;
constexpr int kNewtonCap = 8;
constexpr int kBisectionCap = 200;

bool residual_ok(double f, double d) {
  return std::abs(f) <= 1e-12 * std::max(1.0, std::abs(d));
}

}  // namespace

ZeroResult find_beta(double a, double tol, EmSettings em) {
  if (!(a >= 1e-6 && a <= 0.4999)) {
    throw DomainError("find_beta: shift parameter must satisfy 1e-6 <= a <= 0.4999");
  }
  if (!(tol > 0.0)) {
    throw DomainError("find_beta: tol must be positive");
  }
  const auto params = HurwitzParams::with(a, em);
  params.validate();
  auto zeta = [&params](double s) { return zeta_em(s, params).value; };
  auto dzeta = [&params](double s) { return dzeta_dsigma(s, params); };

  double lo = kSigmaLeft;
  double flo = zeta(lo);
  // Near a = 1/2 the zero drops below 0.01; ζ(σ,a) -> 1/2 - a > 0 as σ -> 0+.
  while (!(flo > 0.0)) {
    if (flo == 0.0) {
      return {a, lo, 0.0, dzeta(lo), {lo, lo}, 0};
    }
    lo *= 0.5;
    if (lo < kSigmaFloor) {
      std::ostringstream msg;
      msg << "find_beta: zeta(sigma, " << a << ") has no positive value on (0, 0.01]";
      throw NumericError(msg.str());
    }
    flo = zeta(lo);
  }
  const double hi = kSigmaRight;
  const double fhi = zeta(hi);
  if (!(fhi < 0.0)) {
    std::ostringstream msg;
    msg << "find_beta: no sign change of zeta(sigma, " << a << ") on [" << lo << ", " << hi << "]";
    throw NumericError(msg.str());
  }

  std::vector<double> scan(kScanPoints);
  for (int i = 0; i < kScanPoints; ++i) {
    scan[i] = zeta(lo + (hi - lo) * i / (kScanPoints - 1));
  }
  if (const int changes = count_sign_changes(scan); changes != 1) {
    std::ostringstream msg;
    msg << "find_beta: " << changes << " sign changes of zeta(sigma, " << a << ") on the 64-point scan";
    throw NumericError(msg.str());
  }

  const auto brent = brent_bracket(zeta, lo, hi, flo, fhi, tol);
  double left = brent.lo;
  double right = brent.hi;
  double x = brent.best;
  int iterations = brent.iterations;

  double f = zeta(x);
  double d = dzeta(x);
  bool converged = residual_ok(f, d);
  // Newton keeps going past the residual criterion while |ζ| still shrinks.
  for (int it = 0; it < kNewtonCap && f != 0.0; ++it, ++iterations) {
    double next = x - f / d;
    if (!(next > left && next < right)) {
      next = 0.5 * (left + right);
    }
    const double fnext = zeta(next);
    if (converged && !(std::abs(fnext) < std::abs(f))) {
      break;
    }
    x = next;
    f = fnext;
    d = dzeta(x);
    if (f > 0.0) {
      left = x;
    } else if (f < 0.0) {
      right = x;
    }
    converged = residual_ok(f, d);
  }
  for (int it = 0; it < kBisectionCap && !converged; ++it, ++iterations) {
    const double mid = 0.5 * (left + right);
    if (!(mid > left && mid < right)) {
      break;
    }
    x = mid;
    f = zeta(x);
    d = dzeta(x);
    if (f > 0.0) {
      left = x;
    } else if (f < 0.0) {
      right = x;
    }
    converged = residual_ok(f, d);
  }
  return {a, x, std::abs(f), d, {left, right}, iterations};
}

std::vector<BetaRow> beta_table(std::span<const double> a_grid, double tol, EmSettings em) {
  std::vector<BetaRow> rows;
  rows.reserve(a_grid.size());
  for (const double a : a_grid) {
    BetaRow row;
    row.a = a;
    try {
      row.result = find_beta(a, tol, em);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

double dbeta_da(double a) {
  const auto zero = find_beta(a);
  return -dzeta_da(zero.beta, a) / zero.dsigma;
}

double beta_asymptotic(double a) { return 1.0 - a + a * a * std::log(a); }

AsymptoticRow asymptotic_row(double a, double beta_exact) {
  AsymptoticRow row;
  row.a = a;
  row.beta_exact = beta_exact;
  row.beta_asym = beta_asymptotic(a);
  row.defect = beta_exact - row.beta_asym;
  row.normalized = row.defect / (a * a);
  return row;
}

IntermediateResiduals intermediate_residuals(double a, double beta) {
  const double gap = 1.0 - beta;
  const double a_beta = std::exp(beta * std::log(a));
  IntermediateResiduals r;
  r.a = a;
  r.basic = (-gap + a_beta * std::exp(gap * std::log1p(a))) / (gap * a_beta);
  r.second = (-gap + a - gap * a * std::log(a)) / (gap * a);
  return r;
}

AsymptoticComparison asym_compare(std::span<const double> a_grid) {
  AsymptoticComparison out;
  for (const double a : a_grid) {
    const auto zero = find_beta(a);
    out.rows.push_back(asymptotic_row(a, zero.beta));
    out.residuals.push_back(intermediate_residuals(a, zero.beta));
  }
  return out;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
  std::vector<double> g;
  if (points <= 0) {
    return g;
  }
  if (points == 1) {
    return {lo};
  }
  g.reserve(points);
  for (int i = 0; i < points; ++i) {
    g.push_back(i == points - 1 ? hi : lo + (hi - lo) * i / (points - 1));
  }
  return g;
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0.0 && hi > 0.0)) {
    throw DomainError("log_grid: endpoints must be positive");
  }
  std::vector<double> g = linear_grid(std::log(lo), std::log(hi), points);
  for (auto& v : g) {
    v = std::exp(v);
  }
  if (!g.empty()) {
    g.front() = lo;
    g.back() = points == 1 ? lo : hi;
  }
  return g;
}

int count_sign_changes(std::span<const double> values) {
  int changes = 0;
  int last = 0;
  for (const double v : values) {
    const int s = (v > 0.0) - (v < 0.0);
    if (s == 0) {
      continue;
    }
    if (last != 0 && s != last) {
      ++changes;
    }
    last = s;
  }
  return changes;
}

}  // namespace hzeta
