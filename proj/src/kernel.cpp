#include "hzeta/kernel.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "hzeta/errors.hpp"
#include "hzeta/special_fn.hpp"

namespace hzeta {

namespace {

constexpr double kTaylorSwitch = 1e-2;
constexpr double kSeriesSwitch = 2.0;
constexpr double kOverflowGuard = 700.0;

void check_a(double a) {
  if (!(a > 0.0 && a <= 1.0)) {
    throw DomainError("kernel: shift parameter must satisfy 0 < a <= 1");
  }
}

void check_x_nonneg(double x) {
  if (!(x >= 0.0)) {
    throw DomainError("kernel: x must satisfy x >= 0");
  }
  if (x > kOverflowGuard) {
    throw DomainError("kernel: x must satisfy x <= 700 (exponential overflow guard)");
  }
}

// B_n(y) from the Bernoulli table.
double bernoulli_poly(int n, double y) {
  const auto& bern = BernoulliTable::instance();
  double binom = 1.0;
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    sum += binom * bern.value(k) * std::pow(y, n - k);
    binom = binom * (n - k) / (k + 1);
  }
  return sum;
}

// Generating function t e^{yt}/(e^t - 1) = Σ B_n(y) t^n/n! at y = 1-a gives
//   H(a,x) = Σ_{n>=1} B_n(1-a) x^{n-1}/n!
// = (1/2 - a) + x(1/12 - a/2 + a²/2) + ...; six terms leave < 1e-15 at x = 1e-2.
double kernel_H_taylor(double a, double x) {
  double sum = 0.0;
  double pw = 1.0;
  double fact = 1.0;
  for (int n = 1; n <= 6; ++n) {
    fact *= n;
    sum += bernoulli_poly(n, 1.0 - a) * pw / fact;
    pw *= x;
  }
  return sum;
}

// h(a,x) = Σ_{n>=2} x^n/n! (n(1-a)^{n-1} - 1). The direct form
// x e^{(1-a)x} - expm1(x) cancels to O(x³) when a is near 1/2.
double kernel_h_series(double a, double x) {
  double sum = 0.5 * x * x * (1.0 - 2.0 * a);
  double xn = x * x / 2.0;   // x^n / n!
  double pw = 1.0 - a;       // (1-a)^{n-1}
  for (int n = 3; n < 80; ++n) {
    xn *= x / n;
    pw *= (1.0 - a);
    const double term = xn * (n * pw - 1.0);
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum) && xn < 1e-18) {
      break;
    }
  }
  return sum;
}

}  // namespace

double kernel_H(double a, double x) {
  check_a(a);
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("kernel_H: x must satisfy x > 0");
  }
  if (x < kTaylorSwitch) {
    return kernel_H_taylor(a, x);
  }
  if (x <= kSeriesSwitch) {
    return kernel_h_series(a, x) / (x * std::expm1(x));
  }
  return std::exp(-a * x) / -std::expm1(-x) - 1.0 / x;
}

double kernel_h(double a, double x) {
  check_a(a);
  check_x_nonneg(x);
  if (x <= kSeriesSwitch) {
    return kernel_h_series(a, x);
  }
  return x * std::exp((1.0 - a) * x) - std::expm1(x);
}

double kernel_h_scaled(double a, double x) {
  check_a(a);
  if (!(x >= 0.0)) {
    throw DomainError("kernel_h_scaled: x must satisfy x >= 0");
  }
  if (x <= kSeriesSwitch) {
    return std::exp(-x) * kernel_h_series(a, x);
  }
  return x * std::exp(-a * x) + std::expm1(-x);
}

double kernel_f(double a, double x) {
  check_a(a);
  check_x_nonneg(x);
  return (1.0 - a) * x - std::expm1(a * x);
}

double kernel_f1(double a, double x) {
  check_a(a);
  check_x_nonneg(x);
  return 1.0 - a - a * std::exp(a * x);
}

double kernel_f2(double a, double x) {
  check_a(a);
  check_x_nonneg(x);
  return -a * a * std::exp(a * x);
}

double kernel_h_prime(double a, double x) {
  return std::exp((1.0 - a) * x) * kernel_f(a, x);
}

int KernelProfile::violations() const {
  int bad = 0;
  for (const auto& s : grid_checked) {
    const int expected = s.x < x0 ? 1 : -1;
    if (s.sign != expected) {
      ++bad;
    }
  }
  return bad;
}

KernelProfile find_x0(double a, double tol) {
  if (!(a > 0.0 && a < 0.5)) {
    throw DomainError("find_x0: shift parameter must satisfy 0 < a < 1/2");
  }
  if (!(tol > 0.0)) {
    throw DomainError("find_x0: tol must be positive");
  }
  // e^{-x}h has the sign of h and never overflows, so it carries the search
  // for small a where x0 grows like log(1/a)/a.
  auto g = [a](double x) { return kernel_h_scaled(a, x); };
  auto dg = [a](double x) { return std::exp(-a * x) * (1.0 - a * x) - std::exp(-x); };

  double lo = 1.0;
  double hi = 1.0;
  if (g(1.0) > 0.0) {
    while (g(hi) > 0.0) {
      lo = hi;
      hi *= 2.0;
      if (hi > 1e300) {
        throw NumericError("find_x0: doubling search found no negative value of h");
      }
    }
  } else {
    int halvings = 0;
    while (!(g(lo) > 0.0)) {
      hi = lo;
      lo *= 0.5;
      if (++halvings > 200) {
        std::ostringstream msg;
        msg << "find_x0: no positive value of h near 0 for a = " << a << " (last x = " << lo << ")";
        throw NumericError(msg.str());
      }
    }
  }

  for (int it = 0; it < 400 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double x0 = 0.5 * (lo + hi);
  const double step = g(x0) / dg(x0);
  if (std::isfinite(step) && x0 - step > lo && x0 - step < hi) {
    x0 -= step;
  }

  const double scale = std::max(std::exp(-x0), x0 * std::exp(-a * x0));
  if (std::abs(g(x0)) > 1e-12 * scale) {
    std::ostringstream msg;
    msg << "find_x0: residual " << g(x0) << " exceeds bound at x0 = " << x0 << " for a = " << a;
    throw NumericError(msg.str());
  }

  KernelProfile profile{a, x0, {}};
  profile.grid_checked.reserve(200);
  auto sample = [&](double x) {
    const double v = kernel_H(a, x);
    profile.grid_checked.push_back({x, (v > 0.0) - (v < 0.0)});
  };
  for (int i = 0; i < 100; ++i) {
    sample(x0 * std::pow(10.0, -6.0 + 6.0 * i / 100.0));
  }
  for (int i = 1; i <= 100; ++i) {
    sample(x0 * std::pow(50.0, i / 100.0));
  }
  return profile;
}

}  // namespace hzeta
