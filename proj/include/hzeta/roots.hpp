#pragma once

#include <algorithm>
#include <cmath>
#include <utility>

#include "hzeta/errors.hpp"

namespace hzeta {

struct BrentResult {
  double lo;   // f(lo) has the sign of f at the original left end
  double hi;
  double best;
  int iterations;
};

// Brent's method on a sign-changing bracket [lo, hi]; stops when the bracket is
// narrower than xtol. Keeps both ends so callers can continue from a valid
// bracket.
template <class F>
BrentResult brent_bracket(F&& f, double lo, double hi, double flo, double fhi, double xtol,
                          int max_iter = 200) {
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw NumericError("brent_bracket: endpoints do not straddle a sign change");
  }
  const bool left_positive = flo > 0.0;
  double a = lo, b = hi, fa = flo, fb = fhi;
  double c = a, fc = fa, d = b - a, e = d;
  int it = 0;
  for (; it < max_iter; ++it) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * 2.2e-16 * std::abs(b) + 0.5 * xtol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) {
      break;
    }
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      const double min1 = 3.0 * xm * q - std::abs(tol1 * q);
      const double min2 = std::abs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol1 ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
  }
  if ((fb > 0.0) == (fc > 0.0)) {
    c = a;
  }
  // b and c straddle the sign change; order them as the caller's bracket.
  double left = b, right = c;
  if ((fb > 0.0) != left_positive) {
    std::swap(left, right);
  }
  if (fb == 0.0) {
    left = right = b;
  }
  return {left, right, b, it};
}

}  // namespace hzeta
