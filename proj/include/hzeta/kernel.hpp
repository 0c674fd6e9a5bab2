#pragma once

#include <vector>

namespace hzeta {

// H(a,x) = e^{(1-a)x}/(e^x - 1) - 1/x for x > 0, 0 < a <= 1.
double kernel_H(double a, double x);

// h(a,x) = x(e^x - 1)H(a,x) = x e^{(1-a)x} - e^x + 1, for 0 <= x <= 700.
double kernel_h(double a, double x);

// e^{-x} h(a,x) = x e^{-ax} - (1 - e^{-x}); same sign as h, finite for all x >= 0.
double kernel_h_scaled(double a, double x);

// ∂h/∂x = (1-a)x e^{(1-a)x} + e^{(1-a)x} - e^x = e^{(1-a)x} f(a,x).
double kernel_h_prime(double a, double x);

// f(a,x) = e^{(a-1)x} h'(a,x) = (1-a)x + 1 - e^{ax}, and its x-derivatives.
double kernel_f(double a, double x);
double kernel_f1(double a, double x);
double kernel_f2(double a, double x);

struct SignSample {
  double x;
  int sign;  // sign of H(a,x): +1, 0 or -1
};

// Location of the unique positive sign change x0 of H(a,·) for 0 < a < 1/2,
// with the sample grid used to confirm H > 0 before x0 and H < 0 after it.
struct KernelProfile {
  double a = 0.0;
  double x0 = 0.0;
  std::vector<SignSample> grid_checked;

  // Grid points whose sign disagrees with the expected +/- pattern.
  int violations() const;
};

inline constexpr double kDefaultX0Tol = 1e-13;

// Doubling/halving bracket from x = 1, bisection to `tol`, one Newton polish.
// The grid holds 100 log-spaced points in [x0·1e-6, x0) and 100 in (x0, 50·x0].
KernelProfile find_x0(double a, double tol = kDefaultX0Tol);

}  // namespace hzeta
