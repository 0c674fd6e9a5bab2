#pragma once

#include <functional>

namespace hzeta {

struct IntegralEstimate {
  double value = 0.0;
  double error = 0.0;   // sum of |K15 - G7| over the final subintervals
  int evaluations = 0;
  bool converged = false;
};

// Globally adaptive 7/15-point Gauss–Kronrod on [lo, hi]: the subinterval with
// the largest error estimate is bisected until the total error is <= abs_tol
// or max_intervals is reached. The final sum runs left to right so the result
// does not depend on refinement order.
IntegralEstimate integrate_gk15(const std::function<double(double)>& f, double lo, double hi,
                                double abs_tol, int max_intervals = 4000);

}  // namespace hzeta
