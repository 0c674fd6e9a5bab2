#pragma once

#include <vector>

#include "hzeta/hurwitz.hpp"

namespace hzeta {

inline constexpr int kMaxStieltjesOrder = 8;

// Laurent expansion ζ(s,a) = 1/(s-1) + Σ_{n>=0} coeffs[n] (s-1)^n at s = 1.
// coeffs[n] is the Taylor coefficient of the regular part, i.e.
// (-1)^n γ_n(a)/n! in the usual normalization of the Stieltjes constants;
// coeffs[0] = γ_0(a) = -ψ(a).
struct StieltjesExpansion {
  double a = 0.0;
  int order = 0;
  std::vector<double> coeffs;

  // 1/(s-1) + Σ_{n<=order} coeffs[n] (s-1)^n.
  double evaluate(double s) const;
};

// Coefficients 0..order (order <= 8) from samples of the pole-free regular part
// g(s) = ζ(s,a) - 1/(s-1) on the real segment [0.1, 1.9]: g is interpolated at
// Chebyshev nodes and the interpolant is expanded about s = 1. Two node counts
// are compared and NumericError is thrown if they disagree beyond 1e-5·max(1,|c|).
StieltjesExpansion stieltjes(double a, int order = kMaxStieltjesOrder);

struct StieltjesBeta {
  double beta = 0.0;
  int iterations = 0;
  // |c_N| |β - 1|^{N+1} / |c_0|, the size of the last retained series term.
  double truncation_bound = 0.0;
};

// Fixed-point iteration of
//   β = 1 - (1/c_0)(1 + Σ_{n=1}^{N} c_n (β-1)^{n+1})
// from β = 1 - a until successive iterates differ by < 1e-12. Requires
// 0 < a < 0.2; NumericError (carrying the last iterate) after max_iter steps.
StieltjesBeta beta_via_stieltjes(double a, int order = 6, int max_iter = 500);

// Right-hand side of the fixed-point map for a given expansion.
double stieltjes_beta_map(const StieltjesExpansion& expansion, int order, double beta);

}  // namespace hzeta
