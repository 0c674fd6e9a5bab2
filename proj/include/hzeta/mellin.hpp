#pragma once

#include <vector>

namespace hzeta {

// Breakpoints and truncation for the Mellin-type integrals over (0, ∞).
// The first panel (0, split_points[0]] is integrated after the substitution
// x = t^{1/σ}, which removes the x^{σ-1} endpoint singularity.
struct QuadratureSpec {
  double abs_tol = 1e-10;
  std::vector<double> split_points;  // ascending, positive
  double upper_cutoff = 0.0;         // > split_points.back()

  // Throws DomainError unless the invariants above hold.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // quadrature error plus tail_bound
  double tail_bound = 0.0;      // analytic bound on the discarded (cutoff, ∞) piece
  int evaluations = 0;
};

inline constexpr double kDefaultTailTarget = 1e-12;

// Default breakpoints {x0 (when a < 1/2), 1} and a cutoff P·2^k with the
// exponential tail bound below 1e-12.
QuadratureSpec default_quadrature_spec(double sigma, double a, double abs_tol = 1e-10);

// ∫_0^∞ H(a,x) x^{σ-1} dx = Γ(σ)ζ(σ,a) for σ in [0.05, 0.95], 0 < a <= 1.
//
// Beyond the last breakpoint P the kernel is split as
//   H = e^{-ax}/(1 - e^{-x}) - 1/x,
// the first part is integrated numerically up to the cutoff and the second is
// exact: -∫_P^∞ x^{σ-2} dx = -P^{σ-1}/(1-σ).
// Throws QuadratureError when abs_tol is not met.
QuadratureResult mellin_gamma_zeta(double sigma, double a, const QuadratureSpec& spec);
QuadratureResult mellin_gamma_zeta(double sigma, double a);

// x0^{-σ} Γ(σ) ζ(σ,a), strictly decreasing in σ on (0,1) when x0 is the sign
// change of H(a,·).
double scaled_gamma_zeta(double sigma, double a, double x0);

// H(a,x) (x/x0)^σ log(x/x0), the integrand of ∂/∂σ of scaled_gamma_zeta.
double scaled_derivative_integrand(double sigma, double a, double x0, double x);

// -(1/Γ(σ)) ∫_0^∞ e^{(1-a)x}/(e^x - 1) x^σ dx = ∂ζ/∂a for σ in [0.05, 0.95],
// 0 < a <= 1.
QuadratureResult dzeta_da_integral(double sigma, double a, const QuadratureSpec& spec);
QuadratureResult dzeta_da_integral(double sigma, double a);

}  // namespace hzeta
