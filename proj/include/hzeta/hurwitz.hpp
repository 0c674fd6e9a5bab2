#pragma once

namespace hzeta {

inline constexpr int kDefaultEmOrder = 10;
inline constexpr int kDefaultCutoff = 32;

// Truncation knobs of the Euler–Maclaurin evaluator: `cutoff` terms are summed
// directly, then `em_order` Bernoulli corrections approximate the tail.
struct EmSettings {
  int em_order = kDefaultEmOrder;
  int cutoff = kDefaultCutoff;
};

struct HurwitzParams {
  double a = 1.0;
  int em_order = kDefaultEmOrder;  // M in [1, 30]
  int cutoff = kDefaultCutoff;     // N >= 8

  static HurwitzParams with(double a, EmSettings em = {}) { return {a, em.em_order, em.cutoff}; }

  // Throws DomainError naming the violated constraint.
  void validate() const;
};

enum class Method { series, euler_maclaurin };

const char* to_string(Method m);

struct EvalResult {
  double value = 0.0;
  // Modulus of the first omitted correction term (a heuristic bound).
  double error_estimate = 0.0;
  Method method = Method::euler_maclaurin;
};

// Σ_{n>=0} (n+a)^{-σ} for σ >= 1 + 1e-3: direct summation to an adaptive N,
// then ∫_N^∞ (x+a)^{-σ} dx + (N+a)^{-σ}/2. The error estimate is the next
// Euler–Maclaurin term σ(N+a)^{-σ-1}/12.
EvalResult zeta_series(double sigma, double a);

// ζ(σ,a) for σ > 0, σ != 1:
//   Σ_{n<N} (n+a)^{-σ} + (N+a)^{1-σ}/(σ-1) + (N+a)^{-σ}/2
//     + Σ_{k=1}^{M} B_{2k}/(2k)! · σ(σ+1)···(σ+2k-2) · (N+a)^{-σ-2k+1}.
EvalResult zeta_em(double sigma, const HurwitzParams& params);
EvalResult zeta_em(double sigma, double a);

// The regular part ζ(s,a) - 1/(s-1) on real s > 0, including s = 1. The pole
// is cancelled analytically in the (N+a)^{1-s}/(s-1) term via expm1.
double zeta_em_regular(double s, const HurwitzParams& params);

// ζ(0,a) = 1/2 - a.
double zeta_zero_sigma(double a);

// ∂ζ/∂σ for σ in (0,1), from the term-wise σ-derivative of zeta_em.
double dzeta_dsigma(double sigma, const HurwitzParams& params);
double dzeta_dsigma(double sigma, double a);

// ∂ζ/∂a = -σ ζ(σ+1, a) for σ in [1e-3, 1), a in (0,1]; uses zeta_series.
double dzeta_da(double sigma, double a);

}  // namespace hzeta
