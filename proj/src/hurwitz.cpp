#include "hzeta/hurwitz.hpp"

#include <cmath>
#include <string>

#include "hzeta/errors.hpp"
#include "hzeta/special_fn.hpp"

namespace hzeta {

namespace {

constexpr double kSeriesMinSigma = 1.0 + 1e-3;
constexpr double kSeriesAbsTol = 1e-14;
constexpr double kSeriesMaxTerms = 5e7;

void require_shift(double a) {
  if (!(a > 0.0 && a <= 1.0)) {
    throw DomainError("shift parameter must satisfy 0 < a <= 1");
  }
}

// Sum of the M Bernoulli corrections
//   B_{2k}/(2k)! · σ(σ+1)···(σ+2k-2) · (N+a)^{-σ-2k+1},  k = 1..M,
// its σ-derivative, and the modulus of term M+1.
struct Corrections {
  double sum = 0.0;
  double dsum = 0.0;
  double first_omitted = 0.0;
};

Corrections bernoulli_corrections(double sigma, double log_base, int order, bool with_derivative) {
  const auto& bern = BernoulliTable::instance();
  Corrections out;
  double poch = sigma;              // σ(σ+1)···(σ+2k-2)
  double dlog_poch = 1.0 / sigma;   // d/dσ log poch
  double factorial = 2.0;           // (2k)!
  double terms[32] = {};
  double dterms[32] = {};
  for (int k = 1; k <= order + 1; ++k) {
    const double coef = bern.value(2 * k) / factorial;
    const double power = std::exp(-(sigma + 2.0 * k - 1.0) * log_base);
    terms[k - 1] = coef * poch * power;
    if (with_derivative) {
      dterms[k - 1] = coef * poch * power * (dlog_poch - log_base);
    }
    const double j1 = 2.0 * k - 1.0;
    const double j2 = 2.0 * k;
    poch *= (sigma + j1) * (sigma + j2);
    dlog_poch += 1.0 / (sigma + j1) + 1.0 / (sigma + j2);
    factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
  }
  for (int k = order; k >= 1; --k) {
    out.sum += terms[k - 1];
    out.dsum += dterms[k - 1];
  }
  out.first_omitted = std::abs(terms[order]);
  return out;
}

double direct_sum(double sigma, double a, int cutoff) {
  double sum = 0.0;
  for (int n = cutoff - 1; n >= 0; --n) {
    sum += std::exp(-sigma * std::log(n + a));
  }
  return sum;
}

void check_em_sigma(double sigma) {
  if (!std::isfinite(sigma) || sigma <= 0.0) {
    throw DomainError("zeta_em: sigma must satisfy sigma > 0");
  }
  if (sigma == 1.0) {
    throw DomainError("zeta_em: sigma = 1 is the pole");
  }
}

}  // namespace

const char* to_string(Method m) {
  return m == Method::series ? "series" : "euler_maclaurin";
}

void HurwitzParams::validate() const {
  require_shift(a);
  if (em_order < 1 || em_order > 30) {
    throw DomainError("em_order must satisfy 1 <= M <= 30");
  }
  if (cutoff < 8) {
    throw DomainError("cutoff must satisfy N >= 8");
  }
}

EvalResult zeta_series(double sigma, double a) {
  if (!(sigma >= kSeriesMinSigma) || !std::isfinite(sigma)) {
    throw DomainError("zeta_series: sigma must satisfy sigma >= 1 + 1e-3");
  }
  require_shift(a);
  // Smallest N with σ(N+a)^{-σ-1}/12 below the target.
  const double n_needed = std::pow(sigma / (12.0 * kSeriesAbsTol), 1.0 / (sigma + 1.0));
  const int cutoff = static_cast<int>(std::ceil(std::min(std::max(n_needed, 16.0), kSeriesMaxTerms)));
  const double base = cutoff + a;
  const double log_base = std::log(base);
  double tail = std::exp((1.0 - sigma) * log_base) / (sigma - 1.0) + 0.5 * std::exp(-sigma * log_base);
  EvalResult r;
  r.value = tail + direct_sum(sigma, a, cutoff);
  r.error_estimate = sigma * std::exp(-(sigma + 1.0) * log_base) / 12.0;
  r.method = Method::series;
  return r;
}

EvalResult zeta_em(double sigma, const HurwitzParams& params) {
  check_em_sigma(sigma);
  params.validate();
  const double base = params.cutoff + params.a;
  const double log_base = std::log(base);
  const auto corr = bernoulli_corrections(sigma, log_base, params.em_order, false);
  double value = corr.sum;
  value += 0.5 * std::exp(-sigma * log_base);
  value += direct_sum(sigma, params.a, params.cutoff);
  value += std::exp((1.0 - sigma) * log_base) / (sigma - 1.0);
  return {value, corr.first_omitted, Method::euler_maclaurin};
}

EvalResult zeta_em(double sigma, double a) { return zeta_em(sigma, HurwitzParams::with(a)); }

double zeta_em_regular(double s, const HurwitzParams& params) {
  if (!std::isfinite(s) || s <= 0.0) {
    throw DomainError("zeta_em_regular: s must satisfy s > 0");
  }
  params.validate();
  const double base = params.cutoff + params.a;
  const double log_base = std::log(base);
  const auto corr = bernoulli_corrections(s, log_base, params.em_order, false);
  // ((N+a)^{1-s} - 1)/(s-1), which tends to -log(N+a) at s = 1.
  const double t = (1.0 - s) * log_base;
  const double pole_free = (s == 1.0) ? -log_base : -log_base * std::expm1(t) / t;
  double value = corr.sum;
  value += 0.5 * std::exp(-s * log_base);
  value += direct_sum(s, params.a, params.cutoff);
  value += pole_free;
  return value;
}

double zeta_zero_sigma(double a) {
  require_shift(a);
  return 0.5 - a;
}

double dzeta_dsigma(double sigma, const HurwitzParams& params) {
  if (!(sigma > 0.0 && sigma < 1.0)) {
    throw DomainError("dzeta_dsigma: sigma must satisfy 0 < sigma < 1");
  }
  params.validate();
  const double base = params.cutoff + params.a;
  const double log_base = std::log(base);
  const auto corr = bernoulli_corrections(sigma, log_base, params.em_order, true);
  double d = corr.dsum;
  d -= 0.5 * log_base * std::exp(-sigma * log_base);
  for (int n = params.cutoff - 1; n >= 0; --n) {
    const double ln = std::log(n + params.a);
    d -= ln * std::exp(-sigma * ln);
  }
  const double pole = std::exp((1.0 - sigma) * log_base) / (sigma - 1.0);
  d -= pole * (log_base + 1.0 / (sigma - 1.0));
  return d;
}

double dzeta_dsigma(double sigma, double a) { return dzeta_dsigma(sigma, HurwitzParams::with(a)); }

double dzeta_da(double sigma, double a) {
  if (!(sigma >= 1e-3 && sigma < 1.0)) {
    throw DomainError("dzeta_da: sigma must satisfy 1e-3 <= sigma < 1");
  }
  require_shift(a);
  return -sigma * zeta_series(sigma + 1.0, a).value;
}

}  // namespace hzeta
