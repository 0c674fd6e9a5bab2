#include "hzeta/special_fn.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "hzeta/errors.hpp"

namespace hzeta {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

void require_positive(double x, const char* fn) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(fn) + ": argument must satisfy x > 0");
  }
}

// Lanczos coefficients for g = 7, n = 9 (Godfrey).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_sum(double zm1) {
  double sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    sum += kLanczos[i] / (zm1 + static_cast<double>(i));
  }
  return sum;
}

}  // namespace

BernoulliTable::BernoulliTable() {
  // Recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0, solved for B_n in exact
  // rational arithmetic.
  std::vector<Rational> b(kMaxIndex + 1);
  b[0] = 1;
  for (int n = 1; n <= kMaxIndex; ++n) {
    Rational acc = 0;
    BigInt binom = 1;  // C(n+1, k)
    for (int k = 0; k < n; ++k) {
      acc += Rational(binom) * b[k];
      binom = binom * (n + 1 - k) / (k + 1);
    }
    b[n] = -acc / Rational(n + 1);
  }
  values_.reserve(b.size());
  for (const auto& r : b) {
    values_.push_back(static_cast<double>(r));
    numerators_.push_back(boost::multiprecision::numerator(r).str());
    denominators_.push_back(boost::multiprecision::denominator(r).str());
  }
}

const BernoulliTable& BernoulliTable::instance() {
  static const BernoulliTable table;
  return table;
}

double BernoulliTable::value(int n) const {
  if (n < 0 || n > kMaxIndex) {
    throw DomainError("BernoulliTable: index must lie in [0, " + std::to_string(kMaxIndex) + "]");
  }
  return values_[static_cast<std::size_t>(n)];
}

const std::string& BernoulliTable::numerator(int n) const {
  value(n);
  return numerators_[static_cast<std::size_t>(n)];
}

const std::string& BernoulliTable::denominator(int n) const {
  value(n);
  return denominators_[static_cast<std::size_t>(n)];
}

double gamma(double x) {
  require_positive(x, "gamma");
  if (x < 0.5) {
    return gamma(x + 1.0) / x;
  }
  const double zm1 = x - 1.0;
  const double t = zm1 + kLanczosG + 0.5;
  // t^{z-1/2} split in two halves so the product stays finite up to x ~ 171.
  const double half = std::pow(t, 0.5 * (zm1 + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) * lanczos_sum(zm1);
}

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  if (x < 0.5) {
    return log_gamma(x + 1.0) - std::log(x);
  }
  const double zm1 = x - 1.0;
  const double t = zm1 + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (zm1 + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(zm1));
}

double digamma(double x) {
  require_positive(x, "digamma");
  double shift = 0.0;
  while (x < 10.0) {
    shift += 1.0 / x;
    x += 1.0;
  }
  const auto& bern = BernoulliTable::instance();
  const double inv2 = 1.0 / (x * x);
  double series = 0.0;
  double pw = inv2;
  for (int k = 1; k <= 9; ++k) {
    series += bern.value(2 * k) / (2.0 * k) * pw;
    pw *= inv2;
  }
  return std::log(x) - 0.5 / x - series - shift;
}

double riemann_zeta_ref(double sigma) {
  if (!std::isfinite(sigma) || sigma < 0.0) {
    throw DomainError("riemann_zeta_ref: sigma must satisfy sigma >= 0");
  }
  if (sigma == 1.0) {
    throw DomainError("riemann_zeta_ref: sigma = 1 is the pole");
  }
  // Cohen, Rodriguez Villegas, Zagier, algorithm 1: the terms (k+1)^{-σ} are
  // moments of a positive measure on [0,1] for σ >= 0, so the relative error
  // is bounded by 2 / (3 + √8)^n.
  constexpr int n = 30;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  double eta = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    eta += c * std::exp(-sigma * std::log(static_cast<double>(k + 1)));
    b = (k + n) * static_cast<double>(k - n) * b / ((k + 0.5) * (k + 1.0));
  }
  eta /= d;
  return eta / -std::expm1((1.0 - sigma) * std::numbers::ln2);
}

}  // namespace hzeta
