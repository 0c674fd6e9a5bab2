#pragma once

#include <cstddef>
#include <vector>

#include <string>

namespace hzeta {

// Bernoulli numbers B_0..B_max_index, computed once as exact rationals and
// stored as (numerator, denominator) decimal strings plus their double value.
// Convention B_1 = -1/2.
class BernoulliTable {
 public:
  static constexpr int kMaxIndex = 62;

  // Shared immutable instance.
  static const BernoulliTable& instance();

  int max_index() const { return kMaxIndex; }
  double value(int n) const;
  const std::string& numerator(int n) const;
  const std::string& denominator(int n) const;

 private:
  BernoulliTable();

  std::vector<double> values_;
  std::vector<std::string> numerators_;
  std::vector<std::string> denominators_;
};

// Gamma function for x > 0. Lanczos approximation (g = 7, 9 terms) on
// [0.5, inf); smaller arguments are shifted up once with Γ(x) = Γ(x+1)/x.
double gamma(double x);

// log Γ(x) for x > 0.
double log_gamma(double x);

// Digamma ψ(x) for x > 0: upward recurrence to x >= 10, then the asymptotic
// series in 1/x² with Bernoulli coefficients.
double digamma(double x);

// Riemann ζ(σ) for σ >= 0, σ != 1, computed from the alternating Dirichlet eta
// series with Cohen–Villegas–Zagier acceleration:
//   ζ(σ) = η(σ) / (1 - 2^{1-σ}).
// Shares no code with the Hurwitz evaluators; tests use it as an oracle.
double riemann_zeta_ref(double sigma);

}  // namespace hzeta
