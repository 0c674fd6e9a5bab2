#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hzeta/hurwitz.hpp"

namespace hzeta {

// The zero β(a) of ζ(·,a) in (0,1) for 0 < a < 1/2.
struct ZeroResult {
  double a = 0.0;
  double beta = 0.0;
  double residual = 0.0;  // |ζ(β,a)|
  double dsigma = 0.0;    // ∂ζ/∂σ at (β,a); negative for a simple zero
  std::pair<double, double> bracket;  // ζ > 0 at first, ζ < 0 at second
  int iterations = 0;
};

inline constexpr double kDefaultBetaTol = 1e-8;

// Bracket [0.01, 1 - 1e-9] (left end moved toward 0 while ζ <= 0 there; ζ(0,a)
// = 1/2 - a > 0 guarantees termination), Brent to width `tol`, then at most 8
// Newton steps; these continue past |ζ| <= 1e-12·max(1, |∂σζ|) while |ζ| still
// decreases. Bisection is the fallback when the criterion is not met.
// A 64-point scan of the initial bracket must show exactly one sign change.
ZeroResult find_beta(double a, double tol = kDefaultBetaTol, EmSettings em = {});

struct BetaRow {
  double a = 0.0;
  std::optional<ZeroResult> result;
  std::string error;  // set when result is empty
};

// find_beta for each grid point, in input order; failures are recorded per row.
std::vector<BetaRow> beta_table(std::span<const double> a_grid, double tol = kDefaultBetaTol,
                                EmSettings em = {});

// dβ/da = -(∂ζ/∂a)/(∂ζ/∂σ) at (β(a), a).
double dbeta_da(double a);

// Exact zero against 1 - a + a² log a.
struct AsymptoticRow {
  double a = 0.0;
  double beta_exact = 0.0;
  double beta_asym = 0.0;
  double defect = 0.0;      // beta_exact - beta_asym
  double normalized = 0.0;  // defect / a²
};

// Normalized residuals of the two intermediate estimates
//   basic:  ((β-1) + a^β (a+1)^{1-β}) / ((1-β) a^β)
//   second: ((β-1) + a - (1-β) a log a) / ((1-β) a)
struct IntermediateResiduals {
  double a = 0.0;
  double basic = 0.0;
  double second = 0.0;
};

struct AsymptoticComparison {
  std::vector<AsymptoticRow> rows;
  std::vector<IntermediateResiduals> residuals;
};

double beta_asymptotic(double a);
AsymptoticRow asymptotic_row(double a, double beta_exact);
IntermediateResiduals intermediate_residuals(double a, double beta_exact);
AsymptoticComparison asym_compare(std::span<const double> a_grid);

// Grid helpers shared by the CLI and the verification suites.
std::vector<double> linear_grid(double lo, double hi, int points);
std::vector<double> log_grid(double lo, double hi, int points);

// Number of strict sign changes along a sequence (zeros are skipped).
int count_sign_changes(std::span<const double> values);

}  // namespace hzeta
