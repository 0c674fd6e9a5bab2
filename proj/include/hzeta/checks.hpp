#pragma once

#include <span>
#include <vector>

namespace hzeta {

struct NonvanishingReport {
  double a = 0.0;
  int points = 0;
  double max_value = 0.0;  // largest ζ(σ,a) seen; must stay negative
  int violations = 0;      // grid points with ζ(σ,a) >= 0

  bool passed() const { return violations == 0; }
};

// 200 points in [0.005, 0.995].
std::vector<double> default_nonvanishing_grid();

// ζ(σ,a) < 0 at every grid point, for 1/2 <= a <= 1.
NonvanishingReport nonvanishing_scan(double a, std::span<const double> sigma_grid);
NonvanishingReport nonvanishing_scan(double a);

// Sign changes of ζ(·,a) over `points` equispaced σ in [0.01, 0.999].
int uniqueness_scan(double a, int points = 256);

// q^{-σ} Σ_{r=1}^{q} χ(r) ζ(σ, r/q) for a real character table χ(1..q),
// 1 <= q <= 12, σ in (0,1).
double dirichlet_L_check(int q, std::span<const double> chi, double sigma);

}  // namespace hzeta
