#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hzeta {

// Empirical bounds from the calibration run over a in {1e-2, ..., 1e-5}. The
// three normalized quantities approach Euler's constant 0.5772... from below
// as a -> 0+; the observed maxima were 0.5754 (defect), 0.5772 (basic) and
// 0.5766 (second).
inline constexpr double kNormalizedDefectBound = 0.6;
inline constexpr double kBasicResidualBound = 0.6;
inline constexpr double kSecondResidualBound = 0.6;

// Lower bound on |∂σζ(β(a),a)| for a in [0.01, 0.49].
inline constexpr double kMinZeroSlope = 0.1;

struct SuiteCase {
  std::string label;
  std::string detail;
  bool ok = true;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCase> cases;

  bool passed() const;
};

// Optional a-grid override; suites fall back to their own defaults.
struct SuiteGrid {
  std::optional<double> a_min;
  std::optional<double> a_max;
  std::optional<int> points;
  bool log_spaced = false;
};

// nonvanishing, uniqueness, monotonicity, sign-structure, asymptotic,
// representation, stieltjes.
const std::vector<std::string>& suite_names();

// Throws DomainError for an unknown suite or a grid outside the suite's domain.
SuiteReport run_suite(std::string_view name, const SuiteGrid& grid = {});

}  // namespace hzeta
