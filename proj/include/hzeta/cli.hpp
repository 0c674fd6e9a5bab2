#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hzeta/hurwitz.hpp"
#include "hzeta/table.hpp"
#include "hzeta/zeros.hpp"

namespace hzeta::cli {

enum class Command { zeta, beta, x0, table, asym, stieltjes, verify };

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitVerification = 2;
inline constexpr int kExitNumeric = 3;

struct RunConfig {
  Command command = Command::zeta;
  std::optional<double> sigma;
  std::optional<double> a;
  std::optional<double> a_min;
  std::optional<double> a_max;
  std::optional<int> points;
  bool log_grid = false;
  bool residuals = false;
  double tol = kDefaultBetaTol;
  int em_order = kDefaultEmOrder;
  int cutoff = kDefaultCutoff;
  int order = 8;
  std::optional<std::string> suite;
  Format format = Format::text;
};

// Parses argv (without the program name), validates every numeric flag and
// dispatches. Output goes to `out`, diagnostics and usage to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hzeta::cli
