#include "hzeta/cli.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "CLI11.hpp"

#include "hzeta/errors.hpp"
#include "hzeta/kernel.hpp"
#include "hzeta/stieltjes.hpp"
#include "hzeta/verify.hpp"

namespace hzeta::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Spec {
  double lo;
  double hi;
  bool lo_open;
  bool hi_open;
  const char* text;
};

// Admissible shift parameters per command.
Spec a_domain(Command c) {
  switch (c) {
    case Command::zeta:
    case Command::stieltjes:
      return {0.0, 1.0, true, false, "0 < a <= 1"};
    case Command::beta:
    case Command::table:
    case Command::asym:
      return {1e-6, 0.4999, false, false, "1e-6 <= a <= 0.4999"};
    case Command::x0:
      return {0.0, 0.5, true, true, "0 < a < 1/2"};
    case Command::verify:
      break;
  }
  return {0.0, 1.0, true, false, "0 < a <= 1"};
}

bool inside(double v, const Spec& s) {
  if (!std::isfinite(v)) return false;
  const bool lo_ok = s.lo_open ? v > s.lo : v >= s.lo;
  const bool hi_ok = s.hi_open ? v < s.hi : v <= s.hi;
  return lo_ok && hi_ok;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

void validate(const RunConfig& cfg) {
  require(cfg.tol > 0.0 && cfg.tol <= 1e-2, "--tol must satisfy 0 < tol <= 1e-2");
  HurwitzParams::with(1.0, {cfg.em_order, cfg.cutoff}).validate();
  require(cfg.order >= 0 && cfg.order <= kMaxStieltjesOrder, "--order must satisfy 0 <= order <= 8");
  if (cfg.points) {
    require(*cfg.points >= 0 && *cfg.points <= 100000, "--points must satisfy 0 <= points <= 100000");
  }
  if (cfg.command == Command::zeta) {
    require(cfg.sigma.has_value(), "zeta requires --sigma");
    require(cfg.a.has_value(), "zeta requires --a");
    require(std::isfinite(*cfg.sigma) && *cfg.sigma > 0.0 && *cfg.sigma != 1.0,
            "--sigma must satisfy sigma > 0 and sigma != 1");
  }
  if (cfg.command == Command::verify) {
    require(!cfg.a.has_value(), "verify takes --a-min/--a-max/--points, not --a");
    if (cfg.points) require(*cfg.points >= 1, "--points must satisfy points >= 1 for verify");
    if (cfg.suite) {
      const auto& names = suite_names();
      require(std::find(names.begin(), names.end(), *cfg.suite) != names.end(),
              "--suite must be one of nonvanishing, uniqueness, monotonicity, sign-structure, "
              "asymptotic, representation, stieltjes");
    }
    for (const auto& v : {cfg.a_min, cfg.a_max}) {
      if (v) require(std::isfinite(*v) && *v > 0.0 && *v <= 1.0, "--a-min/--a-max must lie in (0, 1]");
    }
    return;
  }
  const Spec dom = a_domain(cfg.command);
  if (cfg.a) {
    require(inside(*cfg.a, dom), std::string("--a must satisfy ") + dom.text);
  }
  for (const auto& v : {cfg.a_min, cfg.a_max}) {
    if (v) require(inside(*v, dom), std::string("--a-min/--a-max must satisfy ") + dom.text);
  }
  if (cfg.a_min && cfg.a_max) {
    require(*cfg.a_min <= *cfg.a_max, "--a-min must not exceed --a-max");
  }
  if (cfg.a && (cfg.a_min || cfg.a_max)) {
    throw DomainError("--a cannot be combined with --a-min/--a-max");
  }
  if (cfg.a_min.has_value() != cfg.a_max.has_value()) {
    throw DomainError("--a-min and --a-max must be given together");
  }
  const bool needs_a = cfg.command == Command::beta || cfg.command == Command::x0 ||
                       cfg.command == Command::stieltjes;
  if (needs_a) {
    require(cfg.a || cfg.a_min, "this command requires --a or --a-min/--a-max");
  }
}

std::vector<double> a_points(const RunConfig& cfg, std::vector<double> fallback) {
  if (cfg.a) return {*cfg.a};
  if (!cfg.a_min) return fallback;
  const int n = cfg.points.value_or(10);
  return cfg.log_grid ? log_grid(*cfg.a_min, *cfg.a_max, n) : linear_grid(*cfg.a_min, *cfg.a_max, n);
}

int cmd_zeta(const RunConfig& cfg, Table& t) {
  const auto r = zeta_em(*cfg.sigma, HurwitzParams::with(*cfg.a, {cfg.em_order, cfg.cutoff}));
  t.columns = {"sigma", "a", "value", "error_estimate", "method"};
  t.rows.push_back({*cfg.sigma, *cfg.a, r.value, r.error_estimate, std::string(to_string(r.method))});
  return kExitOk;
}

std::vector<Cell> zero_cells(const ZeroResult& z) {
  return {z.a, z.beta, z.residual, z.dsigma, z.bracket.first, z.bracket.second,
          static_cast<std::int64_t>(z.iterations)};
}

int cmd_beta(const RunConfig& cfg, Table& t) {
  t.columns = {"a", "beta", "residual", "dsigma", "bracket_lo", "bracket_hi", "iterations"};
  for (const double a : a_points(cfg, {})) {
    t.rows.push_back(zero_cells(find_beta(a, cfg.tol, {cfg.em_order, cfg.cutoff})));
  }
  return kExitOk;
}

int cmd_x0(const RunConfig& cfg, Table& t) {
  t.columns = {"a", "x0", "grid_points", "violations"};
  int status = kExitOk;
  for (const double a : a_points(cfg, {})) {
    const auto p = find_x0(a);
    const int bad = p.violations();
    if (bad) status = kExitVerification;
    t.rows.push_back({a, p.x0, static_cast<std::int64_t>(p.grid_checked.size()), static_cast<std::int64_t>(bad)});
  }
  return status;
}

int cmd_table(const RunConfig& cfg, Table& t) {
  t.columns = {"a", "beta", "residual", "dsigma", "dbeta_da", "iterations", "error"};
  const auto grid = a_points(cfg, log_grid(1e-4, 0.49, 40));
  const auto rows = beta_table(grid, cfg.tol, {cfg.em_order, cfg.cutoff});
  int status = kExitOk;
  for (const auto& row : rows) {
    if (row.result) {
      const auto& z = *row.result;
      t.rows.push_back({z.a, z.beta, z.residual, z.dsigma, dbeta_da(z.a), static_cast<std::int64_t>(z.iterations),
                        std::string()});
    } else {
      status = kExitNumeric;
      t.rows.push_back({row.a, kNaN, kNaN, kNaN, kNaN, std::int64_t{0}, row.error});
    }
  }
  return status;
}

int cmd_asym(const RunConfig& cfg, Table& t) {
  t.columns = {"a", "beta_exact", "beta_asym", "defect", "normalized"};
  if (cfg.residuals) {
    t.columns.insert(t.columns.end(), {"basic", "second"});
  }
  const auto grid = a_points(cfg, {1e-2, 3e-3, 1e-3, 3e-4, 1e-4});
  const auto cmp = asym_compare(grid);
  for (std::size_t i = 0; i < cmp.rows.size(); ++i) {
    const auto& r = cmp.rows[i];
    std::vector<Cell> cells = {r.a, r.beta_exact, r.beta_asym, r.defect, r.normalized};
    if (cfg.residuals) {
      cells.insert(cells.end(), {cmp.residuals[i].basic, cmp.residuals[i].second});
    }
    t.rows.push_back(std::move(cells));
  }
  return kExitOk;
}

int cmd_stieltjes(const RunConfig& cfg, Table& t) {
  t.columns = {"a", "n", "coefficient", "stieltjes_constant"};
  for (const double a : a_points(cfg, {})) {
    const auto e = stieltjes(a, cfg.order);
    double factorial = 1.0;
    for (int n = 0; n <= e.order; ++n) {
      if (n > 0) factorial *= n;
      const double c = e.coeffs[static_cast<std::size_t>(n)];
      t.rows.push_back({a, static_cast<std::int64_t>(n), c, (n % 2 ? -1.0 : 1.0) * factorial * c});
    }
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, Table& t) {
  t.columns = {"suite", "case", "detail", "ok"};
  SuiteGrid grid{cfg.a_min, cfg.a_max, cfg.points, cfg.log_grid};
  std::vector<std::string> suites = cfg.suite ? std::vector<std::string>{*cfg.suite} : suite_names();
  int status = kExitOk;
  for (const auto& name : suites) {
    const auto report = run_suite(name, grid);
    for (const auto& c : report.cases) {
      t.rows.push_back({report.suite, c.label, c.detail, std::string(c.ok ? "PASS" : "FAIL")});
    }
    if (!report.passed()) status = kExitVerification;
  }
  return status;
}

int dispatch(const RunConfig& cfg, Table& t) {
  switch (cfg.command) {
    case Command::zeta: return cmd_zeta(cfg, t);
    case Command::beta: return cmd_beta(cfg, t);
    case Command::x0: return cmd_x0(cfg, t);
    case Command::table: return cmd_table(cfg, t);
    case Command::asym: return cmd_asym(cfg, t);
    case Command::stieltjes: return cmd_stieltjes(cfg, t);
    case Command::verify: return cmd_verify(cfg, t);
  }
  return kExitDomain;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Real zeros of the Hurwitz zeta-function on (0,1)", "hzeta"};
  app.require_subcommand(1, 1);

  RunConfig cfg;
  std::string format = "text";
  bool json = false;
  double sigma = 0.0, a = 0.0, a_min = 0.0, a_max = 0.0;
  int points = 0;
  std::string suite;

  struct Sub {
    const char* name;
    Command command;
    const char* help;
  };
  const Sub subs[] = {
      {"zeta", Command::zeta, "evaluate zeta(sigma, a)"},
      {"beta", Command::beta, "locate the real zero beta(a) for 0 < a < 1/2"},
      {"x0", Command::x0, "sign-change abscissa of the kernel H(a, x)"},
      {"table", Command::table, "beta(a) and dbeta/da over an a-grid"},
      {"asym", Command::asym, "exact zero against 1 - a + a^2 log a"},
      {"stieltjes", Command::stieltjes, "Laurent coefficients at s = 1"},
      {"verify", Command::verify, "run verification suites"},
  };
  std::vector<std::pair<CLI::App*, Command>> apps;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    apps.emplace_back(sub, s.command);
    sub->add_option("--format", format, "text, csv or json");
    sub->add_flag("--json", json, "same as --format json");
    sub->add_option("--tol", cfg.tol, "zero-finder bracket width");
    sub->add_option("--em-order", cfg.em_order, "Euler-Maclaurin correction terms (1..30)");
    sub->add_option("--cutoff", cfg.cutoff, "directly summed terms (>= 8)");
    if (s.command == Command::zeta) {
      sub->add_option("--sigma", sigma, "real argument");
    }
    if (s.command != Command::verify) {
      sub->add_option("--a", a, "shift parameter");
    }
    sub->add_option("--a-min", a_min, "grid lower end");
    sub->add_option("--a-max", a_max, "grid upper end");
    sub->add_option("--points", points, "grid size");
    sub->add_flag("--log-grid", cfg.log_grid, "log-spaced grid");
    if (s.command == Command::stieltjes) {
      sub->add_option("--order", cfg.order, "highest coefficient index (0..8)");
    }
    if (s.command == Command::asym) {
      sub->add_flag("--residuals", cfg.residuals, "include the intermediate residuals");
    }
    if (s.command == Command::verify) {
      sub->add_option("--suite", suite, "suite name; all suites when omitted");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << first_line(e.what()) << '\n';
    err << app.help();
    return kExitDomain;
  }

  for (const auto& [sub, command] : apps) {
    if (!sub->parsed()) continue;
    cfg.command = command;
    auto opt = [sub](const char* name) { return sub->get_option_no_throw(name); };
    auto given = [&](const char* name) {
      const auto* o = opt(name);
      return o != nullptr && o->count() > 0;
    };
    if (given("--sigma")) cfg.sigma = sigma;
    if (given("--a")) cfg.a = a;
    if (given("--a-min")) cfg.a_min = a_min;
    if (given("--a-max")) cfg.a_max = a_max;
    if (given("--points")) cfg.points = points;
    if (given("--suite")) cfg.suite = suite;
  }

  try {
    cfg.format = json ? Format::json : parse_format(format);
    validate(cfg);
    Table table;
    const int status = dispatch(cfg, table);
    emit_table(table, cfg.format, out);
    return status;
  } catch (const DomainError& e) {
    err << "error: " << first_line(e.what()) << '\n';
    return kExitDomain;
  } catch (const QuadratureError& e) {
    err << "numeric fault: " << first_line(e.what()) << " (estimate " << e.estimate() << ", error "
        << e.achieved_error() << ")\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "numeric fault: " << first_line(e.what()) << '\n';
    return kExitNumeric;
  }
}

}  // namespace hzeta::cli
