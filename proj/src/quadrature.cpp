#include "hzeta/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace hzeta {

namespace {

// Kronrod abscissae (descending) and weights; odd indices are the Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo, hi, value, error;
};

Panel gk15(const std::function<double(double)>& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) {
      gauss += kWg[j / 2] * pair;
    }
  }
  return {lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

IntegralEstimate integrate_gk15(const std::function<double(double)>& f, double lo, double hi,
                                double abs_tol, int max_intervals) {
  IntegralEstimate out;
  if (hi <= lo) {
    out.converged = true;
    return out;
  }
  auto worse = [](const Panel& x, const Panel& y) { return x.error < y.error; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> queue(worse);
  queue.push(gk15(f, lo, hi));
  out.evaluations = 15;
  double total_error = queue.top().error;
  int intervals = 1;
  while (total_error > abs_tol && intervals < max_intervals) {
    const Panel worst = queue.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      break;  // cannot subdivide further in double precision
    }
    queue.pop();
    const Panel left = gk15(f, worst.lo, mid);
    const Panel right = gk15(f, mid, worst.hi);
    out.evaluations += 30;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++intervals;
  }

  std::vector<Panel> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
  for (const auto& p : panels) {
    out.value += p.value;
    out.error += p.error;
  }
  out.converged = out.error <= abs_tol;
  return out;
}

}  // namespace hzeta
