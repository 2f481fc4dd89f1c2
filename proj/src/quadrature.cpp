#include "ftr/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <stdexcept>

namespace ftr::specfun {

QuadratureSpec::QuadratureSpec(double abs, double rel, int max_sub)
    : abs_tol(abs), rel_tol(rel), max_subdivisions(max_sub) {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("QuadratureSpec: abs_tol must be > 0");
  if (!(rel_tol > 0.0)) throw std::invalid_argument("QuadratureSpec: rel_tol must be > 0");
  if (max_subdivisions < 1)
    throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
}

namespace {

GaussLegendreRule make_gauss_legendre(int order) {
  GaussLegendreRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int mid = (order + 1) / 2;
  for (int i = 0; i < mid; ++i) {
    // Newton iteration on P_order, starting from the Chebyshev estimate.
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre_rule(int order) {
  if (order < 1) throw std::invalid_argument("gauss_legendre_rule: order must be >= 1");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[order];
  if (!slot) slot = std::make_unique<GaussLegendreRule>(make_gauss_legendre(order));
  return *slot;
}

double integrate_gauss_legendre(const std::function<double(double)>& f, double lo,
                                double hi, int order) {
  const GaussLegendreRule& rule = gauss_legendre_rule(order);
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double sum = 0.0;
  for (int i = 0; i < order; ++i) sum += rule.weights[i] * f(center + half * rule.nodes[i]);
  return sum * half;
}

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
  double value;
  double error;
};

PanelEstimate gauss_kronrod_15(const std::function<double(double)>& f, double lo,
                               double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  const double fc = f(center);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  double fv1[7], fv2[7];
  for (int j = 0; j < 3; ++j) {
    const int jtw = 2 * j + 1;
    const double absc = half * kXgk[jtw];
    fv1[jtw] = f(center - absc);
    fv2[jtw] = f(center + absc);
    const double fsum = fv1[jtw] + fv2[jtw];
    resg += kWg[j] * fsum;
    resk += kWgk[jtw] * fsum;
    resabs += kWgk[jtw] * (std::abs(fv1[jtw]) + std::abs(fv2[jtw]));
  }
  for (int j = 0; j < 4; ++j) {
    const int jtwm1 = 2 * j;
    const double absc = half * kXgk[jtwm1];
    fv1[jtwm1] = f(center - absc);
    fv2[jtwm1] = f(center + absc);
    const double fsum = fv1[jtwm1] + fv2[jtwm1];
    resk += kWgk[jtwm1] * fsum;
    resabs += kWgk[jtwm1] * (std::abs(fv1[jtwm1]) + std::abs(fv2[jtwm1]));
  }
  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  resabs *= std::abs(half);
  resasc *= std::abs(half);

  double err = std::abs((resk - resg) * half) * 200.0;
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(err / resasc, 1.5));
  const double eps = std::numeric_limits<double>::epsilon();
  const double minval = std::numeric_limits<double>::min();
  if (resabs > minval / (50.0 * eps)) err = std::max(err, 50.0 * eps * resabs);
  return {resk * half, err};
}

struct Segment {
  double lo, hi, value, error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

}  // namespace

double integrate_finite(const std::function<double(double)>& f, double lo, double hi,
                        const QuadratureSpec& spec) {
  if (lo == hi) return 0.0;
  double sign = 1.0;
  if (lo > hi) {
    std::swap(lo, hi);
    sign = -1.0;
  }

  auto checked_panel = [&f](double a, double b) {
    PanelEstimate est = gauss_kronrod_15(f, a, b);
    if (!std::isfinite(est.value))
      throw NumericFailure("integrate_finite: integrand produced a non-finite value",
                           est.value, std::numeric_limits<double>::infinity());
    return est;
  };

  PanelEstimate first = checked_panel(lo, hi);
  std::priority_queue<Segment> segments;
  segments.push({lo, hi, first.value, first.error});
  double total = first.value;
  double total_err = first.error;
  int used = 1;

  auto tolerance = [&](double estimate) {
    return std::max(spec.abs_tol, spec.rel_tol * std::abs(estimate));
  };

  while (total_err > tolerance(total)) {
    if (used >= spec.max_subdivisions || !std::isfinite(total)) {
      throw NumericFailure("integrate_finite: subdivision budget exhausted", sign * total,
                           total_err);
    }
    Segment worst = segments.top();
    segments.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (mid <= worst.lo || mid >= worst.hi) {
      // Interval at machine resolution; keep its estimate and stop refining it.
      total_err -= worst.error;
      segments.push({worst.lo, worst.hi, worst.value, 0.0});
      continue;
    }
    PanelEstimate left = checked_panel(worst.lo, mid);
    PanelEstimate right = checked_panel(mid, worst.hi);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    segments.push({worst.lo, mid, left.value, left.error});
    segments.push({mid, worst.hi, right.value, right.error});
    ++used;
  }
  return sign * total;
}

double integrate_semi_infinite(const std::function<double(double)>& f, double lo,
                               const QuadratureSpec& spec) {
  auto remapped = [&f, lo](double t) {
    const double u = 1.0 - t;
    if (u <= 0.0) return 0.0;
    const double x = lo + t / u;
    if (!std::isfinite(x)) return 0.0;
    const double v = f(x) / (u * u);
    return std::isfinite(v) ? v : 0.0;
  };
  return integrate_finite(remapped, 0.0, 1.0, spec);
}

std::vector<double> cumulative_integral(const std::function<double(double)>& f,
                                        const std::vector<double>& grid,
                                        const QuadratureSpec& spec) {
  if (grid.empty()) return {};
  std::vector<double> out(grid.size(), 0.0);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i] < grid[i - 1])
      throw std::invalid_argument("cumulative_integral: grid must be ascending");
    out[i] = out[i - 1] + integrate_finite(f, grid[i - 1], grid[i], spec);
  }
  return out;
}

}  // namespace ftr::specfun
