#include "ftr/commands.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <stdexcept>

#include "ftr/hypergeometric.hpp"
#include "ftr/quadrature.hpp"

namespace ftr::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void stamp_common(CurveTable& table, const char* command) {
  table.set_meta("tool", std::string("ftrchan"));
  table.set_meta("command", std::string(command));
}

void stamp_tolerances(CurveTable& table) {
  const specfun::QuadratureSpec defaults;
  table.set_meta("abs_tol", defaults.abs_tol);
  table.set_meta("rel_tol", defaults.rel_tol);
}

void stamp_grid(CurveTable& table, const GridSpec& grid) {
  table.set_meta("grid_lo", grid.lo);
  table.set_meta("grid_hi", grid.hi);
  table.set_meta("grid_step", grid.step);
}

void stamp_log_grid(CurveTable& table, const LogGridSpec& grid) {
  table.set_meta("log_grid_lo", grid.lo);
  table.set_meta("log_grid_hi", grid.hi);
  table.set_meta("log_grid_points_per_decade",
                 static_cast<std::uint64_t>(grid.points_per_decade));
}

void stamp_fading(CurveTable& table, double gamma_bar, double m, double k, double delta) {
  table.set_meta("gamma_bar", gamma_bar);
  table.set_meta("m", m);
  table.set_meta("k", k);
  table.set_meta("delta", delta);
}

std::vector<double> fig1_m_values() { return {1.5, 3.0}; }
std::vector<double> fig2_lambdas() { return {2.0, 5.0, 50.0}; }
std::vector<double> fig2_z_bars() { return {1.0, 5.0}; }

// CDF sampled along an ascending grid: one adaptive integral up to grid[0],
// then panel-wise accumulation.
std::vector<double> cdf_along_grid(const std::function<double(double)>& pdf,
                                   const std::function<double(double)>& cdf_at,
                                   const std::vector<double>& grid) {
  std::vector<double> out = specfun::cumulative_integral(pdf, grid);
  const double head = grid.empty() || grid.front() == 0.0 ? 0.0 : cdf_at(grid.front());
  for (double& v : out) v = std::min(1.0, std::max(0.0, v + head));
  return out;
}

}  // namespace

std::vector<double> linear_grid(const GridSpec& spec) {
  if (!(spec.step > 0.0)) throw std::invalid_argument("grid: step must be > 0");
  if (!(spec.hi >= spec.lo)) throw std::invalid_argument("grid: hi must be >= lo");
  const int count = static_cast<int>(std::floor((spec.hi - spec.lo) / spec.step + 1e-9)) + 1;
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) out[i] = spec.lo + i * spec.step;
  return out;
}

std::vector<double> log_grid_points(const LogGridSpec& spec) {
  if (!(spec.lo > 0.0) || !(spec.hi > spec.lo))
    throw std::invalid_argument("log grid: need 0 < lo < hi");
  if (spec.points_per_decade < 1)
    throw std::invalid_argument("log grid: points_per_decade must be >= 1");
  const double decades = std::log10(spec.hi / spec.lo);
  const int count = static_cast<int>(std::round(decades * spec.points_per_decade)) + 1;
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i)
    out[i] = spec.lo * std::pow(10.0, static_cast<double>(i) / spec.points_per_decade);
  out.back() = spec.hi;
  return out;
}

CurveTable cmd_pdf(const RunConfig& cfg) {
  CurveTable table;
  stamp_common(table, "pdf");
  stamp_tolerances(table);
  const std::vector<double> xs = linear_grid(cfg.grid);

  if (cfg.preset == "fig1") {
    stamp_fading(table, 1.0, kNaN, 4.0, 0.2);
    table.metadata.erase(
        std::remove_if(table.metadata.begin(), table.metadata.end(),
                       [](const auto& kv) { return kv.first == "m"; }),
        table.metadata.end());
    table.set_meta("preset", std::string("fig1"));
    stamp_grid(table, cfg.grid);
    table.columns = {"x", "pdf_m1.5", "pdf_m3"};
    std::vector<channel::FtrParams> params;
    for (double m : fig1_m_values()) params.emplace_back(1.0, m, 4.0, 0.2);
    for (double x : xs)
      table.add_row({x, channel::ftr_pdf(x, params[0]), channel::ftr_pdf(x, params[1])});
    return table;
  }

  table.set_meta("model", cfg.model);
  stamp_fading(table, cfg.gamma_bar, cfg.m, cfg.k, cfg.delta);
  stamp_grid(table, cfg.grid);
  table.columns = {"x", "pdf"};
  if (cfg.model == "rs") {
    const channel::RsParams p(cfg.gamma_bar, cfg.m, cfg.k);
    for (double x : xs) table.add_row({x, channel::rs_pdf(x, p)});
  } else if (cfg.model == "ftr") {
    const channel::FtrParams p(cfg.gamma_bar, cfg.m, cfg.k, cfg.delta);
    for (double x : xs) table.add_row({x, channel::ftr_pdf(x, p)});
  } else {
    throw std::invalid_argument("pdf: model must be ftr or rs");
  }
  return table;
}

CurveTable cmd_cdf(const RunConfig& cfg) {
  CurveTable table;
  stamp_common(table, "cdf");
  stamp_tolerances(table);
  table.set_meta("model", cfg.model);
  stamp_fading(table, cfg.gamma_bar, cfg.m, cfg.k, cfg.delta);
  stamp_grid(table, cfg.grid);
  table.columns = {"x", "cdf"};
  const std::vector<double> xs = linear_grid(cfg.grid);

  std::vector<double> values;
  if (cfg.model == "rs") {
    const channel::RsParams p(cfg.gamma_bar, cfg.m, cfg.k);
    values = cdf_along_grid([&p](double t) { return channel::rs_pdf(t, p); },
                            [&p](double x) { return channel::rs_cdf(x, p); }, xs);
  } else if (cfg.model == "ftr") {
    const channel::FtrParams p(cfg.gamma_bar, cfg.m, cfg.k, cfg.delta);
    values = cdf_along_grid([&p](double t) { return channel::ftr_pdf(t, p); },
                            [&p](double x) { return channel::ftr_cdf(x, p); }, xs);
  } else {
    throw std::invalid_argument("cdf: model must be ftr or rs");
  }
  for (std::size_t i = 0; i < xs.size(); ++i) table.add_row({xs[i], values[i]});
  return table;
}

CurveTable cmd_gmgf(const RunConfig& cfg) {
  CurveTable table;
  stamp_common(table, "gmgf");
  stamp_tolerances(table);
  stamp_fading(table, cfg.gamma_bar, cfg.m, cfg.k, cfg.delta);
  table.columns = {"n", "s", "gmgf", "closed_form", "gmgf_theta_quadrature"};
  const channel::FtrParams p(cfg.gamma_bar, cfg.m, cfg.k, cfg.delta);
  for (double n : cfg.orders) {
    for (double s : cfg.s_values) {
      const channel::GmgfQuery q(n, s);
      const bool integer_order = channel::detail::is_integer_order(n);
      const double primary = channel::ftr_gmgf(q, p);
      const double alt =
          integer_order ? channel::ftr_gmgf_theta_quadrature(q, p) : kNaN;
      table.add_row({n, s, primary, integer_order ? 1.0 : 0.0, alt});
    }
  }
  return table;
}

CurveTable cmd_composite(const RunConfig& cfg) {
  CurveTable table;
  stamp_common(table, "composite");
  stamp_tolerances(table);
  const std::vector<double> xs = linear_grid(cfg.grid);

  auto emit_combo = [&table](const composite::CompositeParams& params, bool amplitude,
                             const std::vector<double>& grid, bool long_format) {
    // CDF along the (possibly squared) abscissa grid.
    std::vector<double> zs(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      zs[i] = amplitude ? grid[i] * grid[i] : grid[i];
    std::vector<double> cdf(zs.size());
    if (channel::detail::is_integer_order(params.lambda())) {
      for (std::size_t i = 0; i < zs.size(); ++i)
        cdf[i] = composite::composite_cdf_sum(zs[i], params);
    } else {
      cdf = cdf_along_grid(
          [&params](double t) { return composite::composite_pdf(t, params); },
          [&params](double z) { return composite::composite_cdf_quadrature(z, params); },
          zs);
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double pdf = amplitude ? composite::amplitude_pdf(grid[i], params)
                                   : composite::composite_pdf(zs[i], params);
      if (long_format)
        table.add_row({params.lambda(), params.z_bar(), grid[i], pdf, cdf[i]});
      else
        table.add_row({grid[i], pdf, cdf[i]});
    }
  };

  if (cfg.preset == "fig2") {
    table.set_meta("preset", std::string("fig2"));
    stamp_fading(table, 1.0, 2.0, 4.0, 0.2);
    table.set_meta("domain", std::string("amplitude"));
    stamp_grid(table, cfg.grid);
    table.columns = {"lambda", "z_bar", "r", "pdf", "cdf"};
    for (double lambda : fig2_lambdas())
      for (double z_bar : fig2_z_bars())
        emit_combo(composite::CompositeParams::make(z_bar, 2.0, 4.0, 0.2, lambda), true,
                   xs, true);
    return table;
  }

  const bool amplitude = cfg.domain == "amplitude";
  if (!amplitude && cfg.domain != "power")
    throw std::invalid_argument("composite: domain must be power or amplitude");
  stamp_fading(table, 1.0, cfg.m, cfg.k, cfg.delta);
  table.set_meta("lambda", cfg.lambda);
  table.set_meta("z_bar", cfg.z_bar);
  table.set_meta("domain", cfg.domain);
  stamp_grid(table, cfg.grid);
  table.columns = {amplitude ? "r" : "z", "pdf", "cdf"};
  emit_combo(composite::CompositeParams::make(cfg.z_bar, cfg.m, cfg.k, cfg.delta,
                                              cfg.lambda),
             amplitude, xs, false);
  return table;
}

CurveTable cmd_outage(const RunConfig& cfg) {
  CurveTable table;
  stamp_common(table, "outage");
  stamp_tolerances(table);

  double delta = cfg.delta;
  double lambda = cfg.lambda;
  std::vector<double> m_values = cfg.m_values.empty() ? std::vector<double>{cfg.m}
                                                      : cfg.m_values;
  std::vector<double> k_values = cfg.k_values.empty() ? std::vector<double>{cfg.k}
                                                      : cfg.k_values;
  if (cfg.preset == "fig3") {
    table.set_meta("preset", std::string("fig3"));
    delta = 0.3;
    lambda = 2.0;
    m_values = {2.0, 10.0};
    k_values = {4.0, 15.0};
  }
  table.set_meta("delta", delta);
  table.set_meta("lambda", lambda);
  table.set_meta("z_bar", cfg.z_bar);
  stamp_log_grid(table, cfg.log_grid);
  table.columns = {"m", "k", "ratio", "outage_exact", "outage_asymptotic"};

  const std::vector<double> ratios = log_grid_points(cfg.log_grid);
  for (double m : m_values) {
    for (double k : k_values) {
      const auto params = composite::CompositeParams::make(cfg.z_bar, m, k, delta, lambda);
      for (double ratio : ratios) {
        const composite::OutageQuery query(ratio, 1.0);
        table.add_row({m, k, ratio, composite::outage_exact(query, params),
                       composite::outage_asymptotic(query, params)});
      }
    }
  }
  return table;
}

CurveTable cmd_simulate(const RunConfig& cfg) {
  CurveTable table;
  stamp_common(table, "simulate");
  table.set_meta("model", cfg.model);
  table.set_meta("samples", cfg.samples);
  table.set_meta("seed", cfg.seed);
  table.set_meta("streams", static_cast<std::uint64_t>(cfg.streams));

  const mcsim::SimConfig sim(cfg.samples, cfg.seed, cfg.streams);
  std::unique_ptr<mcsim::EmpiricalDistribution> dist;
  if (cfg.model == "composite") {
    stamp_fading(table, 1.0, cfg.m, cfg.k, cfg.delta);
    table.set_meta("lambda", cfg.lambda);
    table.set_meta("z_bar", cfg.z_bar);
    dist = std::make_unique<mcsim::EmpiricalDistribution>(mcsim::sample_composite(
        composite::CompositeParams::make(cfg.z_bar, cfg.m, cfg.k, cfg.delta, cfg.lambda),
        sim));
  } else if (cfg.model == "ftr") {
    stamp_fading(table, cfg.gamma_bar, cfg.m, cfg.k, cfg.delta);
    dist = std::make_unique<mcsim::EmpiricalDistribution>(mcsim::sample_ftr_power(
        channel::FtrParams(cfg.gamma_bar, cfg.m, cfg.k, cfg.delta), sim));
  } else {
    throw std::invalid_argument("simulate: model must be ftr or composite");
  }

  table.set_meta("sample_mean", dist->mean());
  table.set_meta("sample_second_moment", dist->moment(2));
  table.columns = {"quantile", "value"};
  const std::vector<double>& xs = dist->samples();
  const int q_count = 1000;
  for (int i = 0; i <= q_count; ++i) {
    const double p = static_cast<double>(i) / q_count;
    const std::size_t idx = std::min<std::size_t>(
        xs.size() - 1, static_cast<std::size_t>(std::llround(p * (xs.size() - 1))));
    table.add_row({p, xs[idx]});
  }
  return table;
}

double CdfInterpolant::operator()(double x) const {
  if (x <= grid.front()) return values.front();
  if (x >= grid.back()) return values.back();
  const auto it = std::upper_bound(grid.begin(), grid.end(), x);
  const std::size_t hi = static_cast<std::size_t>(it - grid.begin());
  const std::size_t lo = hi - 1;
  const double t = (x - grid[lo]) / (grid[hi] - grid[lo]);
  return values[lo] + t * (values[hi] - values[lo]);
}

CdfInterpolant ftr_cdf_interpolant(const channel::FtrParams& p, double hi, int panels) {
  if (!(hi > 0.0) || panels < 1)
    throw std::invalid_argument("ftr_cdf_interpolant: need hi > 0 and panels >= 1");
  CdfInterpolant out;
  out.grid.resize(panels + 1);
  for (int i = 0; i <= panels; ++i) out.grid[i] = hi * i / panels;
  const auto& rule = specfun::gauss_legendre_rule(5);
  out.values.assign(panels + 1, 0.0);
  double acc = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double a = out.grid[i], b = out.grid[i + 1];
    const double center = 0.5 * (a + b), half = 0.5 * (b - a);
    double panel = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j)
      panel += rule.weights[j] * channel::ftr_pdf(center + half * rule.nodes[j], p);
    acc += panel * half;
    out.values[i + 1] = std::min(1.0, acc);
  }
  return out;
}

CdfInterpolant composite_cdf_interpolant(const composite::CompositeParams& c, double lo,
                                         double hi, int points) {
  if (!(lo > 0.0) || !(hi > lo) || points < 2)
    throw std::invalid_argument("composite_cdf_interpolant: need 0 < lo < hi, points >= 2");
  CdfInterpolant out;
  out.grid.push_back(0.0);
  out.values.push_back(0.0);
  const double ratio = std::log(hi / lo);
  for (int i = 0; i < points; ++i) {
    const double z = lo * std::exp(ratio * i / (points - 1));
    out.grid.push_back(z);
    out.values.push_back(composite::composite_cdf(z, c));
  }
  return out;
}

namespace {

struct CheckList {
  CurveTable table;

  CheckList() {
    table.columns = {"measured", "threshold", "pass"};
  }

  void add(const std::string& name, double measured, double threshold) {
    const bool ok = std::isfinite(measured) && measured <= threshold;
    table.add_labeled_row(name, {measured, threshold, ok ? 1.0 : 0.0});
  }
};

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Restores the fault hook even if a check throws.
struct FaultGuard {
  explicit FaultGuard(bool enable) {
    channel::detail::gmgf_fault_nudge = enable ? 1e-3 : 0.0;
  }
  ~FaultGuard() { channel::detail::gmgf_fault_nudge = 0.0; }
};

}  // namespace

bool all_checks_passed(const CurveTable& validate_table) {
  const auto pass_col =
      std::find(validate_table.columns.begin(), validate_table.columns.end(), "pass");
  if (pass_col == validate_table.columns.end()) return false;
  const std::size_t idx = pass_col - validate_table.columns.begin();
  for (const auto& row : validate_table.rows)
    if (row[idx] != 1.0) return false;
  return !validate_table.rows.empty();
}

CurveTable cmd_validate(const RunConfig& cfg) {
  const FaultGuard guard(cfg.inject_fault);
  CheckList checks;
  stamp_common(checks.table, "validate");
  checks.table.set_meta("samples", cfg.samples);
  checks.table.set_meta("seed", cfg.seed);
  checks.table.set_meta("fault_injected", std::string(cfg.inject_fault ? "yes" : "no"));

  // --- special functions ---
  {
    const double gl = specfun::integrate_gauss_legendre(
        [](double x) { return std::pow(x, 15) - 3.0 * std::pow(x, 7) + 2.0 * x * x; },
        0.0, 1.0, 8);
    checks.add("specfun.gauss_legendre_exactness",
               std::abs(gl - (1.0 / 16.0 - 3.0 / 8.0 + 2.0 / 3.0)), 1e-14);

    checks.add("specfun.kummer_identity",
               rel_diff(specfun::kummer_1f1(2.0, 1.0, 0.5), std::exp(0.5) * 1.5), 1e-12);
    checks.add("specfun.gauss_identity",
               rel_diff(specfun::gauss_2f1(1.0, 1.0, 2.0, -1.0), std::log(2.0)), 1e-12);
    checks.add("specfun.phi2_reduction",
               rel_diff(specfun::phi2_bivariate(-1.5, 2.5, 2.0, 0.0, -0.5),
                        specfun::kummer_1f1(2.5, 2.0, -0.5)),
               1e-10);
  }

  // --- channel ---
  {
    double worst = 0.0;
    for (double m : {1.0, 2.5})
      for (double k : {0.0, 4.0})
        for (double delta : {0.2, 1.0}) {
          const channel::FtrParams p(1.0, m, k, delta);
          const double mass = specfun::integrate_semi_infinite(
              [&p](double x) { return channel::ftr_pdf(x, p); }, 0.0);
          worst = std::max(worst, std::abs(mass - 1.0));
        }
    checks.add("channel.ftr_normalization", worst, 1e-8);
  }
  {
    double worst = 0.0;
    const std::vector<channel::FtrParams> param_sets = {
        channel::FtrParams(1.0, 2.0, 4.0, 0.2), channel::FtrParams(1.0, 2.5, 15.0, 0.7)};
    for (const auto& p : param_sets)
      for (double n : {0.0, 2.0, 5.0})
        for (double s : {0.0, -1.0, -10.0}) {
          const channel::GmgfQuery q(n, s);
          const double closed = channel::ftr_gmgf_closed_form(
              channel::GmgfQuery(std::round(n), s), p);
          const double theta = channel::ftr_gmgf_theta_quadrature(q, p);
          const double direct = specfun::integrate_semi_infinite(
              [&](double x) {
                return std::pow(x, n) * std::exp(s * x) * channel::ftr_pdf(x, p);
              },
              0.0);
          worst = std::max({worst, rel_diff(closed, theta), rel_diff(closed, direct),
                            rel_diff(theta, direct)});
        }
    checks.add("channel.gmgf_triple_agreement", worst, 1e-7);
  }
  {
    double worst = 0.0;
    for (int p1 : {0, 2})
      for (double p2 : {0.5, 2.0})
        for (double alpha : {0.0, 0.5})
          for (double beta : {-0.3, 0.6}) {
            const channel::I1Args args(p1, p2, alpha, beta);
            const double closed = channel::appendix_i1(args);
            const double direct = specfun::integrate_finite(
                [&](double t) {
                  return std::pow(1.0 + alpha * std::cos(t), p1) /
                         std::pow(1.0 + beta * std::cos(t), p2);
                },
                0.0, M_PI);
            worst = std::max(worst, rel_diff(closed, direct));
          }
    checks.add("channel.i1_quadrature", worst, 1e-9);
  }
  {
    const channel::FtrParams ftr0(1.0, 2.5, 4.0, 0.0);
    const channel::RsParams rs0(1.0, 2.5, 4.0);
    const channel::FtrParams ftr_k0(2.0, 2.5, 0.0, 0.5);
    double worst_delta0 = 0.0, worst_k0 = 0.0;
    for (int i = 1; i <= 50; ++i) {
      const double x = 0.2 * i;
      worst_delta0 =
          std::max(worst_delta0, rel_diff(channel::ftr_pdf(x, ftr0), channel::rs_pdf(x, rs0)));
      worst_k0 = std::max(
          worst_k0, rel_diff(channel::ftr_pdf(x, ftr_k0), std::exp(-x / 2.0) / 2.0));
    }
    checks.add("channel.delta0_degeneracy", worst_delta0, 1e-10);
    checks.add("channel.k0_degeneracy", worst_k0, 1e-10);
  }
  {
    const channel::FtrParams p(1.0, 2.0, 4.0, 0.2);
    double worst = 0.0;
    for (double x : {0.2, 0.5, 1.0, 2.0, 4.0})
      worst = std::max(worst,
                       std::abs(channel::ftr_cdf(x, p) - channel::ftr_cdf_phi2(x, p)));
    checks.add("channel.cdf_consistency", worst, 1e-7);
  }

  // --- composite ---
  {
    const auto c = composite::CompositeParams::make(1.0, 2.0, 4.0, 0.2, 2.5);
    const double mass = specfun::integrate_semi_infinite(
        [&c](double z) { return composite::composite_pdf(z, c); }, 0.0);
    checks.add("composite.normalization", std::abs(mass - 1.0), 1e-7);
  }
  {
    const auto c = composite::CompositeParams::make(2.0, 2.0, 4.0, 0.2, 5.0);
    const double mean = specfun::integrate_semi_infinite(
        [&c](double z) { return z * composite::composite_pdf(z, c); }, 0.0);
    checks.add("composite.mean", std::abs(mean / c.z_bar() - 1.0), 1e-5);
  }
  {
    const auto c = composite::CompositeParams::make(1.0, 2.0, 4.0, 0.2, 2.0);
    double worst = 0.0;
    for (double z : {0.3, 1.0, 3.0})
      worst = std::max(worst, std::abs(composite::composite_cdf_sum(z, c) -
                                       composite::composite_cdf_quadrature(z, c)));
    checks.add("composite.cdf_consistency", worst, 1e-7);
  }
  {
    const auto c = composite::CompositeParams::make(1.0, 2.0, 4.0, 0.3, 2.0);
    const composite::OutageQuery q(1e-4, 1.0);
    const double ratio =
        composite::outage_exact(q, c) / composite::outage_asymptotic(q, c);
    checks.add("composite.outage_asymptote", std::abs(ratio - 1.0), 0.05);

    const double p_lo = composite::outage_exact(composite::OutageQuery(1e-5, 1.0), c);
    const double p_hi = composite::outage_exact(composite::OutageQuery(1e-3, 1.0), c);
    const double slope = std::log(p_hi / p_lo) / std::log(1e-3 / 1e-5);
    checks.add("composite.outage_slope", std::abs(slope - 1.0), 0.02);
  }

  // --- Monte Carlo ---
  {
    double worst = 0.0;
    for (double k : {0.5, 4.0, 15.0, 50.0})
      for (double delta : {0.0, 0.2, 0.7, 1.0}) {
        const auto pair = mcsim::solve_specular_amplitudes(k, delta, 0.5);
        const double k_back = (pair.v1 * pair.v1 + pair.v2 * pair.v2) / (2.0 * 0.5);
        worst = std::max(worst, rel_diff(k_back, k));
        if (k > 0.0) {
          const double delta_back =
              2.0 * pair.v1 * pair.v2 / (pair.v1 * pair.v1 + pair.v2 * pair.v2);
          worst = std::max(worst, std::abs(delta_back - delta));
        }
      }
    checks.add("mcsim.specular_roundtrip", worst, 1e-12);
  }
  {
    const channel::FtrParams p(1.0, 2.0, 4.0, 0.2);
    const mcsim::SimConfig sim(cfg.samples, cfg.seed, cfg.streams);
    const auto dist = mcsim::sample_ftr_power(p, sim);
    const double ks_threshold = 2.5 / std::sqrt(static_cast<double>(cfg.samples));

    const CdfInterpolant cdf = ftr_cdf_interpolant(p, 40.0, 2048);
    checks.add("mcsim.ftr_ks", mcsim::ks_distance(dist, cdf), ks_threshold);

    const double se = std::sqrt((dist.moment(2) - std::pow(dist.mean(), 2)) /
                                static_cast<double>(cfg.samples));
    checks.add("mcsim.ftr_mean", std::abs(dist.mean() - 1.0), 4.0 * se);

    const channel::FtrParams rayleigh(1.0, 2.0, 0.0, 0.0);
    const auto ray = mcsim::sample_ftr_power(rayleigh, mcsim::SimConfig(
                                                 cfg.samples, cfg.seed + 1, cfg.streams));
    checks.add("mcsim.rayleigh_ks",
               mcsim::ks_distance(ray, [](double x) { return 1.0 - std::exp(-x); }),
               ks_threshold);

    const auto c = composite::CompositeParams::make(1.0, 2.0, 4.0, 0.2, 2.0);
    const auto comp = mcsim::sample_composite(
        c, mcsim::SimConfig(cfg.samples, cfg.seed + 2, cfg.streams));
    const CdfInterpolant comp_cdf = composite_cdf_interpolant(c, 1e-4, 2e3, 2048);
    checks.add("mcsim.composite_ks", mcsim::ks_distance(comp, comp_cdf), ks_threshold);
  }

  return checks.table;
}

}  // namespace ftr::cli
