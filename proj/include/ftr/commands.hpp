#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ftr/composite.hpp"
#include "ftr/curve_table.hpp"
#include "ftr/params.hpp"
#include "ftr/simulate.hpp"

namespace ftr::cli {

/// Linear abscissa grid lo, lo+step, ..., hi (inclusive up to rounding).
struct GridSpec {
  double lo = 0.0;
  double hi = 6.0;
  double step = 0.05;
};

/// Logarithmic abscissa grid with a fixed point density per decade.
struct LogGridSpec {
  double lo = 1e-5;
  double hi = 1.0;
  int points_per_decade = 10;
};

std::vector<double> linear_grid(const GridSpec& spec);
std::vector<double> log_grid_points(const LogGridSpec& spec);

/// One fully-resolved invocation of a subcommand.
struct RunConfig {
  std::string model = "ftr";     // pdf/cdf/simulate: ftr | rs | composite
  std::string domain = "power";  // composite: power | amplitude
  double gamma_bar = 1.0;
  double m = 2.0;
  double k = 4.0;
  double delta = 0.2;
  double lambda = 2.0;
  double z_bar = 1.0;
  std::vector<double> m_values;  // outage (m, K) cross product; empty -> {m}
  std::vector<double> k_values;
  GridSpec grid;
  bool use_log_grid = false;
  LogGridSpec log_grid;
  std::vector<double> orders = {0, 1, 2, 3, 4, 5};
  std::vector<double> s_values = {0.0, -0.1, -1.0, -10.0};
  std::uint64_t samples = 1000000;
  std::uint64_t seed = mcsim::kDefaultSeed;
  unsigned streams = 4;
  std::string preset;  // "", "fig1", "fig2", "fig3"
  bool inject_fault = false;
};

CurveTable cmd_pdf(const RunConfig& cfg);
CurveTable cmd_cdf(const RunConfig& cfg);
CurveTable cmd_gmgf(const RunConfig& cfg);
CurveTable cmd_composite(const RunConfig& cfg);
CurveTable cmd_outage(const RunConfig& cfg);
CurveTable cmd_simulate(const RunConfig& cfg);

/// Runs the cross-module invariant battery. Rows are labeled checks with
/// columns measured, threshold, pass.
CurveTable cmd_validate(const RunConfig& cfg);
bool all_checks_passed(const CurveTable& validate_table);

/// Piecewise-linear interpolant of a CDF on an ascending grid. Queries
/// outside the grid clamp to the end values.
struct CdfInterpolant {
  std::vector<double> grid;
  std::vector<double> values;

  double operator()(double x) const;
};

/// FTR CDF tabulated by panel-wise integration of the PDF on a uniform grid
/// over [0, hi].
CdfInterpolant ftr_cdf_interpolant(const channel::FtrParams& p, double hi, int panels);

/// Composite CDF tabulated pointwise on a log-spaced grid over [lo, hi],
/// with a linear ramp from (0, 0) below lo.
CdfInterpolant composite_cdf_interpolant(const composite::CompositeParams& c, double lo,
                                         double hi, int points);

}  // namespace ftr::cli
