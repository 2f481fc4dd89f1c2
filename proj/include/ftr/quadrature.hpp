#pragma once

#include <functional>
#include <vector>

#include "ftr/numeric_error.hpp"

namespace ftr::specfun {

/// Tolerances and budget for the adaptive integrators. An estimate is
/// accepted once its error bound drops below max(abs_tol, rel_tol*|I|).
struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;

  QuadratureSpec() = default;
  QuadratureSpec(double abs, double rel, int max_sub);
};

/// Nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Returns the order-point Gauss-Legendre rule, computed once and cached.
/// Thread-safe.
const GaussLegendreRule& gauss_legendre_rule(int order);

/// Fixed-node Gauss-Legendre integral of f over [lo, hi]. Exact for
/// polynomials of degree <= 2*order - 1.
double integrate_gauss_legendre(const std::function<double(double)>& f, double lo,
                                double hi, int order = 200);

/// Adaptive Gauss-Kronrod (7-15) integration of f over [lo, hi].
/// Throws NumericFailure (carrying the running estimate and error bound)
/// if the subdivision budget is exhausted.
double integrate_finite(const std::function<double(double)>& f, double lo, double hi,
                        const QuadratureSpec& spec = {});

/// Integral of f over [lo, inf) for absolutely integrable f with eventual
/// exponential (or at least integrable algebraic) decay. Remaps to [0, 1)
/// via x = lo + t/(1-t) and integrates adaptively.
double integrate_semi_infinite(const std::function<double(double)>& f, double lo,
                               const QuadratureSpec& spec = {});

/// Partial integrals of f accumulated along an ascending grid:
/// out[i] = integral of f over [grid[0], grid[i]]. out[0] = 0.
std::vector<double> cumulative_integral(const std::function<double(double)>& f,
                                        const std::vector<double>& grid,
                                        const QuadratureSpec& spec = {});

}  // namespace ftr::specfun
