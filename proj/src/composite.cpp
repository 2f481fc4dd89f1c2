#include "ftr/composite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ftr/hypergeometric.hpp"
#include "ftr/quadrature.hpp"

namespace ftr::composite {

namespace {

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

// Below this point the GMGF argument magnitude would leave the double range;
// the PDF has already reached its z -> 0 limit to machine precision.
double small_z_floor(const CompositeParams& c) { return c.z_bar() * 1e-250; }

double pdf_zero_limit(const CompositeParams& c) {
  const double lambda = c.lambda();
  return lambda / (lambda - 1.0) * channel::ftr_pdf(0.0, c.fading()) / c.z_bar();
}

}  // namespace

double log_composite_pdf(double z, const CompositeParams& c) {
  if (!(z >= 0.0)) throw std::invalid_argument("composite_pdf: z must be >= 0");
  if (z <= small_z_floor(c)) return std::log(pdf_zero_limit(c));
  const double lambda = c.lambda();
  const double zb = c.z_bar();
  const channel::GmgfQuery query(lambda, (1.0 - lambda) * zb / z);
  return lambda * (std::log(zb) + std::log(lambda - 1.0)) - (lambda + 1.0) * std::log(z) -
         std::lgamma(lambda) + channel::log_ftr_gmgf(query, c.fading());
}

double composite_pdf(double z, const CompositeParams& c) {
  return std::exp(log_composite_pdf(z, c));
}

double composite_cdf_sum(double z, const CompositeParams& c) {
  if (!channel::detail::is_integer_order(c.lambda()))
    throw std::invalid_argument("composite_cdf_sum: requires integer lambda");
  if (!(z >= 0.0)) throw std::invalid_argument("composite_cdf: z must be >= 0");
  if (z == 0.0) return 0.0;
  const int lambda = static_cast<int>(std::round(c.lambda()));
  const double zb = c.z_bar();
  const double s = (1.0 - lambda) * zb / z;
  const double log_ratio = std::log(zb) + std::log(lambda - 1.0) - std::log(z);
  specfun::LogSum acc;
  for (int n = 0; n < lambda; ++n) {
    acc.add(n * log_ratio - std::lgamma(n + 1.0) +
            channel::log_ftr_gmgf(channel::GmgfQuery(n, s), c.fading()));
  }
  return clamp01(std::exp(acc.log()));
}

double composite_cdf_quadrature(double z, const CompositeParams& c) {
  if (!(z >= 0.0)) throw std::invalid_argument("composite_cdf: z must be >= 0");
  if (z == 0.0) return 0.0;
  const double mass = specfun::integrate_finite(
      [&c](double t) { return composite_pdf(t, c); }, 0.0, z);
  return clamp01(mass);
}

double composite_cdf(double z, const CompositeParams& c) {
  if (channel::detail::is_integer_order(c.lambda())) return composite_cdf_sum(z, c);
  return composite_cdf_quadrature(z, c);
}

double amplitude_pdf(double r, const CompositeParams& c) {
  if (!(r >= 0.0)) throw std::invalid_argument("amplitude_pdf: r must be >= 0");
  if (r == 0.0) return 0.0;
  return 2.0 * r * composite_pdf(r * r, c);
}

double amplitude_cdf(double r, const CompositeParams& c) {
  if (!(r >= 0.0)) throw std::invalid_argument("amplitude_cdf: r must be >= 0");
  return composite_cdf(r * r, c);
}

double outage_exact(const OutageQuery& q, const CompositeParams& c) {
  return composite_cdf(c.z_bar() * q.gamma_th / q.gamma_bar_z, c);
}

double outage_asymptotic(const OutageQuery& q, const CompositeParams& c) {
  const double lambda = c.lambda();
  const double m = c.fading().m();
  const double k = c.fading().k();
  const double delta = c.fading().delta();
  const double arg = k > 0.0 ? (delta * delta) / ((m / k + 1.0) * (m / k + 1.0)) : 0.0;
  return lambda / (lambda - 1.0) * (1.0 + k) * std::exp(-m * std::log1p(k / m)) *
         specfun::gauss_2f1(0.5 * m, 0.5 * (1.0 + m), 1.0, arg) * q.gamma_th /
         q.gamma_bar_z;
}

}  // namespace ftr::composite
