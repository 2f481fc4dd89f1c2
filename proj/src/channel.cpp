#include "ftr/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ftr/hypergeometric.hpp"

namespace ftr::channel {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

void require_nonnegative(double x, const char* who) {
  if (!(x >= 0.0)) throw std::invalid_argument(std::string(who) + ": x must be >= 0");
}

// Conditional RS CDF written directly from the invariant FTR quantities,
// so the theta-average shares one exp factor structure with Eq-style forms.
double rs_cdf_phi2_raw(double x, double gamma_bar, double m, double k_r) {
  const double c = (1.0 + k_r) / gamma_bar;
  return c * x * std::exp(m * (std::log(m) - std::log(m + k_r))) *
         specfun::phi2_bivariate(1.0 - m, m, 2.0, -c * x, -c * m * x / (m + k_r));
}

}  // namespace

double log_rs_pdf(double x, const RsParams& p) {
  require_nonnegative(x, "rs_pdf");
  const double m = p.m();
  const double kr = p.k_r();
  const double c = (1.0 + kr) / p.gamma_bar();
  const double d = kr * c / (m + kr);  // series growth rate, strictly < c
  return m * (std::log(m) - std::log(m + kr)) + std::log(c) - c * x +
         specfun::log_kummer_1f1(m, 1.0, d * x);
}

double rs_pdf(double x, const RsParams& p) { return std::exp(log_rs_pdf(x, p)); }

double rs_cdf(double x, const RsParams& p) {
  require_nonnegative(x, "rs_cdf");
  if (x == 0.0) return 0.0;
  const double mass =
      specfun::integrate_finite([&p](double t) { return rs_pdf(t, p); }, 0.0, x);
  return clamp01(mass);
}

double rs_cdf_phi2(double x, const RsParams& p) {
  require_nonnegative(x, "rs_cdf_phi2");
  if (x == 0.0) return 0.0;
  return clamp01(rs_cdf_phi2_raw(x, p.gamma_bar(), p.m(), p.k_r()));
}

RsParams conditional_rs(const FtrParams& p, double theta) {
  const double k_theta = std::max(0.0, p.k() * (1.0 + p.delta() * std::cos(theta)));
  const double gamma_theta = 2.0 * p.sigma2() * (1.0 + k_theta);
  // Mixture invariance: gamma_bar(theta)/(1+K_r(theta)) == gamma_bar/(1+K).
  const double lhs = gamma_theta / (1.0 + k_theta);
  const double rhs = p.gamma_bar() / (1.0 + p.k());
  if (std::abs(lhs - rhs) > 8.0 * std::numeric_limits<double>::epsilon() * rhs)
    throw std::logic_error("conditional_rs: mixture invariance violated");
  return RsParams(gamma_theta, p.m(), k_theta);
}

namespace detail {

double gmgf_fault_nudge = 0.0;

bool is_integer_order(double n) {
  return std::abs(n - std::round(n)) < 1e-9 && std::round(n) >= 0.0;
}

namespace {

double gl_log_average(const std::function<double(double)>& log_f, int order) {
  const specfun::GaussLegendreRule& rule = specfun::gauss_legendre_rule(order);
  const double center = 0.5 * M_PI;
  const double half = 0.5 * M_PI;
  specfun::LogSum acc;
  for (int i = 0; i < order; ++i) {
    const double w = rule.weights[i] * half;
    acc.add(std::log(w) + log_f(center + half * rule.nodes[i]));
  }
  return acc.log() - std::log(M_PI);
}

}  // namespace

double theta_average_log(const std::function<double(double)>& log_f) {
  const double coarse = gl_log_average(log_f, 100);
  const double fine = gl_log_average(log_f, 200);
  if (coarse == kNegInf && fine == kNegInf) return kNegInf;
  if (std::abs(coarse - fine) <= 1e-9) return fine;

  // Disagreement: refine adaptively on the linear scale, shifted by the peak.
  const double peak = std::isfinite(fine) ? fine : coarse;
  if (!std::isfinite(peak)) return kNegInf;
  const double integral = specfun::integrate_finite(
      [&log_f, peak](double theta) { return std::exp(log_f(theta) - peak); }, 0.0,
      M_PI);
  return peak + std::log(integral / M_PI);
}

}  // namespace detail

double ftr_pdf(double x, const FtrParams& p) {
  require_nonnegative(x, "ftr_pdf");
  const double log_pdf = detail::theta_average_log(
      [x, &p](double theta) { return log_rs_pdf(x, conditional_rs(p, theta)); });
  return std::exp(log_pdf);
}

double ftr_cdf(double x, const FtrParams& p) {
  require_nonnegative(x, "ftr_cdf");
  if (x == 0.0) return 0.0;
  const double mass =
      specfun::integrate_finite([&p](double t) { return ftr_pdf(t, p); }, 0.0, x);
  return clamp01(mass);
}

double ftr_cdf_phi2(double x, const FtrParams& p) {
  require_nonnegative(x, "ftr_cdf_phi2");
  if (x == 0.0) return 0.0;
  const double value = specfun::integrate_gauss_legendre(
      [x, &p](double theta) {
        const RsParams cond = conditional_rs(p, theta);
        return rs_cdf_phi2_raw(x, cond.gamma_bar(), cond.m(), cond.k_r());
      },
      0.0, M_PI, 200);
  return clamp01(value / M_PI);
}

double log_ftr_gmgf_conditional(const GmgfQuery& q, double theta, const FtrParams& p) {
  const double m = p.m();
  const double big_k = p.k();
  const double gb = p.gamma_bar();
  const double kappa = std::max(0.0, big_k * (1.0 + p.delta() * std::cos(theta)));
  const double scale = 1.0 + big_k - gb * q.s;
  const double denom = m * (1.0 + big_k) - (m + kappa) * gb * q.s;
  const double z_neg = -(1.0 + big_k) * kappa / denom;

  const double order = detail::is_integer_order(q.n) ? std::round(q.n) : q.n;
  const double log_hyp = specfun::log_gauss_2f1(m, -order, 1.0, z_neg);

  return m * (std::log(m) + std::log(scale) - std::log(denom)) + std::log1p(big_k) +
         std::lgamma(q.n + 1.0) + q.n * std::log(gb) - (q.n + 1.0) * std::log(scale) +
         log_hyp;
}

double ftr_gmgf_conditional(const GmgfQuery& q, double theta, const FtrParams& p) {
  return std::exp(log_ftr_gmgf_conditional(q, theta, p));
}

double log_ftr_gmgf_closed_form(const GmgfQuery& q, const FtrParams& p) {
  if (!detail::is_integer_order(q.n))
    throw std::invalid_argument("ftr_gmgf_closed_form: order must be a nonnegative integer");
  const int n = static_cast<int>(std::round(q.n));
  const double m = p.m();
  const double big_k = p.k();
  const double delta = p.delta();
  const double gb = p.gamma_bar();
  const double s = q.s;

  const double scale = 1.0 + big_k - gb * s;
  const double denom = m * (1.0 + big_k) - (m + big_k - big_k * delta) * gb * s;
  const double z13 = 2.0 * big_k * delta * gb * s / denom;
  const double log_half = 0.5 * std::log(M_PI);

  specfun::LogSum acc;
  for (int l = 0; l <= n; ++l) {
    if (big_k == 0.0 && l > 0) break;
    const double base =
        specfun::log_binomial(n, l) + specfun::log_pochhammer(m, l) -
        std::lgamma(l + 1.0) + (l + 1.0) * std::log1p(big_k) +
        (l > 0 ? l * std::log(big_k) : 0.0) - (m + l) * std::log(denom);
    for (int j = 0; j <= l; ++j) {
      if (delta == 0.0 && j > 0) break;
      if (delta == 1.0 && j < l) continue;  // (1-delta)^{l-j} vanishes except j=l
      double term = base + specfun::log_binomial(l, j);
      if (l - j > 0) term += (l - j) * std::log1p(-delta);
      if (j > 0) term += j * std::log(2.0 * delta);
      term += std::lgamma(j + 0.5) - log_half - std::lgamma(j + 1.0);
      term += specfun::log_gauss_2f1(m + l, j + 0.5, j + 1.0, z13);
      acc.add(term);
    }
  }

  double log_value = std::lgamma(n + 1.0) + m * std::log(m) +
                     (m - n - 1.0) * std::log(scale) + n * std::log(gb) + acc.log();
  if (detail::gmgf_fault_nudge != 0.0) log_value += std::log1p(detail::gmgf_fault_nudge);
  return log_value;
}

double ftr_gmgf_closed_form(const GmgfQuery& q, const FtrParams& p) {
  return std::exp(log_ftr_gmgf_closed_form(q, p));
}

double log_ftr_gmgf_theta_quadrature(const GmgfQuery& q, const FtrParams& p) {
  return detail::theta_average_log(
      [&q, &p](double theta) { return log_ftr_gmgf_conditional(q, theta, p); });
}

double ftr_gmgf_theta_quadrature(const GmgfQuery& q, const FtrParams& p) {
  return std::exp(log_ftr_gmgf_theta_quadrature(q, p));
}

double log_ftr_gmgf(const GmgfQuery& q, const FtrParams& p) {
  if (detail::is_integer_order(q.n)) return log_ftr_gmgf_closed_form(q, p);
  return log_ftr_gmgf_theta_quadrature(q, p);
}

double ftr_gmgf(const GmgfQuery& q, const FtrParams& p) {
  return std::exp(log_ftr_gmgf(q, p));
}

double ftr_moment(double n, const FtrParams& p) { return ftr_gmgf(GmgfQuery(n, 0.0), p); }

double appendix_i1(const I1Args& args) {
  const double z = -2.0 * args.beta / (1.0 - args.beta);
  const double sqrt_pi = std::sqrt(M_PI);
  double binom = 1.0;  // C(P1, q), updated incrementally
  double sum = 0.0;
  for (int j = 0; j <= args.p1; ++j) {
    if (j > 0) binom *= static_cast<double>(args.p1 - j + 1) / j;
    const double coeff = binom * std::pow(2.0 * args.alpha, j) *
                         std::pow(1.0 - args.alpha, args.p1 - j);
    if (coeff == 0.0) continue;
    const double gamma_ratio = std::exp(std::lgamma(j + 0.5) - std::lgamma(j + 1.0));
    sum += coeff * sqrt_pi * gamma_ratio * specfun::gauss_2f1(args.p2, j + 0.5, j + 1.0, z);
  }
  return sum * std::exp(-args.p2 * std::log1p(-args.beta));
}

}  // namespace ftr::channel
