#pragma once

#include <functional>

#include "ftr/params.hpp"
#include "ftr/quadrature.hpp"

namespace ftr::channel {

// ---------------------------------------------------------------------------
// Rician shadowed statistics (squared envelope / power domain)
// ---------------------------------------------------------------------------

/// Power PDF of the RS model,
///   f(x) = (m/(m+K_r))^m (1+K_r)/gb exp(-(1+K_r)x/gb)
///            1F1(m; 1; K_r(1+K_r)x / (gb(m+K_r))),
/// evaluated through its logarithm so the exp * 1F1 product stays finite far
/// into the tail (x up to ~1e4 gb).
double rs_pdf(double x, const RsParams& p);
double log_rs_pdf(double x, const RsParams& p);

/// CDF by adaptive integration of rs_pdf over [0, x]. Primary path.
double rs_cdf(double x, const RsParams& p);

/// CDF through the bivariate confluent hypergeometric series. Validation
/// path at moderate arguments.
double rs_cdf_phi2(double x, const RsParams& p);

// ---------------------------------------------------------------------------
// FTR statistics as a continuous RS mixture over the specular phase gap
// ---------------------------------------------------------------------------

/// RS parameters conditioned on the phase difference theta:
/// K_r(theta) = K (1 + delta cos theta) and mean power 2 sigma^2 (1 + K_r).
/// The ratio gamma_bar(theta)/(1+K_r(theta)) is invariant in theta; this is
/// checked on every call.
RsParams conditional_rs(const FtrParams& p, double theta);

/// FTR power PDF: average of the conditional RS PDF over theta in [0, pi],
/// 200-node Gauss-Legendre with a 100-node cross-check and adaptive fallback.
double ftr_pdf(double x, const FtrParams& p);

/// FTR CDF by adaptive integration of ftr_pdf over [0, x]. Primary path.
double ftr_cdf(double x, const FtrParams& p);

/// FTR CDF as the theta-average of the conditional Phi2 CDF form.
/// Validation path at moderate arguments.
double ftr_cdf_phi2(double x, const FtrParams& p);

// ---------------------------------------------------------------------------
// Generalized MGF  M^(n)(s) = E[gamma^n exp(s gamma)], s <= 0
// ---------------------------------------------------------------------------

/// GMGF of the conditional (RS) distribution at phase gap theta. Real order
/// n >= 0. Integer orders terminate the hypergeometric series exactly.
double ftr_gmgf_conditional(const GmgfQuery& q, double theta, const FtrParams& p);
double log_ftr_gmgf_conditional(const GmgfQuery& q, double theta, const FtrParams& p);

/// Unconditional GMGF. Integer order dispatches to the closed-form double
/// finite sum; non-integer order theta-averages the conditional closed form.
double ftr_gmgf(const GmgfQuery& q, const FtrParams& p);
double log_ftr_gmgf(const GmgfQuery& q, const FtrParams& p);

/// The two routes, individually addressable for cross-validation.
double ftr_gmgf_closed_form(const GmgfQuery& q, const FtrParams& p);
double log_ftr_gmgf_closed_form(const GmgfQuery& q, const FtrParams& p);
double ftr_gmgf_theta_quadrature(const GmgfQuery& q, const FtrParams& p);
double log_ftr_gmgf_theta_quadrature(const GmgfQuery& q, const FtrParams& p);

/// n-th moment: GMGF at s = 0.
double ftr_moment(double n, const FtrParams& p);

// ---------------------------------------------------------------------------
// Finite-range integral underlying the closed-form GMGF
// ---------------------------------------------------------------------------

/// I1 = int_0^pi (1 + alpha cos t)^P1 / (1 + beta cos t)^P2 dt, reduced to a
/// binomial sum of Gauss hypergeometric terms. Positive for positive
/// integrands.
double appendix_i1(const I1Args& args);

namespace detail {

/// Validation-harness hook: the closed-form GMGF is scaled by
/// (1 + gmgf_fault_nudge). Zero in normal operation; set only from a
/// single-threaded driver before computations start.
extern double gmgf_fault_nudge;

bool is_integer_order(double n);

/// log of (1/pi) * int_0^pi exp(log_f(theta)) dtheta. Gauss-Legendre at 100
/// and 200 nodes; falls back to adaptive integration if they disagree beyond
/// rel 1e-9.
double theta_average_log(const std::function<double(double)>& log_f);

}  // namespace detail

}  // namespace ftr::channel
