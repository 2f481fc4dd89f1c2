#pragma once

#include "ftr/channel.hpp"
#include "ftr/params.hpp"

namespace ftr::composite {

/// Inverse-gamma shadowing with unit mean: shape lambda > 1, scale lambda-1.
class ShadowParams {
 public:
  explicit ShadowParams(double lambda) : lambda_(lambda) {
    if (!(lambda > 1.0))
      throw std::invalid_argument("ShadowParams: shape lambda must be > 1 for unit mean");
  }

  double lambda() const { return lambda_; }
  double scale() const { return lambda_ - 1.0; }

 private:
  double lambda_;
};

/// Composite received power Z = z_bar * G * V with unit-mean shadowing G and
/// unit-mean FTR fast fading V.
class CompositeParams {
 public:
  CompositeParams(double z_bar, const channel::FtrParams& fading, ShadowParams shadow)
      : z_bar_(z_bar), fading_(fading), shadow_(shadow) {
    if (!(z_bar > 0.0))
      throw std::invalid_argument("CompositeParams: mean power z_bar must be > 0");
    if (std::abs(fading.gamma_bar() - 1.0) > 1e-12)
      throw std::invalid_argument(
          "CompositeParams: fading component must be power-normalized (gamma_bar = 1)");
  }

  /// Convenience constructor from the fading shape alone.
  static CompositeParams make(double z_bar, double m, double k, double delta,
                              double lambda) {
    return CompositeParams(z_bar, channel::FtrParams(1.0, m, k, delta),
                           ShadowParams(lambda));
  }

  double z_bar() const { return z_bar_; }
  const channel::FtrParams& fading() const { return fading_; }
  const ShadowParams& shadow() const { return shadow_; }
  double lambda() const { return shadow_.lambda(); }

 private:
  double z_bar_;
  channel::FtrParams fading_;
  ShadowParams shadow_;
};

/// Outage evaluation point: SNR threshold and mean SNR, both > 0.
struct OutageQuery {
  double gamma_th;
  double gamma_bar_z;

  OutageQuery(double threshold, double mean_snr)
      : gamma_th(threshold), gamma_bar_z(mean_snr) {
    if (!(gamma_th > 0.0)) throw std::invalid_argument("OutageQuery: gamma_th must be > 0");
    if (!(gamma_bar_z > 0.0))
      throw std::invalid_argument("OutageQuery: gamma_bar_z must be > 0");
  }
};

/// Power PDF of Z through the real-order GMGF of the fading component at
/// argument (1-lambda) z_bar / z. z = 0 returns the finite limit
/// lambda/(lambda-1) * f_V(0) / z_bar.
double composite_pdf(double z, const CompositeParams& c);
double log_composite_pdf(double z, const CompositeParams& c);

/// CDF of Z. Integer lambda uses the finite GMGF sum; non-integer lambda
/// integrates composite_pdf.
double composite_cdf(double z, const CompositeParams& c);

/// The two CDF routes, individually addressable for cross-validation.
double composite_cdf_sum(double z, const CompositeParams& c);         // integer lambda
double composite_cdf_quadrature(double z, const CompositeParams& c);  // any lambda

/// Amplitude-domain transforms: f_R(r) = 2 r f_Z(r^2), F_R(r) = F_Z(r^2).
double amplitude_pdf(double r, const CompositeParams& c);
double amplitude_cdf(double r, const CompositeParams& c);

/// Exact outage probability F_Z(z_bar * gamma_th / gamma_bar_z).
double outage_exact(const OutageQuery& q, const CompositeParams& c);

/// Deep-fade asymptote, linear in gamma_th / gamma_bar_z.
double outage_asymptotic(const OutageQuery& q, const CompositeParams& c);

}  // namespace ftr::composite
