#pragma once

#include <cmath>
#include <stdexcept>

namespace ftr::channel {

/// Fluctuating two-ray channel parameters. Validation happens here, once;
/// every operation downstream may assume a valid set.
class FtrParams {
 public:
  FtrParams(double gamma_bar, double m, double k, double delta)
      : gamma_bar_(gamma_bar), m_(m), k_(k), delta_(delta) {
    if (!(gamma_bar > 0.0))
      throw std::invalid_argument("FtrParams: mean power gamma_bar must be > 0");
    if (!(m > 0.0)) throw std::invalid_argument("FtrParams: fluctuation shape m must be > 0");
    if (!(k >= 0.0)) throw std::invalid_argument("FtrParams: power ratio K must be >= 0");
    if (!(delta >= 0.0 && delta <= 1.0))
      throw std::invalid_argument("FtrParams: similarity delta must lie in [0, 1]");
  }

  double gamma_bar() const { return gamma_bar_; }
  double m() const { return m_; }
  double k() const { return k_; }
  double delta() const { return delta_; }

  /// Diffuse component variance per dimension: gamma_bar / (2 (1 + K)).
  double sigma2() const { return gamma_bar_ / (2.0 * (1.0 + k_)); }

 private:
  double gamma_bar_, m_, k_, delta_;
};

/// Rician shadowed channel parameters (squared envelope convention).
class RsParams {
 public:
  RsParams(double gamma_bar, double m, double k_r)
      : gamma_bar_(gamma_bar), m_(m), k_r_(k_r) {
    if (!(gamma_bar > 0.0))
      throw std::invalid_argument("RsParams: mean power gamma_bar must be > 0");
    if (!(m > 0.0)) throw std::invalid_argument("RsParams: fluctuation shape m must be > 0");
    if (!(k_r >= 0.0)) throw std::invalid_argument("RsParams: power ratio K_r must be >= 0");
  }

  double gamma_bar() const { return gamma_bar_; }
  double m() const { return m_; }
  double k_r() const { return k_r_; }

  double sigma2() const { return gamma_bar_ / (2.0 * (1.0 + k_r_)); }
  /// Specular power Omega = 2 sigma^2 K_r.
  double omega() const { return 2.0 * sigma2() * k_r_; }

 private:
  double gamma_bar_, m_, k_r_;
};

/// A generalized-MGF evaluation point: order n >= 0 and argument s <= 0.
struct GmgfQuery {
  double n;
  double s;

  GmgfQuery(double order, double argument) : n(order), s(argument) {
    if (!(n >= 0.0)) throw std::invalid_argument("GmgfQuery: order n must be >= 0");
    if (!(s <= 0.0)) throw std::invalid_argument("GmgfQuery: argument s must be <= 0");
  }
};

/// Arguments of the finite-range integral
///   I1 = int_0^pi (1 + alpha cos t)^P1 / (1 + beta cos t)^P2 dt.
struct I1Args {
  int p1;
  double p2;
  double alpha;
  double beta;

  I1Args(int p1_in, double p2_in, double alpha_in, double beta_in)
      : p1(p1_in), p2(p2_in), alpha(alpha_in), beta(beta_in) {
    if (p1 < 0) throw std::invalid_argument("I1Args: P1 must be a nonnegative integer");
    if (!(p2 > 0.0)) throw std::invalid_argument("I1Args: P2 must be > 0");
    if (!(std::abs(beta) < 1.0)) throw std::invalid_argument("I1Args: |beta| must be < 1");
  }
};

}  // namespace ftr::channel
