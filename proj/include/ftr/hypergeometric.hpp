#pragma once

#include <cmath>
#include <limits>

#include "ftr/numeric_error.hpp"

namespace ftr::specfun {

/// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
double pochhammer(double a, int n);

/// log of (a)_n for a > 0, via lgamma.
double log_pochhammer(double a, int n);

/// log of binomial(n, k) for 0 <= k <= n.
double log_binomial(int n, int k);

/// Confluent hypergeometric function 1F1(a; b; z).
///
/// b must not be a nonpositive integer. The supported envelope is the one
/// the channel formulas reach: b in {1, 2}-like small positives, any real a
/// with a > 0 or a a nonpositive integer (terminating), and real z. Negative
/// z is routed through the Kummer transform 1F1(a;b;z) = e^z 1F1(b-a;b;-z)
/// so the series keeps positive terms.
double kummer_1f1(double a, double b, double z);

/// log(1F1(a; b; z)) for a > 0, b > 0, z >= 0. Stays finite for z far beyond
/// the overflow point of 1F1 itself: large z switches to the asymptotic
/// expansion Gamma(b)/Gamma(a) e^z z^{a-b} (1 + ...) summed in log domain.
/// This is the form PDF evaluation multiplies against exp(-c x).
double log_kummer_1f1(double a, double b, double z);

/// Gauss hypergeometric function 2F1(a, b; c; z) for z < 1.
///
/// c must not be a nonpositive integer. A nonpositive-integer a or b makes
/// the series terminate and any z is accepted. Otherwise z in [0, 1) sums
/// the defining series directly and z < 0 is mapped through the Pfaff
/// transformation to argument z/(z-1) in [0, 1).
double gauss_2f1(double a, double b, double c, double z);

/// log(2F1(a, b; c; z)) along the same routes, tracking scale so that large
/// parameters (e.g. b of several hundred) do not overflow the accumulator.
/// The value must be positive, which holds on every route the channel
/// formulas use; a nonpositive sum raises NumericFailure.
double log_gauss_2f1(double a, double b, double c, double z);

/// Humbert bivariate confluent hypergeometric function
///   Phi2(b1, b2; c; x, y) = sum_{i,j} (b1)_i (b2)_j / ((c)_{i+j} i! j!) x^i y^j
/// summed by anti-diagonals; stops once the last full anti-diagonal
/// contributes less than rel_tol of the accumulated sum (twice in a row).
/// Validation path for the CDF at moderate arguments, not a hot path.
double phi2_bivariate(double b1, double b2, double c, double x, double y,
                      double rel_tol = 1e-13);

/// Streaming log-sum-exp accumulator for sums of positive terms given in
/// log domain.
class LogSum {
 public:
  void add(double log_term) {
    if (log_term == -std::numeric_limits<double>::infinity()) return;
    if (empty_) {
      max_ = log_term;
      acc_ = 1.0;
      empty_ = false;
    } else if (log_term <= max_) {
      acc_ += std::exp(log_term - max_);
    } else {
      acc_ = acc_ * std::exp(max_ - log_term) + 1.0;
      max_ = log_term;
    }
  }

  double log() const {
    if (empty_) return -std::numeric_limits<double>::infinity();
    return max_ + std::log(acc_);
  }

 private:
  bool empty_ = true;
  double max_ = 0.0;
  double acc_ = 0.0;
};

}  // namespace ftr::specfun
