#include "ftr/hypergeometric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ftr::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool is_nonpositive_integer(double v) {
  return v <= 0.0 && v == std::floor(v) && std::isfinite(v);
}

// Series sum tracked as sum * exp(log_scale) so huge parameters cannot
// overflow the accumulator.
struct ScaledSum {
  double sum;
  double log_scale;

  double value() const { return sum * std::exp(log_scale); }
  double log() const {
    if (!(sum > 0.0))
      throw NumericFailure("hypergeometric series: nonpositive sum in log mode", sum,
                           std::numeric_limits<double>::infinity());
    return std::log(sum) + log_scale;
  }
};

constexpr double kRescaleLimit = 1e250;
const double kRescaleLog = std::log(kRescaleLimit);

// Defining series of 1F1; terminates on its own when a is a nonpositive
// integer.
ScaledSum hyp1f1_series(double a, double b, double z, int max_terms) {
  double term = 1.0, sum = 1.0, log_scale = 0.0;
  int calm = 0;
  for (int k = 0; k < max_terms; ++k) {
    term *= (a + k) * z / ((b + k) * (k + 1.0));
    if (term == 0.0) return {sum, log_scale};
    sum += term;
    if (std::abs(term) < kEps * std::abs(sum)) {
      if (++calm >= 2) return {sum, log_scale};
    } else {
      calm = 0;
    }
    if (std::abs(sum) > kRescaleLimit) {
      sum /= kRescaleLimit;
      term /= kRescaleLimit;
      log_scale += kRescaleLog;
    }
  }
  throw NumericFailure("kummer_1f1: series did not converge within term budget",
                       sum * std::exp(log_scale), std::abs(term) * std::exp(log_scale));
}

// log of the asymptotic form Gamma(b)/Gamma(a) e^z z^{a-b} sum_k
// (b-a)_k (1-a)_k / (k! z^k), valid for large z > 0, a > 0. The correction
// series is truncated at its smallest term; for z >= 50 that is far below
// double precision.
double log_hyp1f1_asymptotic(double a, double b, double z) {
  double term = 1.0, sum = 1.0;
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= 400; ++k) {
    term *= (b - a + k - 1.0) * (k - a) / (k * z);
    if (std::abs(term) >= prev) break;  // asymptotic tail started to diverge
    sum += term;
    prev = std::abs(term);
    if (std::abs(term) < kEps * std::abs(sum)) break;
  }
  return std::lgamma(b) - std::lgamma(a) + z + (a - b) * std::log(z) + std::log(sum);
}

constexpr double kAsymptoticSwitch = 50.0;

ScaledSum hyp2f1_series(double a, double b, double c, double z, int max_terms) {
  double term = 1.0, sum = 1.0, log_scale = 0.0;
  int calm = 0;
  for (int k = 0; k < max_terms; ++k) {
    term *= (a + k) * (b + k) * z / ((c + k) * (k + 1.0));
    if (term == 0.0) return {sum, log_scale};
    sum += term;
    if (std::abs(term) < kEps * std::abs(sum)) {
      if (++calm >= 2) return {sum, log_scale};
    } else {
      calm = 0;
    }
    if (std::abs(sum) > kRescaleLimit) {
      sum /= kRescaleLimit;
      term /= kRescaleLimit;
      log_scale += kRescaleLog;
    }
  }
  throw NumericFailure("gauss_2f1: series did not converge within term budget",
                       sum * std::exp(log_scale), std::abs(term) * std::exp(log_scale));
}

constexpr int kMaxTerms1F1 = 200000;
constexpr int kMaxTerms2F1 = 1000000;

struct PfaffRoute {
  double a, b;       // parameters of the transformed series
  double log_prefactor;
};

// 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1))
//              = (1-z)^{-b} 2F1(c-a, b; c; z/(z-1)).
// Prefer the variant whose numerator parameters are both nonnegative so the
// transformed series has one sign.
PfaffRoute pick_pfaff(double a, double b, double c, double z) {
  if (std::min(a, c - b) >= 0.0) return {a, c - b, -a * std::log1p(-z)};
  if (std::min(c - a, b) >= 0.0) return {c - a, b, -b * std::log1p(-z)};
  return {a, c - b, -a * std::log1p(-z)};
}

}  // namespace

double pochhammer(double a, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: n must be >= 0");
  double result = 1.0;
  for (int k = 0; k < n; ++k) result *= a + k;
  return result;
}

double log_pochhammer(double a, int n) {
  if (n < 0) throw std::invalid_argument("log_pochhammer: n must be >= 0");
  if (!(a > 0.0)) throw std::invalid_argument("log_pochhammer: a must be > 0");
  return std::lgamma(a + n) - std::lgamma(a);
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("log_binomial: need 0 <= k <= n");
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double kummer_1f1(double a, double b, double z) {
  if (is_nonpositive_integer(b))
    throw std::invalid_argument("kummer_1f1: b must not be a nonpositive integer");
  if (z == 0.0 || a == 0.0) return 1.0;
  if (is_nonpositive_integer(a)) return hyp1f1_series(a, b, z, kMaxTerms1F1).value();
  if (z < 0.0) {
    // Kummer transform keeps the series single-signed when b - a > 0.
    return std::exp(z) * hyp1f1_series(b - a, b, -z, kMaxTerms1F1).value();
  }
  if (z <= kAsymptoticSwitch || !(a > 0.0))
    return hyp1f1_series(a, b, z, kMaxTerms1F1).value();
  return std::exp(log_hyp1f1_asymptotic(a, b, z));
}

double log_kummer_1f1(double a, double b, double z) {
  if (is_nonpositive_integer(b))
    throw std::invalid_argument("log_kummer_1f1: b must not be a nonpositive integer");
  if (z == 0.0 || a == 0.0) return 0.0;
  if (z < 0.0) {
    const double v = kummer_1f1(a, b, z);
    if (!(v > 0.0))
      throw NumericFailure("log_kummer_1f1: nonpositive value", v,
                           std::numeric_limits<double>::infinity());
    return std::log(v);
  }
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("log_kummer_1f1: needs a > 0 and b > 0 for z > 0");
  if (z <= kAsymptoticSwitch) return hyp1f1_series(a, b, z, kMaxTerms1F1).log();
  return log_hyp1f1_asymptotic(a, b, z);
}

double gauss_2f1(double a, double b, double c, double z) {
  if (is_nonpositive_integer(c))
    throw std::invalid_argument("gauss_2f1: c must not be a nonpositive integer");
  if (z == 0.0 || a == 0.0 || b == 0.0) return 1.0;
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b))
    return hyp2f1_series(a, b, c, z, kMaxTerms2F1).value();
  if (!(z < 1.0)) throw std::invalid_argument("gauss_2f1: argument must be < 1");
  if (z > 0.0) return hyp2f1_series(a, b, c, z, kMaxTerms2F1).value();
  const PfaffRoute route = pick_pfaff(a, b, c, z);
  ScaledSum s = hyp2f1_series(route.a, route.b, c, z / (z - 1.0), kMaxTerms2F1);
  return s.sum * std::exp(s.log_scale + route.log_prefactor);
}

double log_gauss_2f1(double a, double b, double c, double z) {
  if (is_nonpositive_integer(c))
    throw std::invalid_argument("log_gauss_2f1: c must not be a nonpositive integer");
  if (z == 0.0 || a == 0.0 || b == 0.0) return 0.0;
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b))
    return hyp2f1_series(a, b, c, z, kMaxTerms2F1).log();
  if (!(z < 1.0)) throw std::invalid_argument("log_gauss_2f1: argument must be < 1");
  if (z > 0.0) return hyp2f1_series(a, b, c, z, kMaxTerms2F1).log();
  const PfaffRoute route = pick_pfaff(a, b, c, z);
  return hyp2f1_series(route.a, route.b, c, z / (z - 1.0), kMaxTerms2F1).log() +
         route.log_prefactor;
}

double phi2_bivariate(double b1, double b2, double c, double x, double y,
                      double rel_tol) {
  if (is_nonpositive_integer(c))
    throw std::invalid_argument("phi2_bivariate: c must not be a nonpositive integer");
  if (!(rel_tol > 0.0)) throw std::invalid_argument("phi2_bivariate: rel_tol must be > 0");

  const int max_diagonals = 2000;
  std::vector<double> ax{1.0};  // ax[i] = (b1)_i x^i / i!
  std::vector<double> by{1.0};  // by[j] = (b2)_j y^j / j!
  double inv_poch_c = 1.0;      // 1 / (c)_d
  double sum = 0.0;
  int calm = 0;
  for (int d = 0; d < max_diagonals; ++d) {
    if (d > 0) {
      ax.push_back(ax[d - 1] * (b1 + d - 1.0) * x / d);
      by.push_back(by[d - 1] * (b2 + d - 1.0) * y / d);
      inv_poch_c /= c + d - 1.0;
    }
    double diag = 0.0;
    for (int i = 0; i <= d; ++i) diag += ax[i] * by[d - i];
    diag *= inv_poch_c;
    sum += diag;
    if (!std::isfinite(sum))
      throw NumericFailure("phi2_bivariate: sum left the double range", sum,
                           std::numeric_limits<double>::infinity());
    if (std::abs(diag) < rel_tol * std::abs(sum)) {
      if (++calm >= 2) return sum;
    } else {
      calm = 0;
    }
  }
  throw NumericFailure("phi2_bivariate: anti-diagonal budget exhausted", sum,
                       std::numeric_limits<double>::infinity());
}

}  // namespace ftr::specfun
