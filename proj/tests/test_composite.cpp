#include <doctest.h>

#include <cmath>

#include "ftr/composite.hpp"
#include "ftr/hypergeometric.hpp"
#include "ftr/quadrature.hpp"
#include "support/oracles.hpp"

using namespace ftr;
using oracles::rel_diff;

namespace {

composite::CompositeParams fig2(double z_bar, double lambda) {
  return composite::CompositeParams::make(z_bar, 2.0, 4.0, 0.2, lambda);
}

double pdf_mass(const composite::CompositeParams& c) {
  return specfun::integrate_semi_infinite(
      [&c](double z) { return composite::composite_pdf(z, c); }, 0.0);
}

}  // namespace

TEST_CASE("composite PDF normalizes for integer and non-integer shapes") {
  CHECK(std::abs(pdf_mass(fig2(1.0, 2.0)) - 1.0) <= 1e-7);
  CHECK(std::abs(pdf_mass(fig2(1.0, 2.5)) - 1.0) <= 1e-7);
}

TEST_CASE("composite PDF approaches its z -> 0 limit continuously") {
  const auto c = fig2(2.0, 3.0);
  const double limit = composite::composite_pdf(0.0, c);
  CHECK(limit ==
        doctest::Approx(3.0 / 2.0 * channel::ftr_pdf(0.0, c.fading()) / 2.0)
            .epsilon(1e-12));
  CHECK(rel_diff(composite::composite_pdf(1e-12, c), limit) <= 1e-6);
}

TEST_CASE("shadowing vanishes as the shape grows: composite tends to plain fading") {
  const channel::FtrParams fading(1.0, 2.0, 4.0, 0.2);
  auto worst_gap = [&fading](double lambda) {
    const auto c = fig2(1.0, lambda);
    double worst = 0.0;
    for (int i = 1; i <= 50; ++i) {
      const double z = 0.1 + (5.0 - 0.1) * i / 50.0;
      worst = std::max(worst, rel_diff(composite::composite_pdf(z, c),
                                       channel::ftr_pdf(z, fading)));
    }
    return worst;
  };
  // frozen from the measured convergence ladder; the distance scales ~ 1/lambda
  const double at50 = worst_gap(50.0);
  const double at500 = worst_gap(500.0);
  const double at5000 = worst_gap(5000.5);  // non-integer: quadrature GMGF route
  CHECK(at50 < 0.20);
  CHECK(at500 < 0.023);
  CHECK(at5000 < 0.0024);
  CHECK(at500 / at5000 > 8.5);
  CHECK(at500 / at5000 < 11.5);
}

TEST_CASE("composite CDF: limits and the two evaluation routes") {
  const auto c = fig2(1.0, 2.0);
  CHECK(composite::composite_cdf(0.0, c) == 0.0);
  CHECK(composite::composite_cdf(1e-10, c) <= 1e-9);
  CHECK(std::abs(composite::composite_cdf(1000.0, c) - 1.0) <= 1e-6);

  for (double z : {0.05, 0.3, 1.0, 2.5, 8.0}) {
    INFO("z=" << z);
    CHECK(std::abs(composite::composite_cdf_sum(z, c) -
                   composite::composite_cdf_quadrature(z, c)) <= 1e-7);
  }

  // non-integer shape goes through the PDF-integration route
  const auto c_frac = fig2(1.0, 2.5);
  CHECK(composite::composite_cdf(1.0, c_frac) ==
        doctest::Approx(composite::composite_cdf_quadrature(1.0, c_frac))
            .epsilon(1e-12));
}

TEST_CASE("amplitude transforms preserve mass and match the power domain") {
  const auto c = fig2(1.0, 2.0);
  const double mass = specfun::integrate_semi_infinite(
      [&c](double r) { return composite::amplitude_pdf(r, c); }, 0.0);
  CHECK(std::abs(mass - 1.0) <= 1e-7);

  CHECK(composite::amplitude_pdf(1.0, c) ==
        doctest::Approx(2.0 * composite::composite_pdf(1.0, c)).epsilon(1e-13));
  CHECK(composite::amplitude_cdf(1.2, c) ==
        doctest::Approx(composite::composite_cdf(1.44, c)).epsilon(1e-12));
  CHECK(composite::amplitude_pdf(0.0, c) == 0.0);
  CHECK(composite::amplitude_cdf(1e-5, c) <= 1e-9);
  CHECK(std::abs(composite::amplitude_cdf(40.0, c) - 1.0) <= 1e-6);
}

TEST_CASE("unit-mean factors: E[Z] equals z_bar through the PDF") {
  for (double lambda : {1.5, 5.0}) {
    const auto c = fig2(2.0, lambda);
    const double mean = specfun::integrate_semi_infinite(
        [&c](double z) { return z * composite::composite_pdf(z, c); }, 0.0);
    INFO("lambda=" << lambda);
    CHECK(std::abs(mean / c.z_bar() - 1.0) <= 1e-5);
  }
}

TEST_CASE("outage: limits, monotonicity and linear asymptote") {
  const auto c = composite::CompositeParams::make(1.0, 2.0, 4.0, 0.3, 2.0);
  CHECK(composite::outage_exact(composite::OutageQuery(1e4, 1.0), c) >= 1.0 - 1e-5);
  CHECK(composite::outage_exact(composite::OutageQuery(1e-8, 1.0), c) <= 1e-7);

  double prev = 0.0;
  for (double ratio = 1e-4; ratio <= 1.0 + 1e-12; ratio *= 10.0) {
    const double value = composite::outage_exact(composite::OutageQuery(ratio, 1.0), c);
    CHECK(value >= prev);
    prev = value;
  }

  // doubling the threshold doubles the asymptote exactly
  const double one = composite::outage_asymptotic(composite::OutageQuery(1e-4, 1.0), c);
  const double two = composite::outage_asymptotic(composite::OutageQuery(2e-4, 1.0), c);
  CHECK(two == doctest::Approx(2.0 * one).epsilon(1e-14));

  // delta = 0 reduces the hypergeometric factor to one
  const auto c0 = composite::CompositeParams::make(1.0, 2.0, 4.0, 0.0, 2.0);
  const double expect =
      2.0 * (1.0 + 4.0) / std::pow(1.0 + 4.0 / 2.0, 2.0) * 1e-4;
  CHECK(composite::outage_asymptotic(composite::OutageQuery(1e-4, 1.0), c0) ==
        doctest::Approx(expect).epsilon(1e-13));

  // K = 0 limit takes the zero hypergeometric argument branch
  const auto ck0 = composite::CompositeParams::make(1.0, 2.0, 0.0, 0.5, 2.0);
  CHECK(composite::outage_asymptotic(composite::OutageQuery(1e-4, 1.0), ck0) ==
        doctest::Approx(2.0 * 1e-4).epsilon(1e-13));

  // deep-fade agreement between exact and asymptotic
  const double exact = composite::outage_exact(composite::OutageQuery(1e-4, 1.0), c);
  const double asym = composite::outage_asymptotic(composite::OutageQuery(1e-4, 1.0), c);
  CHECK(std::abs(exact / asym - 1.0) <= 0.05);
}

TEST_CASE("quadratic transformation behind the asymptote's hypergeometric factor") {
  // (1-b)^{-m} 2F1(m, 1/2; 1; -2b/(1-b)) = 2F1(m/2, (m+1)/2; 1; b^2)
  for (double m : {0.8, 2.0, 5.0}) {
    for (double b : {0.1, 0.5, 0.9}) {
      const double lhs = std::exp(-m * std::log1p(-b)) *
                         specfun::gauss_2f1(m, 0.5, 1.0, -2.0 * b / (1.0 - b));
      const double rhs = specfun::gauss_2f1(0.5 * m, 0.5 * (m + 1.0), 1.0, b * b);
      INFO("m=" << m << " b=" << b);
      CHECK(rel_diff(lhs, rhs) <= 1e-12);
    }
  }
}

TEST_CASE("composite parameter validation") {
  CHECK_THROWS_AS(composite::ShadowParams(1.0), std::invalid_argument);
  CHECK_THROWS_AS(composite::ShadowParams(0.5), std::invalid_argument);
  CHECK_THROWS_AS(composite::CompositeParams(1.0, channel::FtrParams(2.0, 2.0, 4.0, 0.2),
                                             composite::ShadowParams(2.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(composite::CompositeParams::make(0.0, 2.0, 4.0, 0.2, 2.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(composite::OutageQuery(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(composite::OutageQuery(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(composite::composite_pdf(-1.0, fig2(1.0, 2.0)), std::invalid_argument);
}
