/**
 * @file test_charts.cpp
 * @brief Taylor lifts, smoothstep partitions, augmentation derivatives, and
 *        pullback metrics of the chart factories.
 */
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "supervol/charts.hpp"
#include "supervol/special_functions.hpp"

using supervol::berezinian;
using supervol::Complex;
using supervol::extract_augmentation;
using supervol::GE;
using supervol::GEVec;
using supervol::hopf_chart_s32;
using supervol::kPi;
using supervol::lift_cos;
using supervol::lift_exp;
using supervol::lift_pow;
using supervol::lift_sin;
using supervol::lift_sqrt;
using supervol::pullback_metric;
using supervol::pullback_metric_fd;
using supervol::SmoothStep;
using supervol::sphere_band_chart;
using supervol::sphere_cap_chart;
using supervol::sqrt_berezinian_volume_density;
using supervol::SuperChart;
using supervol::SuperMatrix;

namespace {

double max_dev(const GE& x, const GE& y) { return (x - y).max_abs_coefficient(); }

/// A generic even element of Λ₄ with nonzero body for lift tests.
GE sample_even() {
  const GE t0 = GE::generator(4, 0), t1 = GE::generator(4, 1);
  const GE t2 = GE::generator(4, 2), t3 = GE::generator(4, 3);
  return GE::constant(4, 4.0) + 0.7 * (t0 * t1) + Complex{0.3, 0.2} * (t2 * t3) +
         Complex{0.0, 0.5} * (t0 * t1 * t2 * t3);
}

}  // namespace

TEST_CASE("Taylor lifts satisfy their defining identities") {
  const GE a = sample_even();
  CHECK(max_dev(lift_sqrt(a) * lift_sqrt(a), a) < 1e-12);
  CHECK(max_dev(lift_pow(a, -1.0) * a, GE::constant(4, 1.0)) < 1e-12);
  CHECK(max_dev(lift_pow(a, 0.5), lift_sqrt(a)) < 1e-12);
  CHECK(max_dev(lift_pow(a, 2.0), a * a) < 1e-11);
  CHECK(max_dev(lift_pow(a, 0.0), GE::constant(4, 1.0)) < 1e-15);
  CHECK(max_dev(lift_sin(a) * lift_sin(a) + lift_cos(a) * lift_cos(a),
                GE::constant(4, 1.0)) < 1e-12);
  // exp is a homomorphism on (commuting) even elements.
  const GE b = GE::constant(4, Complex{-1.0, 0.4}) +
               Complex{0.2, -0.1} * (GE::generator(4, 0) * GE::generator(4, 2));
  CHECK(max_dev(lift_exp(a) * lift_exp(b), lift_exp(a + b)) < 1e-10);
  CHECK_THROWS_AS((void)lift_sqrt(GE::generator(4, 0) * GE::generator(4, 1)),
                  std::domain_error);
}

TEST_CASE("smoothstep endpoints, symmetry, and flatness") {
  const SmoothStep s(7);
  CHECK(s.value(0.0) == 0.0);
  CHECK(s.value(1.0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(s.value(-2.0) == 0.0);
  CHECK(s.value(3.0) == 1.0);
  CHECK(s.value(0.5) == doctest::Approx(0.5).epsilon(1e-12));
  // S(u) + S(1−u) = 1 (up to cancellation noise in the degree-15 polynomial).
  for (const double u : {0.1, 0.33, 0.8})
    CHECK(s.value(u) + s.value(1.0 - u) == doctest::Approx(1.0).epsilon(1e-11));
  // Monotone with k flat derivatives at both ends.
  double prev = -1.0;
  for (int i = 0; i <= 20; ++i) {
    const double v = s.value(i / 20.0);
    CHECK(v >= prev - 1e-15);
    prev = v;
  }
  // k vanishing derivatives at both ends (cancellation at u = 1 leaves
  // roundoff of order Σ|cᵢ|·ff ≈ 1e11 · 1e−16).
  for (int j = 1; j <= 7; ++j) {
    CHECK(s.derivative(0.0, j) == 0.0);
    CHECK(std::abs(s.derivative(1.0, j)) < 1e-4);
  }
  // Derivatives are consistent with finite differences of the previous order.
  const double h = 1e-6;
  for (int j = 1; j <= 3; ++j) {
    const double fd =
        (s.derivative(0.37 + h, j - 1) - s.derivative(0.37 - h, j - 1)) /
        (2.0 * h);
    CHECK(s.derivative(0.37, j) == doctest::Approx(fd).epsilon(1e-6));
  }
  // Outside [0,1] all derivatives vanish.
  CHECK(s.derivative(-0.5, 1) == 0.0);
  CHECK(s.derivative(1.5, 2) == 0.0);
}

TEST_CASE("smoothstep lift is exactly constant on the flat plateaus") {
  const SmoothStep s(7);
  const GE soul = GE::generator(4, 0) * GE::generator(4, 1);
  const GE above = GE::constant(4, 1.2) + 0.4 * soul;
  CHECK((s.lift(above) - GE::constant(4, 1.0)).is_zero());
  const GE below = GE::constant(4, -0.2) + 0.4 * soul;
  CHECK(s.lift(below).is_zero());
  // Interior lift: body equals the scalar value; soul term is S′(u)·soul.
  const GE mid = GE::constant(4, 0.4) + 0.4 * soul;
  const GE lifted = s.lift(mid);
  CHECK(std::abs(lifted.body() - Complex{s.value(0.4), 0.0}) < 1e-14);
  CHECK(std::abs(lifted.coefficient(0b0011) -
                 Complex{0.4 * s.derivative(0.4, 1), 0.0}) < 1e-12);
}

TEST_CASE("augmentation extraction is a derivative") {
  const GE t0 = GE::generator(4, 0);
  const GE eps = GE::generator(4, 2) * GE::generator(4, 3);
  // f(x) = x² at x = 0.7, augmented: f(x+ε) = x² + 2xε.
  const GE a = GE::constant(4, 0.7) + eps;
  const GE fa = a * a;
  CHECK(max_dev(extract_augmentation(fa, 2, 3), GE::constant(4, 1.4)) < 1e-15);
  // Terms not containing the full pair are dropped; the pair is stripped.
  const GE mixed = 2.0 * t0 + t0 * eps;
  CHECK(max_dev(extract_augmentation(mixed, 2, 3), t0) < 1e-15);
}

TEST_CASE("flat superspace chart pulls back to the flat supermetric") {
  SuperChart chart;
  chart.even_dim = 1;
  chart.odd_dim = 2;
  chart.ambient_even = 1;
  chart.ambient_odd = 2;
  chart.num_generators = 4;
  chart.embed = [](const GEVec& even, const GEVec& odd) {
    return GEVec{even[0], odd[0], odd[1]};
  };
  const SuperMatrix<Complex> g = pullback_metric(chart, {0.7});
  const double expected[3][3] = {{1, 0, 0}, {0, 0, -1}, {0, 1, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(max_dev(g.at(i, j),
                    GE::constant(4, expected[i][j])) < 1e-15);
}

TEST_CASE("circle band chart has density R") {
  const double R = 1.7;
  const SuperChart chart = sphere_band_chart(1, 0, R);
  const auto g = pullback_metric(chart, {0.9});
  CHECK(max_dev(g.at(0, 0), GE::constant(2, R * R)) < 1e-12);
  const GE density = sqrt_berezinian_volume_density(g);
  CHECK(max_dev(density, GE::constant(2, R)) < 1e-12);
}

TEST_CASE("purely odd cap density is 1 + θ⁰θ¹/R²") {
  for (const double R : {1.0, 2.0})
    for (const int sign : {+1, -1}) {
      const SuperChart chart = sphere_cap_chart(0, 1, R, sign);
      const auto g = pullback_metric(chart, {});
      const GE density = sqrt_berezinian_volume_density(g);
      CHECK(std::abs(density.body() - Complex{1.0, 0.0}) < 1e-13);
      CHECK(std::abs(density.coefficient(0b0011) -
                     Complex{1.0 / (R * R), 0.0}) < 1e-12);
      // Berezin over the chart's odd pair: −1/R² per cap point.
      const GE integrated = supervol::berezin_integrate(density, 0b0011u);
      CHECK(std::abs(integrated.body() - Complex{-1.0 / (R * R), 0.0}) <
            1e-12);
    }
}

TEST_CASE("finite-difference metric matches the augmentation derivative") {
  const SuperChart chart = sphere_cap_chart(2, 1, 1.3, +1);
  const std::vector<double> point = {0.3, -0.4};
  const auto exact = pullback_metric(chart, point);
  const auto fd = pullback_metric_fd(chart, point, 1e-4);
  const int dim = chart.even_dim + chart.odd_dim;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      CHECK(max_dev(exact.at(i, j), fd.at(i, j)) < 1e-6);
}

TEST_CASE("violated constraints are detected") {
  SuperChart chart = sphere_cap_chart(1, 0, 1.0, +1);
  chart.constraint_residual = [](const GEVec&) {
    return GE::constant(2, 1.0);
  };
  CHECK_THROWS_AS((void)pullback_metric(chart, {0.2}), std::logic_error);
}

TEST_CASE("band density factorizes through the classical Jacobian") {
  // On S^{3|2}: √Ber(t, φ₁, φ₂) = √Ber(t, π/2, π/2) · sin(φ₁).
  const SuperChart chart = sphere_band_chart(3, 1, 1.0);
  const double t = 1.1;
  const auto ref =
      sqrt_berezinian_volume_density(pullback_metric(chart, {t, kPi / 2, kPi / 2}));
  for (const auto& ang : {std::pair{0.7, 2.1}, {1.9, 0.4}}) {
    const auto got = sqrt_berezinian_volume_density(
        pullback_metric(chart, {t, ang.first, ang.second}));
    CHECK(max_dev(got, std::sin(ang.first) * ref) < 1e-10);
  }
}

TEST_CASE("Hopf total-space chart is well-formed") {
  const SuperChart chart = hopf_chart_s32(1.0);
  CHECK(chart.even_dim == 3);
  CHECK(chart.odd_dim == 2);
  CHECK(chart.ambient_even == 4);
  CHECK(chart.ambient_odd == 2);
  const auto g = pullback_metric(chart, {0.4, -0.7, 1.3});
  // In the complex-conjugate odd frame (θ, θ̄) the Berezinian body is the
  // negative real −(2R/N)², N = 1 + u² + v²; its phase is carried by the
  // bracket convention for conjugate pairs, not by the chart itself.
  const GE ber = berezinian(g);
  const double nbody = 1.0 + 0.4 * 0.4 + 0.7 * 0.7;
  const double expected = -std::pow(2.0 / nbody, 2);
  CHECK(ber.body().real() == doctest::Approx(expected).epsilon(1e-12));
  CHECK(std::abs(ber.body().imag()) < 1e-12);
}
