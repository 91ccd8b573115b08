/**
 * @file test_special_functions.cpp
 * @brief Γ, 1/Γ, Barnes G, and double factorial: identities, exact zeros,
 *        pole policies, and numerical stability far from the real axis.
 */
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "supervol/special_functions.hpp"

using supervol::barnes_g;
using supervol::barnes_log_g;
using supervol::Complex;
using supervol::double_factorial;
using supervol::gamma;
using supervol::kPi;
using supervol::log_gamma;
using supervol::PolePolicy;
using supervol::reciprocal_gamma;

namespace {

double rel_err(const Complex& a, const Complex& b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

bool near_integer(const Complex& z, double margin) {
  return std::abs(z.imag()) < margin &&
         std::abs(z.real() - std::round(z.real())) < margin;
}

}  // namespace

TEST_CASE("Γ at landmark points") {
  CHECK(rel_err(gamma({0.5, 0.0}).value, {std::sqrt(kPi), 0.0}) < 1e-14);
  CHECK(rel_err(gamma({5.0, 0.0}).value, {24.0, 0.0}) < 1e-14);
  CHECK(rel_err(gamma({1.0, 0.0}).value, {1.0, 0.0}) < 1e-14);
  CHECK(rel_err(gamma({-0.5, 0.0}).value, {-2.0 * std::sqrt(kPi), 0.0}) <
        1e-13);
}

TEST_CASE("Γ recurrence on random complex arguments") {
  std::mt19937 rng(808u);
  std::uniform_real_distribution<double> u(-8.0, 8.0);
  int tested = 0;
  while (tested < 40) {
    const Complex z{u(rng), u(rng)};
    if (near_integer(z, 0.1) || near_integer(z + 1.0, 0.1)) continue;
    ++tested;
    CHECK(rel_err(gamma(z + Complex{1.0, 0.0}).value, z * gamma(z).value) <
          1e-10);
  }
}

TEST_CASE("Γ reflection formula") {
  std::mt19937 rng(909u);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  int tested = 0;
  while (tested < 40) {
    const Complex z{u(rng), u(rng)};
    if (near_integer(z, 0.15)) continue;
    ++tested;
    const Complex lhs = gamma(z).value * gamma(Complex{1.0, 0.0} - z).value;
    const Complex rhs = kPi / std::sin(kPi * z);
    CHECK(rel_err(lhs, rhs) < 1e-10);
  }
}

TEST_CASE("Γ stays finite far from the real axis") {
  const Complex z{0.5, 400.0};
  const Complex lg = log_gamma(z);
  CHECK(std::isfinite(lg.real()));
  CHECK(std::isfinite(lg.imag()));
  // |Γ(0.5+400i)| underflows; the reciprocal must not overflow or NaN.
  const Complex rg = reciprocal_gamma(z).value;
  CHECK(std::isfinite(rg.real()));
  CHECK(std::isfinite(rg.imag()));
  // Conjugate symmetry.
  const Complex below = reciprocal_gamma(std::conj(z)).value;
  CHECK(rel_err(below, std::conj(rg)) < 1e-12);
}

TEST_CASE("pole policies") {
  CHECK_THROWS_AS((void)gamma({0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS((void)gamma({-3.0, 0.0}), std::domain_error);
  const Complex inf = gamma({-3.0, 0.0}, PolePolicy::return_infinity).value;
  CHECK(std::isinf(inf.real()));
  // 1/Γ is entire with exact zeros at the poles.
  const auto rg0 = reciprocal_gamma({0.0, 0.0});
  CHECK(rg0.is_exact_zero);
  CHECK(rg0.value == Complex{0.0, 0.0});
  const auto rg7 = reciprocal_gamma({-7.0, 0.0});
  CHECK(rg7.is_exact_zero);
  CHECK(rg7.value == Complex{0.0, 0.0});
  CHECK_FALSE(reciprocal_gamma({2.5, 0.0}).is_exact_zero);
}

TEST_CASE("Barnes G at small integers") {
  const double expected[] = {1.0, 1.0, 1.0, 2.0, 12.0};
  for (int n = 1; n <= 5; ++n) {
    const auto g = barnes_g({static_cast<double>(n), 0.0});
    CHECK_FALSE(g.is_exact_zero);
    CHECK(rel_err(g.value, {expected[n - 1], 0.0}) < 1e-12);
  }
  CHECK(rel_err(barnes_g({6.0, 0.0}).value, {288.0, 0.0}) < 1e-12);
}

TEST_CASE("Barnes G exact zeros at non-positive integers") {
  for (const double z : {0.0, -1.0, -2.0, -5.0}) {
    const auto g = barnes_g({z, 0.0});
    CHECK(g.is_exact_zero);
    CHECK(g.value == Complex{0.0, 0.0});
  }
  CHECK_THROWS_AS((void)barnes_log_g({0.0, 0.0}), std::domain_error);
}

TEST_CASE("Barnes G recursion G(z+1) = Γ(z)G(z)") {
  std::mt19937 rng(4242u);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  int tested = 0;
  while (tested < 30) {
    const Complex z{u(rng), u(rng)};
    if (z.real() <= 0.2 && std::abs(z.imag()) < 0.2) continue;  // near poles
    ++tested;
    const Complex lhs = barnes_log_g(z + Complex{1.0, 0.0});
    const Complex rhs = barnes_log_g(z) + log_gamma(z);
    // Compare in the exponential to quotient out 2πi branch offsets.
    CHECK(std::abs(std::exp(lhs - rhs) - 1.0) < 1e-9);
  }
}

TEST_CASE("integer fast path matches the asymptotic evaluation") {
  for (int n = 6; n <= 20; n += 7) {
    const Complex via_log =
        std::exp(barnes_log_g({static_cast<double>(n), 0.0}));
    const auto exact = barnes_g({static_cast<double>(n), 0.0});
    CHECK(rel_err(via_log, exact.value) < 1e-9);
  }
}

TEST_CASE("double factorial") {
  CHECK(double_factorial(-1) == doctest::Approx(1.0));
  CHECK(double_factorial(0) == doctest::Approx(1.0));
  CHECK(double_factorial(1) == doctest::Approx(1.0));
  CHECK(double_factorial(7) == doctest::Approx(105.0));
  CHECK(double_factorial(8) == doctest::Approx(384.0));
  CHECK_THROWS_AS((void)double_factorial(-2), std::domain_error);
}

TEST_CASE("exact-zero propagation through products") {
  using supervol::AnalyticValue;
  const AnalyticValue z = AnalyticValue::exact_zero();
  const AnalyticValue a = AnalyticValue::of({3.0, 1.0});
  CHECK((z * a).is_exact_zero);
  CHECK((a * z).is_exact_zero);
  CHECK((z * a).value == Complex{0.0, 0.0});
  CHECK_FALSE((a * a).is_exact_zero);
}
