/**
 * @file rational.hpp
 * @brief Gaussian-rational scalar (ℚ[i]) for exact, zero-residual algebra.
 *
 * The Grassmann/supermatrix templates are scalar-generic; instantiating them
 * over this type turns every Berezinian identity (multiplicativity,
 * supertranspose invariance, agreement of the two block formulas) into an
 * exact statement that the test suite asserts with literally zero residual —
 * no floating-point tolerance anywhere.  Division is exact in ℚ[i], so block
 * elimination and even-element inversion stay inside the ring.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "supervol/grassmann.hpp"

namespace supervol {

using BigRational = boost::multiprecision::cpp_rational;

/// Exact complex number with rational real and imaginary parts.
struct GaussianRational {
  BigRational re{0};
  BigRational im{0};

  GaussianRational() = default;
  GaussianRational(long long r) : re(r) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(BigRational r, BigRational i) : re(std::move(r)), im(std::move(i)) {}

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    const BigRational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("GaussianRational: division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }
};

template <>
struct ScalarTraits<GaussianRational> {
  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return {1}; }
  static bool is_zero(const GaussianRational& v) { return v == GaussianRational{}; }
  static GaussianRational conj(const GaussianRational& v) { return {v.re, -v.im}; }
  static GaussianRational from_int(long long k) { return {k}; }
  static GaussianRational inverse(const GaussianRational& v) { return one() / v; }
};

using RationalGrassmann = GrassmannElement<GaussianRational>;

}  // namespace supervol
