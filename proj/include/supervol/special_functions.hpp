/**
 * @file special_functions.hpp
 * @brief Complex Γ, 1/Γ (entire, with exact-zero bookkeeping), log Γ,
 *        Barnes G, and the double factorial — the analytic backbone of the
 *        closed-form volume formulas.
 *
 * Conventions:
 *  - log_gamma returns *a* logarithm of Γ(z): the contract is
 *    exp(log_gamma(z)) = Γ(z) to ~1e−13 relative; the imaginary part is not
 *    guaranteed to be the principal branch far from the real axis.
 *  - reciprocal_gamma is entire; at non-positive integers it returns an
 *    AnalyticValue that is exactly zero and flagged as such, so downstream
 *    products can preserve structural vanishing without float fuzz.
 *  - barnes_g follows the standard entire Barnes G-function:
 *    G(1) = G(2) = G(3) = 1, G(z+1) = Γ(z)·G(z), zeros at all non-positive
 *    integers (G(0) = 0, G(−k) = 0).
 */
#pragma once

#include <complex>

namespace supervol {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
/// log of the Glaisher–Kinkelin constant A;  ζ′(−1) = 1/12 − ln A.
inline constexpr double kLnGlaisher = 0.2487544770337842610;

//=============================================================================
// AnalyticValue: a complex value that can be an *exact* (structural) zero
//=============================================================================

/// A complex number with a flag recording that it is an exact zero produced
/// by a Γ-pole (via 1/Γ) or a Barnes-G zero, rather than a small float.
struct AnalyticValue {
  Complex value{0.0, 0.0};
  bool is_exact_zero = false;

  static AnalyticValue exact_zero() { return {Complex{0.0, 0.0}, true}; }
  static AnalyticValue of(Complex v) { return {v, false}; }
};

/// Products propagate exact zeros: anything times an exact zero is an exact
/// zero.
inline AnalyticValue operator*(const AnalyticValue& a, const AnalyticValue& b) {
  if (a.is_exact_zero || b.is_exact_zero) return AnalyticValue::exact_zero();
  return AnalyticValue::of(a.value * b.value);
}

inline AnalyticValue operator*(const Complex& c, const AnalyticValue& a) {
  if (a.is_exact_zero) return AnalyticValue::exact_zero();
  return AnalyticValue::of(c * a.value);
}

inline AnalyticValue operator*(const AnalyticValue& a, const Complex& c) {
  return c * a;
}

//=============================================================================
// Gamma family
//=============================================================================

/// What gamma() should do at an exact pole (non-positive integer argument).
enum class PolePolicy { throw_error, return_infinity };

/// log Γ(z) via a 15-term Lanczos approximation (g = 607/128) on
/// Re z ≥ 1/2, extended by the reflection formula with an overflow-safe
/// log-sin.  Throws std::domain_error at exact non-positive integers.
Complex log_gamma(Complex z);

/// Γ(z).  At exact non-positive integers, behavior is governed by `policy`:
/// throw (default) or return complex infinity.
AnalyticValue gamma(Complex z, PolePolicy policy = PolePolicy::throw_error);

/// 1/Γ(z) — entire.  Returns an exact, flagged zero at non-positive integers.
AnalyticValue reciprocal_gamma(Complex z);

/// log G(z) for the Barnes G-function, via the Adamchik-style asymptotic
/// expansion of log G(1+w) for Re w ≥ 20, pulled back with
/// G(z) = G(z+1)/Γ(z).  Throws std::domain_error at exact non-positive
/// integers (zeros of G).
Complex barnes_log_g(Complex z);

/// Barnes G(z).  Exact flagged zeros at non-positive integers; exact
/// factorial products at small positive integers; otherwise
/// exp(barnes_log_g(z)).
AnalyticValue barnes_g(Complex z);

/// k!! for integer k ≥ −1, through Γ at (half-)integer arguments:
/// even k = 2j: 2ʲ Γ(j+1);  odd k: 2^{(k+1)/2} Γ(k/2+1) / √π;  (−1)!! = 1.
double double_factorial(int k);

}  // namespace supervol
