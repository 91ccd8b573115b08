/**
 * @file special_functions.cpp
 * @brief Implementation of the Γ / Barnes-G family.
 */
#include "supervol/special_functions.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace supervol {

namespace {

/// True iff z is an exactly representable non-positive integer.
bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

/// Lanczos coefficients for g = 607/128, N = 15 (Godfrey's set; ~1e−15
/// relative accuracy for Re z ≥ 1/2).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosC = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

/// Core Lanczos evaluation, valid for Re z ≥ 1/2.
Complex log_gamma_lanczos(Complex z) {
  Complex sum = kLanczosC[0];
  for (std::size_t k = 1; k < kLanczosC.size(); ++k)
    sum += kLanczosC[k] / (z - 1.0 + static_cast<double>(k));
  const Complex t = z + (kLanczosG - 0.5);
  return (z - 0.5) * std::log(t) - t + 0.5 * std::log(2.0 * kPi) + std::log(sum);
}

/// Overflow-safe log sin(πz) for Im z ≥ 0:
///   sin πz = e^{−iπz}(e^{2iπz} − 1)/(2i),  |e^{2iπz}| = e^{−2π Im z} ≤ 1,
/// so no exponential blowup (std::sin itself overflows for |Im z| ≳ 230).
/// The branch is only exp-contractual, like log_gamma itself.
Complex log_sin_pi_upper(Complex z) {
  const Complex i(0.0, 1.0);
  const Complex w = std::exp(2.0 * kPi * i * z) - 1.0;
  return -i * kPi * z + std::log(w) - Complex(std::log(2.0), kPi / 2.0);
}

}  // namespace

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z))
    throw std::domain_error("log_gamma: pole at non-positive integer");
  if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
  if (z.real() >= 0.5) return log_gamma_lanczos(z);
  // Reflection: log Γ(z) = log π − log sin(πz) − log Γ(1−z).
  return std::log(kPi) - log_sin_pi_upper(z) - log_gamma(1.0 - z);
}

AnalyticValue gamma(Complex z, PolePolicy policy) {
  if (is_nonpositive_integer(z)) {
    if (policy == PolePolicy::throw_error)
      throw std::domain_error("gamma: pole at non-positive integer");
    const double inf = std::numeric_limits<double>::infinity();
    return AnalyticValue::of(Complex{inf, 0.0});
  }
  Complex v = std::exp(log_gamma(z));
  // Γ maps ℝ ∖ {poles} to ℝ; clear reflection-path roundoff in the
  // imaginary part for real arguments.
  if (z.imag() == 0.0) v.imag(0.0);
  return AnalyticValue::of(v);
}

AnalyticValue reciprocal_gamma(Complex z) {
  if (is_nonpositive_integer(z)) return AnalyticValue::exact_zero();
  Complex v = std::exp(-log_gamma(z));
  if (z.imag() == 0.0) v.imag(0.0);  // 1/Γ is real on the real axis
  return AnalyticValue::of(v);
}

namespace {

/// Asymptotic expansion of log G(1+w), accurate for Re w ≥ 20:
///   log G(1+w) = w²(½ log w − ¾) + (w/2) log 2π − (1/12) log w + ζ′(−1)
///                + Σ_{k=1}^{7} B_{2k+2} / (4k(k+1) w^{2k}).
Complex barnes_log_g1_asymptotic(Complex w) {
  constexpr double kZetaPrimeMinusOne = 1.0 / 12.0 - kLnGlaisher;
  // z^{−2k} coefficients of the fully reduced expansion, k = 1..7:
  //   B_{2k+2}/(4k(k+1)),
  // i.e. B_{2k+2}/(2k(2k+1)(2k+2)) from the G-tail plus the absorbed
  // Stirling tail B_{2k+2}/((2k+1)(2k+2)) of the eliminated z·lnΓ(z+1) term.
  constexpr std::array<double, 7> kTail = {
      -1.0 / 240.0,       1.0 / 1008.0, -1.0 / 1440.0,       1.0 / 1056.0,
      -691.0 / 327600.0,  1.0 / 144.0,  -3617.0 / 114240.0,
  };
  const Complex logw = std::log(w);
  Complex r = w * w * (0.5 * logw - 0.75) + 0.5 * w * std::log(2.0 * kPi) -
              logw / 12.0 + kZetaPrimeMinusOne;
  const Complex w2 = w * w;
  Complex pw = w2;
  for (double coeff : kTail) {
    r += coeff / pw;
    pw *= w2;
  }
  return r;
}

}  // namespace

Complex barnes_log_g(Complex z) {
  if (is_nonpositive_integer(z))
    throw std::domain_error("barnes_log_g: zero of G at non-positive integer");
  if (z.imag() < 0.0) return std::conj(barnes_log_g(std::conj(z)));
  // Pull back by G(z) = G(z+k) / Π_{j<k} Γ(z+j) until Re(z+k−1) ≥ 20.
  int k = 0;
  if (z.real() < 21.0) k = static_cast<int>(std::ceil(21.0 - z.real()));
  Complex correction{0.0, 0.0};
  for (int j = 0; j < k; ++j) correction += log_gamma(z + static_cast<double>(j));
  return barnes_log_g1_asymptotic(z + static_cast<double>(k - 1)) - correction;
}

AnalyticValue barnes_g(Complex z) {
  if (is_nonpositive_integer(z)) return AnalyticValue::exact_zero();
  if (z.imag() == 0.0 && z.real() == std::round(z.real()) && z.real() <= 24.0) {
    // Exact integer path: G(1) = 1, G(n) = Π_{j=1}^{n−2} j!.
    const int n = static_cast<int>(z.real());
    double g = 1.0;
    double fact = 1.0;
    for (int j = 1; j <= n - 2; ++j) {
      fact *= static_cast<double>(j);
      g *= fact;
    }
    return AnalyticValue::of(Complex{g, 0.0});
  }
  Complex v = std::exp(barnes_log_g(z));
  if (z.imag() == 0.0) v.imag(0.0);  // G is real on the real axis
  return AnalyticValue::of(v);
}

double double_factorial(int k) {
  if (k < -1) throw std::domain_error("double_factorial: k must be >= -1");
  if (k == -1 || k == 0) return 1.0;
  const Complex g = gamma(Complex{0.5 * k + 1.0, 0.0}).value;
  if (k % 2 == 0) return std::pow(2.0, k / 2) * g.real();
  return std::pow(2.0, (k + 1) / 2) * g.real() / std::sqrt(kPi);
}

}  // namespace supervol
