/**
 * @file oracles.cpp
 * @brief Independent volume oracles (δ-reduction, atlas quadrature, Gaussian
 *        superintegrals, U(1|1) Maurer–Cartan, Hopf/Cavalieri checks).
 */
#include "supervol/oracles.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "supervol/special_functions.hpp"
#include "supervol/superdim.hpp"
#include "supervol/volumes.hpp"

namespace supervol {

namespace {

constexpr Complex kI{0.0, 1.0};

double max_abs_coefficient(const GE& a) {
  double m = 0.0;
  for (const auto& [mask, c] : a.terms()) m = std::max(m, std::abs(c));
  return m;
}

/// Σ_μ 2 θ^{2μ} θ^{2μ+1} over the first 2m generators of Λ_ngen.
GE interleaved_pair_sum(int ngen, int m) {
  GE s(ngen);
  for (int mu = 0; mu < m; ++mu)
    s += 2.0 * (GE::generator(ngen, 2 * mu) * GE::generator(ngen, 2 * mu + 1));
  return s;
}

double falling_factorial(double x, int j) {
  double r = 1.0;
  for (int t = 0; t < j; ++t) r *= x - static_cast<double>(t);
  return r;
}

double require_real(const Complex& v, const char* what) {
  if (std::abs(v.imag()) > 1e-9 * std::max(1.0, std::abs(v.real())))
    throw std::logic_error(std::string(what) +
                           ": value has a non-negligible imaginary part");
  return v.real();
}

double now_ms() {
  using namespace std::chrono;
  return duration<double, std::milli>(steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

//=============================================================================
// Classical helper
//=============================================================================

double classical_sphere_volume(int k) {
  if (k < 0) throw std::invalid_argument("classical_sphere_volume: k < 0");
  return sphere_volume(k, 0, 1.0).value.value.real();
}

//=============================================================================
// δ-function sphere oracle
//=============================================================================

double sphere_volume_delta(int n, int m, double radius,
                           const QuadratureSpec& quad) {
  quad.validate();  // interface uniformity; the reduction below is analytic
  if (n < 0 || n > 4 || m < 0 || m > 2 || !(radius > 0.0))
    throw std::invalid_argument("sphere_volume_delta: need 0<=n<=4, 0<=m<=2, R>0");
  // vol = ∫ d^{n+1}x D^{2m}θ 2R δ(Σx² − R² + S),  S = Σ 2ξ^μη^μ.
  // Expanding δ(u + S) = Σ_j (S^j/j!) δ^{(j)}(u) and Berezin-integrating
  // termwise gives vol = 2R Σ_j b_j E_j with
  //   b_j = ∫ D^{2m}θ S^j/j!,
  //   E_j = ∫ δ^{(j)}(Σx² − R²) d^{n+1}x
  //       = vol(S^n_cl) · ½ (−1)^j ((n−1)/2)_falling^j R^{n−1−2j}
  // (substitute u = r² in the radial integral and integrate by parts).
  const int q = 2 * m;
  const GE s = interleaved_pair_sum(q, m);
  const auto powers = soul_power_series(s);
  const double vn = classical_sphere_volume(n);
  double total = 0.0;
  for (std::size_t j = 0; j < powers.size(); ++j) {
    const Complex bj = (q == 0) ? powers[j].body() : berezin_full(powers[j]);
    if (std::abs(bj) == 0.0) continue;
    const int jj = static_cast<int>(j);
    const double ej = vn * 0.5 * ((jj % 2 == 0) ? 1.0 : -1.0) *
                      falling_factorial(0.5 * (n - 1), jj) *
                      std::pow(radius, n - 1 - 2 * jj);
    total += require_real(bj, "sphere_volume_delta") * ej;
  }
  return 2.0 * radius * total;
}

//=============================================================================
// Atlas sphere oracle
//=============================================================================

namespace {

/// Berezin integral of weight·√Ber(pullback metric) over the chart's odd
/// coordinates; returns the numeric chart density at the given point.
double chart_density(const SuperChart& chart, const std::vector<double>& pt,
                     const GE& weight) {
  if (chart.even_dim == 0 && chart.odd_dim == 0) {
    // 0|0-dimensional chart: the metric is empty and √Ber ≡ 1.
    return require_real(weight.body(), "sphere chart density");
  }
  const SuperMatrix<Complex> g = pullback_metric(chart, pt);
  const GE sb = sqrt_berezinian_volume_density(g);
  const int q = chart.odd_dim;
  const std::uint32_t mask = (q == 0) ? 0u : ((std::uint32_t{1} << q) - 1u);
  const Complex v = berezin_integrate(weight * sb, mask).body();
  return require_real(v, "sphere chart density");
}

}  // namespace

double sphere_volume_chart(int n, int m, double radius,
                           const QuadratureSpec& quad,
                           const SphereChartOptions& opts) {
  quad.validate();
  if (n < 0 || n > 3 || m < 0 || m > 2 || !(radius > 0.0))
    throw std::invalid_argument("sphere_volume_chart: need 0<=n<=3, 0<=m<=2, R>0");
  if (!(0.0 < opts.h1_frac && opts.h1_frac < opts.h2_frac && opts.h2_frac < 1.0))
    throw std::invalid_argument("sphere_volume_chart: need 0 < h1 < h2 < R");
  const double rr = radius;
  const int q = 2 * m, ngen = q + 2;

  if (n == 0) {
    // Two superpoints x¹ = ±√(R² − S); each cap weight is exactly 1 there.
    const GE one = GE::constant(ngen, Complex{1.0, 0.0});
    const double vn = chart_density(sphere_cap_chart(0, m, rr, +1), {}, one);
    const double vs = chart_density(sphere_cap_chart(0, m, rr, -1), {}, one);
    return vn + vs;
  }

  const SmoothStep step(7);  // C⁷: supports lifts up to Λ_{2·5}, well past m ≤ 2
  const double h1 = opts.h1_frac * rr, h2 = opts.h2_frac * rr;
  const double inv_margin = 1.0 / (h2 - h1);
  const double r_in = std::sqrt(rr * rr - h2 * h2);
  const double r_out = std::sqrt(rr * rr - h1 * h1);

  // Cap weight as a function of the Grassmann-valued height h:
  //   χ_N = S₇((h − h₁)/(h₂ − h₁)),  χ_S(h) = χ_N(−h),
  // so χ_N + χ_S + χ_band = 1 with χ_band := 1 − χ_N − χ_S, exactly.
  const auto chi_of_height = [&](const GE& h) {
    return step.lift((h - GE::constant(ngen, Complex{h1, 0.0})) * inv_margin);
  };

  // --- caps (graph charts over the open disc |x| < r_out) -----------------
  const SuperChart cap_n = sphere_cap_chart(n, m, rr, +1);
  const SuperChart cap_s = sphere_cap_chart(n, m, rr, -1);
  const auto cap_density = [&](const SuperChart& chart, double r) {
    std::vector<double> pt(static_cast<std::size_t>(n), 0.0);
    pt[0] = r;
    // Height along either cap has the same magnitude √(R² − r² − S); on the
    // north cap χ_N(h) and on the south cap χ_S(−|h|) coincide as functions
    // of r, which is the symmetry asserted below.
    GE s2 = GE::constant(ngen, Complex{rr * rr - r * r, 0.0}) -
            interleaved_pair_sum(ngen, m);
    const GE chi = chi_of_height(lift_sqrt(s2));
    return chart_density(chart, pt, chi);
  };
  const double r_probe = 0.5 * (r_in + r_out);
  {
    const double fn = cap_density(cap_n, r_probe);
    const double fs = cap_density(cap_s, r_probe);
    if (std::abs(fn - fs) > 1e-9 * std::max(1.0, std::abs(fn)))
      throw std::logic_error("sphere_volume_chart: cap symmetry violated");
  }
  const double shell = classical_sphere_volume(n - 1);
  const double cap_integral = integrate_panels(
      [&](double r) {
        return cap_density(cap_n, r) * std::pow(r, n - 1);
      },
      {0.0, r_in, r_out}, quad.nodes_per_axis);
  const double caps = 2.0 * shell * cap_integral;  // south cap by symmetry

  // --- band (hyperspherical chart, reference meridian φ_j = π/2) ----------
  // √Ber(t, φ) = √Ber(t, φ_ref) · J_cl(φ) with ∫ J_cl dφ = vol(S^{n−1}_cl),
  // since the odd-even mixing of the metric involves only t and the odd
  // block is φ-independent; the classical angular factor integrates out.
  const SuperChart band = sphere_band_chart(n, m, rr);
  const auto band_density = [&](double t) {
    std::vector<double> pt(static_cast<std::size_t>(n), 0.5 * kPi);
    pt[0] = t;
    const GE rho =
        lift_sqrt(GE::constant(ngen, Complex{rr * rr, 0.0}) -
                  interleaved_pair_sum(ngen, m));
    const GE h = rho * lift_cos(GE::constant(ngen, Complex{t, 0.0}));
    const GE w = GE::constant(ngen, Complex{1.0, 0.0}) - chi_of_height(h) -
                 chi_of_height(-1.0 * h);
    return chart_density(band, pt, w);
  };
  const double t1 = std::acos(h2 / rr), t2 = std::acos(h1 / rr);
  const double t3 = std::acos(-h1 / rr), t4 = std::acos(-h2 / rr);
  const double band_total =
      shell * integrate_panels(band_density, {t1, t2, t3, t4},
                               quad.nodes_per_axis);

  return caps + band_total;
}

//=============================================================================
// Fubini–Study CP^{n|m} oracle
//=============================================================================

double cp_volume_chart(int n, int m, double radius, const QuadratureSpec& quad) {
  quad.validate();
  if (n < 0 || n > 2 || m < 0 || m > 2 || !(radius > 0.0))
    throw std::invalid_argument("cp_volume_chart: need 0<=n<=2, 0<=m<=2, R>0");
  // In the affine chart w = (1, w¹, …, wⁿ | θ¹, …, θᵐ) the Fubini–Study
  // volume density is (−2i)^m R^{2(n−m)} · (n|m-dependent const) · N^{m−n−1},
  // N = 1 + |w|² + i Σ θ^μ θ̄^μ.  Integrating out the phases of w and
  // substituting t = 1/(1 + ρ²) for ρ = |w| turns the even integral into
  //   vol(S^{2n−1}_cl) ∫₀¹ B(t) ((1−t)/t)^{n−1} / (2t²) dt,
  // with B(t) the Berezin integral of the lift of N^{m−n−1} at body 1/t.
  // B(t) ∝ t^{n+1}, so the integrand is a polynomial — Gauss–Legendre is
  // exact here for any reasonable node count.
  const int q = 2 * m;
  const double p_exp = static_cast<double>(m - n - 1);
  const auto berezin_at = [&](double t) -> Complex {
    GE nfs = GE::constant(q, Complex{1.0 / t, 0.0});
    for (int mu = 0; mu < m; ++mu)
      nfs += kI * (GE::generator(q, 2 * mu) * GE::generator(q, 2 * mu + 1));
    const GE val = lift_pow(nfs, p_exp);
    return (q == 0) ? val.body() : berezin_full(val);
  };
  const Complex odd_factor = std::pow(Complex{0.0, -2.0}, m);
  const double scale = std::pow(radius, 2 * (n - m));
  Complex value;
  if (n == 0) {
    value = scale * odd_factor * berezin_at(1.0);
  } else {
    const Complex integral = integrate_1d(
        [&](double t) {
          return berezin_at(t) * std::pow((1.0 - t) / t, n - 1) /
                 (2.0 * t * t);
        },
        0.0, 1.0, quad.nodes_per_axis);
    value = classical_sphere_volume(2 * n - 1) * scale * odd_factor * integral;
  }
  return require_real(value, "cp_volume_chart");
}

//=============================================================================
// Gaussian superintegrals
//=============================================================================

Complex gaussian_super_integral(const SuperMatrix<Complex>& Q,
                                const QuadratureSpec& quad) {
  quad.validate();
  const int p = Q.even_rows(), q = Q.odd_rows();
  for (int i = 0; i < p + q; ++i)
    for (int j = 0; j < p + q; ++j) {
      if (!Q.at(i, j).soul().is_zero())
        throw std::invalid_argument("gaussian_super_integral: Q must be numeric");
      const bool off_diag = (i < p) != (j < p);
      if (off_diag && std::abs(Q.at(i, j).body()) != 0.0)
        throw std::invalid_argument(
            "gaussian_super_integral: mixed even-odd block must vanish");
    }

  // Odd factor: ∫ D^qθ exp(−Σ_{ab} θ^a θ^b Q_{(p+b)(p+a)}), exact.
  Complex odd_factor{1.0, 0.0};
  if (q > 0) {
    GE f(q);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        const Complex c = Q.at(p + b, p + a).body();
        if (std::abs(c) != 0.0)
          f += c * (GE::generator(q, a) * GE::generator(q, b));
      }
    odd_factor = berezin_full(exp_nilpotent(-1.0 * f));
  }
  if (p == 0) return odd_factor;

  // Even factor: tensor Gauss–Legendre for ∫ exp(−xᵀAx) over a box sized by
  // the spectrum of A (≥ 6 standard deviations of the narrowest mode).
  std::vector<double> a(static_cast<std::size_t>(p) * p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      const Complex c = Q.at(i, j).body();
      if (std::abs(c.imag()) > 1e-12 * std::max(1.0, std::abs(c.real())))
        throw std::invalid_argument(
            "gaussian_super_integral: even block must be real");
      a[static_cast<std::size_t>(i) * p + j] = c.real();
    }
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      if (std::abs(a[static_cast<std::size_t>(i) * p + j] -
                   a[static_cast<std::size_t>(j) * p + i]) > 1e-12)
        throw std::invalid_argument(
            "gaussian_super_integral: even block must be symmetric");
  const std::vector<double> eigs = symmetric_eigenvalues(a, p);
  const double lam_min = eigs.front(), lam_max = eigs.back();
  if (!(lam_min > 0.0))
    throw std::invalid_argument(
        "gaussian_super_integral: even block must be positive definite");
  const double box_half = 6.0 / std::sqrt(lam_min);
  int nodes = std::max(quad.nodes_per_axis,
                       static_cast<int>(std::ceil(8.0 * box_half *
                                                  std::sqrt(lam_max))));
  nodes = std::clamp(nodes, 8, 120);
  const std::vector<Interval> box(static_cast<std::size_t>(p),
                                  Interval{-box_half, box_half});
  const Complex even_factor = integrate_tensor(
      [p, &a](const std::vector<double>& x) {
        double s = 0.0;
        for (int i = 0; i < p; ++i)
          for (int j = 0; j < p; ++j)
            s += x[static_cast<std::size_t>(i)] *
                 x[static_cast<std::size_t>(j)] *
                 a[static_cast<std::size_t>(i) * p + j];
        return Complex{std::exp(-s), 0.0};
      },
      box, nodes);
  return even_factor * odd_factor;
}

Complex gaussian_target(const SuperMatrix<Complex>& Q) {
  const SuperDimension d{Q.even_rows(), Q.odd_rows()};
  const Complex ber = berezinian(Q).body();
  if (std::abs(ber) == 0.0)
    throw std::domain_error("gaussian_target: Berezinian vanishes");
  return gaussian_factor(d) / std::sqrt(ber);
}

Complex pfaffian_small(const std::vector<Complex>& a, int q) {
  if (q != 0 && q != 2 && q != 4)
    throw std::invalid_argument("pfaffian_small: q must be 0, 2, or 4");
  if (static_cast<int>(a.size()) != q * q)
    throw std::invalid_argument("pfaffian_small: matrix size mismatch");
  if (q == 0) return Complex{1.0, 0.0};
  if (q == 2) return a[1];
  const auto c = [&](int i, int j) { return a[static_cast<std::size_t>(i) * 4 + j]; };
  return c(0, 1) * c(2, 3) - c(0, 2) * c(1, 3) + c(0, 3) * c(1, 2);
}

namespace {

double det_small(const std::vector<double>& a, int n) {
  std::vector<double> m = a;
  double det = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(m[static_cast<std::size_t>(i) * n + k]) >
          std::abs(m[static_cast<std::size_t>(piv) * n + k]))
        piv = i;
    if (m[static_cast<std::size_t>(piv) * n + k] == 0.0) return 0.0;
    if (piv != k) {
      for (int j = 0; j < n; ++j)
        std::swap(m[static_cast<std::size_t>(piv) * n + j],
                  m[static_cast<std::size_t>(k) * n + j]);
      det = -det;
    }
    const double d = m[static_cast<std::size_t>(k) * n + k];
    det *= d;
    for (int i = k + 1; i < n; ++i) {
      const double f = m[static_cast<std::size_t>(i) * n + k] / d;
      for (int j = k; j < n; ++j)
        m[static_cast<std::size_t>(i) * n + j] -=
            f * m[static_cast<std::size_t>(k) * n + j];
    }
  }
  return det;
}

}  // namespace

SuperMatrix<Complex> random_admissible_gaussian_q(std::mt19937& rng, int p,
                                                  int m_pairs) {
  if (p < 0 || m_pairs < 0 || p + m_pairs == 0)
    throw std::invalid_argument("random_admissible_gaussian_q: empty space");
  const int q = 2 * m_pairs;
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  SuperMatrix<Complex> Q(p, q, 0);
  if (p > 0) {
    // A = BᵀB + I: symmetric, eigenvalues ≥ 1 (keeps the box quadrature cheap).
    std::vector<double> b(static_cast<std::size_t>(p) * p);
    for (double& x : b) x = unif(rng);
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) {
        double s = (i == j) ? 1.0 : 0.0;
        for (int k = 0; k < p; ++k)
          s += b[static_cast<std::size_t>(k) * p + i] *
               b[static_cast<std::size_t>(k) * p + j];
        Q.set(i, j, Complex{s, 0.0});
      }
  }
  if (q > 0) {
    // D = RᵀJR with det R > 0: antisymmetric with Pf(D) = det(R)·Pf(J) > 0,
    // so the brute-force integral picks the principal branch of √det D.
    std::vector<double> r(static_cast<std::size_t>(q) * q);
    do {
      for (double& x : r) x = unif(rng);
    } while (std::abs(det_small(r, q)) < 0.2);
    if (det_small(r, q) < 0.0)
      for (int j = 0; j < q; ++j) r[static_cast<std::size_t>(j)] = -r[static_cast<std::size_t>(j)];
    std::vector<double> jmat(static_cast<std::size_t>(q) * q, 0.0);
    for (int k = 0; k < m_pairs; ++k) {
      jmat[static_cast<std::size_t>(2 * k) * q + 2 * k + 1] = -1.0;
      jmat[static_cast<std::size_t>(2 * k + 1) * q + 2 * k] = 1.0;
    }
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) {
        double s = 0.0;
        for (int k = 0; k < q; ++k)
          for (int l = 0; l < q; ++l)
            s += r[static_cast<std::size_t>(k) * q + i] *
                 jmat[static_cast<std::size_t>(k) * q + l] *
                 r[static_cast<std::size_t>(l) * q + j];
        Q.set(p + i, p + j, Complex{s, 0.0});
      }
  }
  return Q;
}

//=============================================================================
// U(1|1) Maurer–Cartan
//=============================================================================

namespace {

using Mat2 = std::array<GE, 4>;  // row-major 2×2 over Λ₄

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

/// Inverse of a 2×2 array with even diagonal and odd off-diagonal entries.
/// The commutative adjugate formula fails here (cb = −bc), so route through
/// the supermatrix Schur-complement inverse for shape (1|1)×(1|1).
Mat2 mat2_inv(const Mat2& g) {
  SuperMatrix<Complex> m(1, 1, g[0].generators());
  m.set(0, 0, g[0]);
  m.set(0, 1, g[1]);
  m.set(1, 0, g[2]);
  m.set(1, 1, g[3]);
  const SuperMatrix<Complex> gi = inverse(m);
  return {gi.at(0, 0), gi.at(0, 1), gi.at(1, 0), gi.at(1, 1)};
}

double mat2_max_dev(const Mat2& a, const Mat2& b) {
  double d = 0.0;
  for (int k = 0; k < 4; ++k) d = std::max(d, max_abs_coefficient(a[k] - b[k]));
  return d;
}

}  // namespace

U11Result u11_maurer_cartan() {
  constexpr int N = 4;  // θ, θ̄, and one augmentation pair
  const GE one = GE::constant(N, Complex{1.0, 0.0});
  const GE th = GE::generator(N, 0), thb = GE::generator(N, 1);
  const GE eps = GE::generator(N, 2) * GE::generator(N, 3);

  const auto group_element = [&](const GE& alpha, const GE& beta) -> Mat2 {
    const GE ea = lift_exp(kI * alpha);
    const GE eb = lift_exp(kI * beta);
    const GE eba = lift_exp(kI * (beta - alpha));
    const GE half_i_tt = (0.5 * kI) * (th * thb);
    return {ea * (one + half_i_tt), th, (kI * thb) * eb,
            eba * (one - half_i_tt)};
  };

  const std::array<std::pair<double, double>, 3> samples{
      {{0.3, 1.1}, {1.7, -0.4}, {2.9, 0.6}}};

  GE density(N);
  Complex first_body{0.0, 0.0};
  for (std::size_t sample = 0; sample < samples.size(); ++sample) {
    const GE alpha = GE::constant(N, Complex{samples[sample].first, 0.0});
    const GE beta = GE::constant(N, Complex{samples[sample].second, 0.0});
    const Mat2 g = group_element(alpha, beta);
    const Mat2 ginv = mat2_inv(g);
    {
      const Mat2 id{one, GE(N), GE(N), one};
      if (mat2_max_dev(mat2_mul(g, ginv), id) > 1e-12)
        throw std::logic_error("u11_maurer_cartan: g·g⁻¹ ≠ 1");
    }

    // Maurer–Cartan components A_μ = (∂_μ g) g⁻¹ for μ ∈ (α, β | θ, θ̄):
    // even derivatives by nilpotent augmentation, odd ones exactly.
    std::array<Mat2, 4> a_mu;
    for (int mu = 0; mu < 2; ++mu) {
      const Mat2 gp = group_element(mu == 0 ? alpha + eps : alpha,
                                    mu == 1 ? beta + eps : beta);
      Mat2 dg;
      for (int k = 0; k < 4; ++k) dg[k] = extract_augmentation(gp[k], 2, 3);
      a_mu[static_cast<std::size_t>(mu)] = mat2_mul(dg, ginv);
    }
    for (int mu = 0; mu < 2; ++mu) {
      Mat2 dg;
      for (int k = 0; k < 4; ++k)
        dg[k] = odd_derivative(g[k], mu, DerivativeSide::left);
      a_mu[static_cast<std::size_t>(2 + mu)] = mat2_mul(dg, ginv);
    }

    // Expand in the u(1|1) basis e₁ = [[i,0],[0,0]], e₂ = [[0,0],[0,i]],
    // ε₁ = [[0,1],[i,0]], ε₂ = [[0,i],[1,0]]:
    //   C₁ = −i a₀₀, C₂ = −i a₁₁, C₃ = (a₀₁ − i a₁₀)/2, C₄ = (a₁₀ − i a₀₁)/2.
    SuperMatrix<Complex> mc(2, 2, N);
    for (int mu = 0; mu < 4; ++mu) {
      const Mat2& a = a_mu[static_cast<std::size_t>(mu)];
      const GE c1 = (-1.0 * kI) * a[0];
      const GE c2 = (-1.0 * kI) * a[3];
      const GE c3 = 0.5 * (a[1] - kI * a[2]);
      const GE c4 = 0.5 * (a[2] - kI * a[1]);
      const Mat2 rebuilt{kI * c1, c3 + kI * c4, kI * c3 + c4, kI * c2};
      if (mat2_max_dev(rebuilt, a) > 1e-10)
        throw std::runtime_error(
            "u11_maurer_cartan: basis expansion residual exceeds 1e-10");
      mc.set(mu, 0, c1);
      mc.set(mu, 1, c2);
      mc.set(mu, 2, c3);
      mc.set(mu, 3, c4);
    }

    const GE ber = berezinian(mc);
    if (max_abs_coefficient(ber.soul()) > 1e-12)
      throw std::logic_error("u11_maurer_cartan: density is not constant");
    if (sample == 0) {
      density = ber;
      first_body = ber.body();
    } else if (std::abs(ber.body() - first_body) > 1e-12) {
      throw std::logic_error(
          "u11_maurer_cartan: density varies across group samples");
    }
  }

  U11Result res;
  res.density = density;
  res.berezinian_body = first_body;
  res.density_modulus = std::abs(first_body);
  // Haar volume ∫ dα dβ Dθ Dθ̄ · density: the density was verified soul-free
  // above (up to coefficient dust, or we would have thrown), and the Berezin
  // integral of a soul-free element vanishes identically — an exact
  // structural 0, not a small number.
  res.total_volume = 0.0;
  return res;
}

//=============================================================================
// Hopf fibration checks
//=============================================================================

namespace {

double hopf_normalized_max_deviation(double radius, int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unif(-5.0, 5.0);
  double worst = 0.0;
  const Complex vs1 =
      normalized_volume(NormalizedFamily::sphere, Complex{1.0, 0.0},
                        std::nullopt, radius);
  for (int k = 0; k < count; ++k) {
    Complex z;
    do {
      z = Complex{unif(rng), unif(rng)};
    } while (std::abs(z) > 5.0);
    const Complex lhs = normalized_volume(
        NormalizedFamily::sphere, 2.0 * z + Complex{1.0, 0.0}, std::nullopt,
        radius);
    const Complex rhs =
        normalized_volume(NormalizedFamily::cp, z, std::nullopt, radius) * vs1;
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    worst = std::max(worst, std::abs(lhs - rhs) / scale);
  }
  return worst;
}

}  // namespace

bool hopf_factorization_check(int n, int m, double radius) {
  if (n < 0 || m < 0 || !(radius > 0.0))
    throw std::invalid_argument("hopf_factorization_check: bad parameters");
  const double lhs = sphere_volume(2 * n + 1, m, radius).value.value.real();
  const double rhs =
      cp_volume(n, m, radius).value.value.real() * 2.0 * kPi * radius;
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  if (std::abs(lhs - rhs) > 1e-12 * scale) return false;
  return hopf_normalized_max_deviation(radius, 100, 20260816u) <= 1e-10;
}

CavalieriReport cavalieri_check(double radius, int samples) {
  if (!(radius > 0.0) || samples < 1)
    throw std::invalid_argument("cavalieri_check: bad parameters");
  const SuperChart chart = hopf_chart_s32(radius);
  std::mt19937 rng(977201u);
  std::uniform_real_distribution<double> coord(-1.5, 1.5);
  std::uniform_real_distribution<double> angle(0.1, 6.2);
  CavalieriReport rep;
  bool phase_ok = true;
  for (int k = 0; k < samples; ++k) {
    const double u = coord(rng), v = coord(rng), al = angle(rng);
    const SuperMatrix<Complex> g = pullback_metric(chart, {u, v, al});
    const GE e = berezinian(g);
    GE nfs = GE::constant(4, Complex{1.0 + u * u + v * v, 0.0}) +
             kI * (GE::generator(4, 0) * GE::generator(4, 1));
    const GE t =
        Complex{-4.0 * radius * radius, 0.0} * lift_pow(nfs, -2.0);
    const Complex ratio = e.body() / t.body();
    if (k == 0) {
      rep.unit_phase = ratio;
      if (std::abs(std::abs(ratio) - 1.0) > 1e-10) phase_ok = false;
    } else if (std::abs(ratio - rep.unit_phase) > 1e-10) {
      phase_ok = false;
    }
    const GE diff = e - rep.unit_phase * t;
    const double scale = std::max(1.0, max_abs_coefficient(e));
    rep.max_coeff_deviation =
        std::max(rep.max_coeff_deviation, max_abs_coefficient(diff) / scale);
  }
  rep.pass = phase_ok && rep.max_coeff_deviation <= 1e-10;
  return rep;
}

//=============================================================================
// Verification suite driver
//=============================================================================

namespace {

VerificationReport make_report(std::string name, Complex closed, Complex oracle,
                               double tol, int nodes, double t0) {
  VerificationReport r;
  r.case_name = std::move(name);
  r.closed_form = closed;
  r.oracle = oracle;
  r.abs_err = std::abs(closed - oracle);
  r.rel_err =
      r.abs_err / std::max({1.0, std::abs(closed), std::abs(oracle)});
  r.nodes = nodes;
  r.elapsed_ms = now_ms() - t0;
  r.pass = r.rel_err <= tol;
  return r;
}

void run_sphere_case(std::vector<VerificationReport>& out,
                     const QuadratureSpec& quad) {
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 2; ++m) {
      const VolumeValue cf = sphere_volume(n, m, 1.0);
      const double closed = cf.value.value.real();
      const double tol = cf.value.is_exact_zero ? 1e-8 : 1e-6;
      double t0 = now_ms();
      const double via_delta = sphere_volume_delta(n, m, 1.0, quad);
      out.push_back(make_report("sphere n=" + std::to_string(n) +
                                    " m=" + std::to_string(m) + " delta",
                                closed, via_delta, tol, 0, t0));
      t0 = now_ms();
      const double via_chart = sphere_volume_chart(n, m, 1.0, quad);
      out.push_back(make_report("sphere n=" + std::to_string(n) +
                                    " m=" + std::to_string(m) + " chart",
                                closed, via_chart, tol, quad.nodes_per_axis,
                                t0));
    }
}

void run_cp_case(std::vector<VerificationReport>& out,
                 const QuadratureSpec& quad) {
  const std::array<std::array<double, 3>, 5> cases{
      {{1, 1, 0.5}, {1, 1, 1.0}, {1, 1, 2.0}, {2, 1, 1.0}, {2, 2, 1.0}}};
  for (const auto& c : cases) {
    const int n = static_cast<int>(c[0]), m = static_cast<int>(c[1]);
    const double rr = c[2];
    const VolumeValue cf = cp_volume(n, m, rr);
    const double tol = cf.value.is_exact_zero ? 1e-8 : 1e-6;
    const double t0 = now_ms();
    const double oracle = cp_volume_chart(n, m, rr, quad);
    out.push_back(make_report(
        "cp n=" + std::to_string(n) + " m=" + std::to_string(m) +
            " R=" + std::to_string(rr).substr(0, 3),
        cf.value.value.real(), oracle, tol, quad.nodes_per_axis, t0));
  }
}

void run_u11_case(std::vector<VerificationReport>& out) {
  double t0 = now_ms();
  const U11Result res = u11_maurer_cartan();
  out.push_back(make_report("u11 density modulus", Complex{2.0, 0.0},
                            Complex{res.density_modulus, 0.0}, 1e-10, 0, t0));
  VerificationReport vol = make_report("u11 total volume", Complex{0.0, 0.0},
                                       Complex{res.total_volume, 0.0}, 1e-12,
                                       0, t0);
  vol.pass = res.total_volume == 0.0;  // exact structural zero
  out.push_back(vol);
}

void run_hopf_case(std::vector<VerificationReport>& out) {
  const std::array<std::pair<int, int>, 3> nm{{{0, 0}, {1, 1}, {2, 1}}};
  for (const double rr : {0.5, 1.0, 2.0}) {
    for (const auto& [n, m] : nm) {
      const double t0 = now_ms();
      const double lhs = sphere_volume(2 * n + 1, m, rr).value.value.real();
      const double rhs =
          cp_volume(n, m, rr).value.value.real() * 2.0 * kPi * rr;
      out.push_back(make_report("hopf closed n=" + std::to_string(n) +
                                    " m=" + std::to_string(m) +
                                    " R=" + std::to_string(rr).substr(0, 3),
                                lhs, rhs, 1e-12, 0, t0));
    }
    const double t0 = now_ms();
    const double dev = hopf_normalized_max_deviation(rr, 100, 20260816u);
    VerificationReport r =
        make_report("hopf normalized identity R=" +
                        std::to_string(rr).substr(0, 3),
                    Complex{0.0, 0.0}, Complex{dev, 0.0}, 1e-10, 0, t0);
    r.pass = dev <= 1e-10;
    out.push_back(r);
  }
}

void run_gaussian_case(std::vector<VerificationReport>& out,
                       const QuadratureSpec& quad) {
  std::mt19937 rng(424243u);
  const std::array<std::pair<int, int>, 5> shapes{
      {{1, 1}, {2, 0}, {2, 1}, {3, 1}, {2, 2}}};
  int idx = 0;
  for (const auto& [p, mp] : shapes) {
    const SuperMatrix<Complex> q = random_admissible_gaussian_q(rng, p, mp);
    const double t0 = now_ms();
    const Complex brute = gaussian_super_integral(q, quad);
    const Complex target = gaussian_target(q);
    out.push_back(make_report("gaussian p=" + std::to_string(p) +
                                  " q=" + std::to_string(2 * mp) + " #" +
                                  std::to_string(++idx),
                              target, brute, 1e-8, quad.nodes_per_axis, t0));
  }
}

void run_cavalieri_case(std::vector<VerificationReport>& out) {
  for (const double rr : {1.0, 0.7}) {
    const double t0 = now_ms();
    const CavalieriReport rep = cavalieri_check(rr, 4);
    VerificationReport r = make_report(
        "cavalieri R=" + std::to_string(rr).substr(0, 3), Complex{0.0, 0.0},
        Complex{rep.max_coeff_deviation, 0.0}, 1e-10, 0, t0);
    r.pass = rep.pass;
    out.push_back(r);
  }
}

}  // namespace

std::vector<VerificationReport> run_verification_suite(
    const std::string& case_name, const QuadratureSpec& quad) {
  quad.validate();
  std::vector<VerificationReport> out;
  bool matched = false;
  const bool all = case_name == "all";
  if (all || case_name == "sphere") {
    run_sphere_case(out, quad);
    matched = true;
  }
  if (all || case_name == "cp") {
    run_cp_case(out, quad);
    matched = true;
  }
  if (all || case_name == "u11") {
    run_u11_case(out);
    matched = true;
  }
  if (all || case_name == "hopf") {
    run_hopf_case(out);
    matched = true;
  }
  if (all || case_name == "gaussian") {
    run_gaussian_case(out, quad);
    matched = true;
  }
  if (all || case_name == "cavalieri") {
    run_cavalieri_case(out);
    matched = true;
  }
  if (!matched)
    throw std::invalid_argument("run_verification_suite: unknown case '" +
                                case_name + "'");
  return out;
}

}  // namespace supervol
