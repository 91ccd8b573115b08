/**
 * @file charts.cpp
 * @brief Lifts, augmentation derivatives, pullback metrics, chart factories.
 */
#include "supervol/charts.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace supervol {

//=============================================================================
// Taylor lifts
//=============================================================================

namespace {

/// Number of derivatives that always suffices: an even soul in Λ_N is
/// nilpotent of order ⌊N/2⌋ + 1.
std::size_t lift_order(const GE& a) {
  return static_cast<std::size_t>(a.generators() / 2) + 2;
}

}  // namespace

GE lift_sqrt(const GE& a) {
  const Complex b = a.body();
  if (std::abs(b) == 0.0) throw std::domain_error("lift_sqrt: zero body");
  std::vector<Complex> d(lift_order(a));
  d[0] = std::sqrt(b);
  for (std::size_t j = 1; j < d.size(); ++j)
    d[j] = d[j - 1] * (0.5 - static_cast<double>(j - 1)) / b;
  return taylor_lift(d, a);
}

GE lift_pow(const GE& a, double p) {
  const Complex b = a.body();
  std::vector<Complex> d(lift_order(a));
  double falling = 1.0;  // p(p−1)…(p−j+1)
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j > 0) falling *= p - static_cast<double>(j - 1);
    d[j] = (falling == 0.0) ? Complex{0.0, 0.0}
                            : falling * std::pow(b, p - static_cast<double>(j));
  }
  return taylor_lift(d, a);
}

GE lift_exp(const GE& a) {
  const Complex e = std::exp(a.body());
  std::vector<Complex> d(lift_order(a), e);
  return taylor_lift(d, a);
}

GE lift_sin(const GE& a) {
  const Complex s = std::sin(a.body()), c = std::cos(a.body());
  const Complex cycle[4] = {s, c, -s, -c};
  std::vector<Complex> d(lift_order(a));
  for (std::size_t j = 0; j < d.size(); ++j) d[j] = cycle[j % 4];
  return taylor_lift(d, a);
}

GE lift_cos(const GE& a) {
  const Complex s = std::sin(a.body()), c = std::cos(a.body());
  const Complex cycle[4] = {c, -s, -c, s};
  std::vector<Complex> d(lift_order(a));
  for (std::size_t j = 0; j < d.size(); ++j) d[j] = cycle[j % 4];
  return taylor_lift(d, a);
}

GE extract_augmentation(const GE& a, int aug1, int aug2) {
  const std::uint32_t augmask =
      (std::uint32_t{1} << aug1) | (std::uint32_t{1} << aug2);
  std::vector<std::pair<std::uint32_t, Complex>> terms;
  for (const auto& [mask, c] : a.terms())
    if ((mask & augmask) == augmask) terms.emplace_back(mask & ~augmask, c);
  return GE::from_terms(a.generators(), terms);
}

//=============================================================================
// SmoothStep
//=============================================================================

namespace {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace

SmoothStep::SmoothStep(int k) : k_(k) {
  if (k < 1) throw std::invalid_argument("SmoothStep: need k >= 1");
  // S_k(x) = Σ_{j=0}^{k} C(k+j, j) C(2k+1, k−j) (−1)^j x^{k+1+j}
  coeffs_.assign(static_cast<std::size_t>(2 * k + 2), 0.0);
  for (int j = 0; j <= k; ++j) {
    const double c = binomial(k + j, j) * binomial(2 * k + 1, k - j) *
                     ((j % 2 == 0) ? 1.0 : -1.0);
    coeffs_[static_cast<std::size_t>(k + 1 + j)] = c;
  }
}

double SmoothStep::value(double u) const { return derivative(u, 0); }

double SmoothStep::derivative(double u, int j) const {
  if (j < 0) throw std::invalid_argument("SmoothStep: derivative order < 0");
  if (u < 0.0) return 0.0;
  if (u > 1.0) return j == 0 ? 1.0 : 0.0;
  // j-th derivative of the polynomial: Σ_d c_d d!/(d−j)! u^{d−j}, by Horner.
  const int deg = static_cast<int>(coeffs_.size()) - 1;
  double r = 0.0;
  for (int d = deg; d >= j; --d) {
    double fall = 1.0;
    for (int t = 0; t < j; ++t) fall *= static_cast<double>(d - t);
    r = r * u + coeffs_[static_cast<std::size_t>(d)] * fall;
  }
  return r;
}

GE SmoothStep::lift(const GE& u) const {
  const Complex b = u.body();
  if (std::abs(b.imag()) > 1e-9 * (1.0 + std::abs(b.real())))
    throw std::domain_error("SmoothStep::lift: body must be real");
  const std::size_t need = static_cast<std::size_t>(u.generators() / 2) + 2;
  if (need > static_cast<std::size_t>(k_) + 1)
    throw std::domain_error(
        "SmoothStep::lift: step order too low for this algebra");
  std::vector<Complex> d(need);
  for (std::size_t j = 0; j < need; ++j)
    d[j] = Complex{derivative(b.real(), static_cast<int>(j)), 0.0};
  return taylor_lift(d, u);
}

//=============================================================================
// Pullback metric
//=============================================================================

namespace {

double max_abs_coefficient(const GE& a) {
  double m = 0.0;
  for (const auto& [mask, c] : a.terms()) m = std::max(m, std::abs(c));
  return m;
}

/// Contract a Jacobian with the flat ambient metric
/// (δ on even coords; [[0, −1], [1, 0]] per interleaved odd pair):
///   g_{a'b'} = Σ_{A,B} (−1)^{Ã(B̃ + b̃')} J^A_{a'} J^B_{b'} G_{AB}.
SuperMatrix<Complex> assemble_metric(const SuperChart& c,
                                     const std::vector<GEVec>& jac,
                                     bool assert_supersymmetry) {
  const int e = c.even_dim, o = c.odd_dim, N = c.num_generators;
  const int dim = e + o;
  const int pairs = c.ambient_odd / 2;
  std::vector<GE> entries(static_cast<std::size_t>(dim) * dim, GE(N));
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      GE sum(N);
      for (int i = 0; i < c.ambient_even; ++i)
        sum += jac[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] *
               jac[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)];
      // Odd ambient pairs: G_{ξη} = −1, G_{ηξ} = +1, both A, B odd, so the
      // super sign reduces to (−1)^{1 + b̃'}.
      const double sgn = (b < e) ? -1.0 : 1.0;
      for (int k = 0; k < pairs; ++k) {
        const std::size_t xi = static_cast<std::size_t>(c.ambient_even + 2 * k);
        const std::size_t eta = xi + 1;
        GE term = jac[static_cast<std::size_t>(a)][xi] *
                      jac[static_cast<std::size_t>(b)][eta] * Complex{-1.0, 0.0} +
                  jac[static_cast<std::size_t>(a)][eta] *
                      jac[static_cast<std::size_t>(b)][xi];
        sum += sgn * term;
      }
      entries[static_cast<std::size_t>(a) * dim + b] = sum;
    }

  if (assert_supersymmetry) {
    double scale = 1.0, dev = 0.0;
    for (const GE& g : entries) scale = std::max(scale, max_abs_coefficient(g));
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) {
        const bool both_odd = a >= e && b >= e;
        const GE& gab = entries[static_cast<std::size_t>(a) * dim + b];
        const GE& gba = entries[static_cast<std::size_t>(b) * dim + a];
        const GE diff = both_odd ? gab + gba : gab - gba;
        dev = std::max(dev, max_abs_coefficient(diff));
      }
    if (dev > 1e-9 * scale)
      throw std::logic_error(
          "pullback_metric: supersymmetry violated (deviation " +
          std::to_string(dev) + ")");
  }

  SuperMatrix<Complex> g(e, o, N);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      g.set(a, b, entries[static_cast<std::size_t>(a) * dim + b]);
  return g;
}

void check_chart(const SuperChart& c, const std::vector<double>& pt) {
  if (static_cast<int>(pt.size()) != c.even_dim)
    throw std::invalid_argument("pullback_metric: wrong point dimension");
  if (c.num_generators != c.odd_dim + 2)
    throw std::invalid_argument("pullback_metric: chart needs odd_dim+2 generators");
  if (c.ambient_odd % 2 != 0)
    throw std::invalid_argument("pullback_metric: ambient odd coords must pair up");
  if (!c.embed) throw std::invalid_argument("pullback_metric: chart has no embedding");
}

GEVec call_embed(const SuperChart& c, const GEVec& xs, const GEVec& th) {
  GEVec amb = c.embed(xs, th);
  if (static_cast<int>(amb.size()) != c.ambient_even + c.ambient_odd)
    throw std::logic_error("pullback_metric: embedding returned wrong arity");
  return amb;
}

}  // namespace

SuperMatrix<Complex> pullback_metric(const SuperChart& c,
                                     const std::vector<double>& pt) {
  check_chart(c, pt);
  const int N = c.num_generators;
  const int aug1 = c.odd_dim, aug2 = c.odd_dim + 1;
  const GE eps = GE::generator(N, aug1) * GE::generator(N, aug2);

  GEVec xs, th;
  xs.reserve(static_cast<std::size_t>(c.even_dim));
  for (double v : pt) xs.push_back(GE::constant(N, Complex{v, 0.0}));
  th.reserve(static_cast<std::size_t>(c.odd_dim));
  for (int mu = 0; mu < c.odd_dim; ++mu) th.push_back(GE::generator(N, mu));

  const GEVec amb0 = call_embed(c, xs, th);
  if (c.constraint_residual) {
    double scale = 1.0;
    for (const GE& a : amb0) {
      const double s = max_abs_coefficient(a);
      scale = std::max(scale, s * s);
    }
    const double res = max_abs_coefficient(c.constraint_residual(amb0));
    if (res > 1e-11 * scale)
      throw std::logic_error("pullback_metric: constraint residual " +
                             std::to_string(res));
  }

  std::vector<GEVec> jac(static_cast<std::size_t>(c.even_dim + c.odd_dim));
  for (int a = 0; a < c.even_dim; ++a) {
    GEVec aug = xs;
    aug[static_cast<std::size_t>(a)] += eps;
    const GEVec amb = call_embed(c, aug, th);
    GEVec row;
    row.reserve(amb.size());
    for (const GE& comp : amb)
      row.push_back(extract_augmentation(comp, aug1, aug2));
    jac[static_cast<std::size_t>(a)] = std::move(row);
  }
  for (int mu = 0; mu < c.odd_dim; ++mu) {
    GEVec row;
    row.reserve(amb0.size());
    for (const GE& comp : amb0)
      row.push_back(odd_derivative(comp, mu, DerivativeSide::left));
    jac[static_cast<std::size_t>(c.even_dim + mu)] = std::move(row);
  }
  return assemble_metric(c, jac, /*assert_supersymmetry=*/true);
}

SuperMatrix<Complex> pullback_metric_fd(const SuperChart& c,
                                        const std::vector<double>& pt,
                                        double step) {
  check_chart(c, pt);
  if (!(step > 0.0)) throw std::invalid_argument("pullback_metric_fd: step <= 0");
  const int N = c.num_generators;
  GEVec th;
  for (int mu = 0; mu < c.odd_dim; ++mu) th.push_back(GE::generator(N, mu));
  auto coords_at = [&](const std::vector<double>& q) {
    GEVec xs;
    for (double v : q) xs.push_back(GE::constant(N, Complex{v, 0.0}));
    return xs;
  };
  const GEVec amb0 = call_embed(c, coords_at(pt), th);

  std::vector<GEVec> jac(static_cast<std::size_t>(c.even_dim + c.odd_dim));
  for (int a = 0; a < c.even_dim; ++a) {
    std::vector<double> plus = pt, minus = pt;
    plus[static_cast<std::size_t>(a)] += step;
    minus[static_cast<std::size_t>(a)] -= step;
    const GEVec ap = call_embed(c, coords_at(plus), th);
    const GEVec am = call_embed(c, coords_at(minus), th);
    GEVec row;
    for (std::size_t i = 0; i < ap.size(); ++i)
      row.push_back((ap[i] - am[i]) * Complex{0.5 / step, 0.0});
    jac[static_cast<std::size_t>(a)] = std::move(row);
  }
  for (int mu = 0; mu < c.odd_dim; ++mu) {
    GEVec row;
    for (const GE& comp : amb0)
      row.push_back(odd_derivative(comp, mu, DerivativeSide::left));
    jac[static_cast<std::size_t>(c.even_dim + mu)] = std::move(row);
  }
  // No supersymmetry assertion here: finite differences carry O(step²) noise.
  return assemble_metric(c, jac, /*assert_supersymmetry=*/false);
}

//=============================================================================
// Chart factories
//=============================================================================

namespace {

/// Σ over interleaved odd pairs of 2 ξ^μ η^μ, as an element of Λ_N.
GE odd_pair_form(const GEVec& th) {
  if (th.empty()) return GE(0);
  GE s(th.front().generators());
  for (std::size_t mu = 0; 2 * mu + 1 < th.size(); ++mu)
    s += 2.0 * (th[2 * mu] * th[2 * mu + 1]);
  return s;
}

}  // namespace

SuperChart sphere_cap_chart(int n, int m, double radius, int sign) {
  if (n < 0 || m < 0 || !(radius > 0.0) || (sign != 1 && sign != -1))
    throw std::invalid_argument("sphere_cap_chart: invalid parameters");
  SuperChart c;
  c.even_dim = n;
  c.odd_dim = 2 * m;
  c.ambient_even = n + 1;
  c.ambient_odd = 2 * m;
  c.num_generators = 2 * m + 2;
  const int ngen = c.num_generators;
  c.embed = [n, m, radius, sign, ngen](const GEVec& x, const GEVec& th) {
    GE s2 = GE::constant(ngen, Complex{radius * radius, 0.0});
    for (const GE& xa : x) s2 -= xa * xa;
    if (m > 0) s2 -= odd_pair_form(th);
    GEVec amb;
    amb.reserve(static_cast<std::size_t>(n + 1 + 2 * m));
    for (const GE& xa : x) amb.push_back(xa);
    amb.push_back(static_cast<double>(sign) * lift_sqrt(s2));
    for (const GE& t : th) amb.push_back(t);
    return amb;
  };
  c.constraint_residual = [n, m, radius, ngen](const GEVec& amb) {
    GE r = GE::constant(ngen, Complex{-radius * radius, 0.0});
    for (int i = 0; i <= n; ++i) r += amb[static_cast<std::size_t>(i)] * amb[static_cast<std::size_t>(i)];
    for (int mu = 0; mu < m; ++mu)
      r += 2.0 * (amb[static_cast<std::size_t>(n + 1 + 2 * mu)] *
                  amb[static_cast<std::size_t>(n + 1 + 2 * mu + 1)]);
    return r;
  };
  return c;
}

SuperChart sphere_band_chart(int n, int m, double radius) {
  if (n < 1 || m < 0 || !(radius > 0.0))
    throw std::invalid_argument("sphere_band_chart: need n >= 1");
  SuperChart c;
  c.even_dim = n;  // (t, φ₁ … φ_{n−1})
  c.odd_dim = 2 * m;
  c.ambient_even = n + 1;
  c.ambient_odd = 2 * m;
  c.num_generators = 2 * m + 2;
  const int ngen = c.num_generators;
  c.embed = [n, m, radius, ngen](const GEVec& x, const GEVec& th) {
    GE s2 = GE::constant(ngen, Complex{radius * radius, 0.0});
    if (m > 0) s2 -= odd_pair_form(th);
    const GE rho = lift_sqrt(s2);
    const GE st = lift_sin(x[0]), ct = lift_cos(x[0]);
    // Hyperspherical unit vector ω(φ) ∈ S^{n−1}: Σ (ωⁱ)² = 1 exactly.
    GEVec omega;
    omega.reserve(static_cast<std::size_t>(n));
    GE sin_chain = GE::constant(ngen, Complex{1.0, 0.0});
    for (int i = 0; i + 1 < n; ++i) {
      omega.push_back(sin_chain * lift_cos(x[static_cast<std::size_t>(1 + i)]));
      sin_chain = sin_chain * lift_sin(x[static_cast<std::size_t>(1 + i)]);
    }
    omega.push_back(sin_chain);
    GEVec amb;
    amb.reserve(static_cast<std::size_t>(n + 1 + 2 * m));
    const GE rst = rho * st;
    for (int i = 0; i < n; ++i) amb.push_back(rst * omega[static_cast<std::size_t>(i)]);
    amb.push_back(rho * ct);
    for (const GE& t : th) amb.push_back(t);
    return amb;
  };
  c.constraint_residual =
      sphere_cap_chart(n, m, radius, 1).constraint_residual;
  return c;
}

SuperChart hopf_chart_s32(double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("hopf_chart_s32: radius <= 0");
  SuperChart c;
  c.even_dim = 3;  // (u, v, α)
  c.odd_dim = 2;   // (θ, θ̄)
  c.ambient_even = 4;
  c.ambient_odd = 2;
  c.num_generators = 4;
  const int ngen = 4;
  const double R = radius;
  c.embed = [R, ngen](const GEVec& x, const GEVec& od) {
    const Complex I{0.0, 1.0};
    const GE& u = x[0];
    const GE& v = x[1];
    const GE& alpha = x[2];
    const GE& th = od[0];
    const GE& thb = od[1];
    const GE w1 = u + I * v;
    const GE w1b = u - I * v;  // literal conjugate of w¹ for real (u, v)
    // N = 1 + w w̄ + iθθ̄ is real under the conjugation that swaps θ ↔ θ̄.
    const GE nfs = GE::constant(ngen, Complex{1.0, 0.0}) + w1 * w1b + I * (th * thb);
    const GE ninvh = lift_pow(nfs, -0.5);
    const GE phase = lift_exp(I * alpha);
    const GE phaseb = lift_exp(-I * alpha);
    const GE pref = R * (phase * ninvh);
    const GE prefb = R * (phaseb * ninvh);
    const GE z0 = pref, z0b = prefb;
    const GE z1 = pref * w1, z1b = prefb * w1b;
    const GE zeta = pref * th, zetab = prefb * thb;
    const Complex half{0.5, 0.0};
    const Complex mhalf_i{0.0, -0.5};  // 1/(2i)
    GEVec amb;
    amb.reserve(6);
    amb.push_back((z0 + z0b) * half);
    amb.push_back((z0 - z0b) * mhalf_i);
    amb.push_back((z1 + z1b) * half);
    amb.push_back((z1 - z1b) * mhalf_i);
    amb.push_back((zeta + zetab) * half);
    amb.push_back((zeta - zetab) * mhalf_i);
    return amb;
  };
  c.constraint_residual = sphere_cap_chart(3, 1, radius, 1).constraint_residual;
  return c;
}

}  // namespace supervol
