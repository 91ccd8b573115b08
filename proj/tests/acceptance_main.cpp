/**
 * @file acceptance_main.cpp
 * @brief Acceptance gate: every release criterion is exercised at its stated
 *        tolerance and reported as a single [PASS]/[FAIL] line.  The binary
 *        exits nonzero if any criterion fails.
 */
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <random>
#include <string>
#include <vector>

#include "supervol/oracles.hpp"
#include "supervol/rational.hpp"
#include "supervol/special_functions.hpp"
#include "supervol/supermatrix.hpp"
#include "supervol/volumes.hpp"

using supervol::Complex;
using supervol::kPi;

namespace {

int g_failures = 0;

double now_s() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

void report(int id, const std::string& label, bool ok,
            const std::string& detail) {
  std::printf("[%s] %d. %-52s %s\n", ok ? "PASS" : "FAIL", id, label.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

template <class Fn>
void criterion(int id, const std::string& label, Fn&& fn) {
  try {
    std::string detail;
    const bool ok = fn(detail);
    report(id, label, ok, detail);
  } catch (const std::exception& e) {
    report(id, label, false, std::string("exception: ") + e.what());
  }
}

double frel(const Complex& a, const Complex& b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

double frel(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

supervol::QuadratureSpec quad32() {
  supervol::QuadratureSpec q;
  q.nodes_per_axis = 32;
  return q;
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

//-----------------------------------------------------------------------------
// 1. CP^{1|1} has volume 2π at every radius (closed form and chart oracle).
//-----------------------------------------------------------------------------
bool crit_cp11(std::string& detail) {
  bool ok = true;
  double max_closed = 0.0, max_chart = 0.0, max_elapsed = 0.0;
  for (const double R : {0.5, 1.0, 2.0}) {
    const auto closed = supervol::cp_volume(1, 1, R);
    const double ec = frel(closed.value.value, Complex{2.0 * kPi, 0.0});
    max_closed = std::max(max_closed, ec);
    ok = ok && ec <= 1e-14;

    const double t0 = now_s();
    const double oracle = supervol::cp_volume_chart(1, 1, R, quad32());
    const double dt = now_s() - t0;
    max_elapsed = std::max(max_elapsed, dt);
    const double eo = frel(oracle, 2.0 * kPi);
    max_chart = std::max(max_chart, eo);
    ok = ok && eo <= 1e-6 && dt <= 10.0;
  }
  detail = fmt("closed rel<=%.1e, chart rel<=%.1e", max_closed, max_chart) +
           fmt(", max %.2f s", max_elapsed);
  return ok;
}

//-----------------------------------------------------------------------------
// 2. Mixed Stiefel manifolds vanish identically; the U(1|1) invariant
//    density has modulus 2 and the group volume is exactly zero.
//-----------------------------------------------------------------------------
bool crit_stiefel_zero_u11(std::string& detail) {
  bool ok = true;
  int zeros = 0;
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= m; ++s) {
          const auto v = supervol::stiefel_volume(n, m, r, s, 1.0);
          ok = ok && v.value.is_exact_zero &&
               v.value.value == Complex{0.0, 0.0};
          ++zeros;
        }
  const auto u = supervol::u11_maurer_cartan();
  const bool mod_ok = std::abs(u.density_modulus - 2.0) <= 1e-10;
  const bool vol_ok = u.total_volume == 0.0;
  ok = ok && mod_ok && vol_ok;
  detail = fmt("%.0f structural zeros; |density| err %.1e",
               static_cast<double>(zeros),
               std::abs(u.density_modulus - 2.0)) +
           (vol_ok ? ", volume exactly 0" : ", volume NOT exactly 0");
  return ok;
}

//-----------------------------------------------------------------------------
// 3. Supersphere volumes: closed form vs δ-oracle and chart oracle.
//-----------------------------------------------------------------------------
bool crit_sphere_oracles(std::string& detail) {
  const double t0 = now_s();
  bool ok = true;
  double worst = 0.0;
  const auto q = quad32();
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 2; ++m) {
      const auto closed = supervol::sphere_volume(n, m, 1.0);
      const double delta = supervol::sphere_volume_delta(n, m, 1.0, q);
      const double chart = supervol::sphere_volume_chart(n, m, 1.0, q);
      if (closed.value.is_exact_zero) {
        ok = ok && std::abs(delta) <= 1e-8 && std::abs(chart) <= 1e-8;
        worst = std::max({worst, std::abs(delta), std::abs(chart)});
      } else {
        const double c = closed.value.value.real();
        const double ed = frel(delta, c), ec = frel(chart, c);
        ok = ok && ed <= 1e-6 && ec <= 1e-6;
        worst = std::max({worst, ed, ec});
      }
    }
  const double dt = now_s() - t0;
  ok = ok && dt <= 120.0;
  detail = fmt("worst dev %.1e, %.1f s", worst, dt);
  return ok;
}

//-----------------------------------------------------------------------------
// 4. Gaussian Berezin integrals: brute force vs g_D/√Ber on 50 random
//    admissible quadratic forms.
//-----------------------------------------------------------------------------
bool crit_gaussian(std::string& detail) {
  std::mt19937 rng(5151u);
  bool ok = true;
  double worst = 0.0;
  const auto q = quad32();
  for (int k = 0; k < 50; ++k) {
    const int p = 1 + k % 3;
    const int m_pairs = k % 3;
    const auto Q = supervol::random_admissible_gaussian_q(rng, p, m_pairs);
    const Complex brute = supervol::gaussian_super_integral(Q, q);
    const Complex target = supervol::gaussian_target(Q);
    const double e = frel(brute, target);
    worst = std::max(worst, e);
    ok = ok && e <= 1e-8;
  }
  detail = fmt("50 cases, worst rel %.1e", worst);
  return ok;
}

//-----------------------------------------------------------------------------
// 5. Hopf fibration in normalized form: 𝒱(S;R,2z+1) = 𝒱(CP;R,z)·𝒱(S;R,1)
//    at 100 random complex z.
//-----------------------------------------------------------------------------
bool crit_hopf_normalized(std::string& detail) {
  using supervol::normalized_volume;
  using supervol::NormalizedFamily;
  std::mt19937 rng(20260816u);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  bool ok = true;
  double worst = 0.0;
  int accepted = 0;
  while (accepted < 100) {
    const Complex z{u(rng), u(rng)};
    if (std::abs(z) > 5.0) continue;
    ++accepted;
    for (const double R : {0.5, 1.0, 2.0}) {
      const Complex lhs = normalized_volume(
          NormalizedFamily::sphere, 2.0 * z + Complex{1.0, 0.0}, std::nullopt,
          R);
      const Complex rhs =
          normalized_volume(NormalizedFamily::cp, z, std::nullopt, R) *
          normalized_volume(NormalizedFamily::sphere, {1.0, 0.0}, std::nullopt,
                            R);
      const double e = frel(lhs, rhs);
      worst = std::max(worst, e);
      ok = ok && e <= 1e-10;
    }
  }
  detail = fmt("100 points x 3 radii, worst rel %.1e", worst);
  return ok;
}

//-----------------------------------------------------------------------------
// 6. Scaling law vol(R) = R^index · vol(1) across all families.
//-----------------------------------------------------------------------------
bool crit_scaling(std::string& detail) {
  bool ok = true;
  double worst = 0.0;
  int cases = 0;
  auto check = [&](const supervol::VolumeValue& v1,
                   const supervol::VolumeValue& vR, double R) {
    ++cases;
    if (v1.value.is_exact_zero) {
      ok = ok && vR.value.is_exact_zero;
      return;
    }
    const double e =
        frel(vR.value.value, std::pow(R, v1.index) * v1.value.value);
    worst = std::max(worst, e);
    ok = ok && e <= 1e-12;
  };
  for (const double R : {0.5, 1.7}) {
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= 2; ++m) {
        check(supervol::sphere_volume(n, m, 1.0),
              supervol::sphere_volume(n, m, R), R);
        check(supervol::cp_volume(n, m, 1.0), supervol::cp_volume(n, m, R), R);
      }
    for (int n = 1; n <= 3; ++n)
      for (int m = 0; m <= 2; ++m)
        for (int r = 1; r <= n; ++r) {
          check(supervol::stiefel_volume(n, m, r, 0, 1.0),
                supervol::stiefel_volume(n, m, r, 0, R), R);
          check(supervol::grassmannian_volume(n, m, r, 0, 1.0),
                supervol::grassmannian_volume(n, m, r, 0, R), R);
        }
    for (int n = 1; n <= 3; ++n)
      check(supervol::unitary_group_volume(n, 0, 1.0),
            supervol::unitary_group_volume(n, 0, R), R);
  }
  detail = fmt("%.0f cases, worst rel %.1e", static_cast<double>(cases), worst);
  return cases >= 100 && ok;
}

//-----------------------------------------------------------------------------
// 7. Berezinian exactness: Ber(M)·Ber(M⁻¹) = 1 in exact Gaussian-rational
//    arithmetic on 200 random even supermatrices, with a double-precision
//    mirror of each case.
//-----------------------------------------------------------------------------
bool crit_berezinian_exact(std::string& detail) {
  using supervol::GaussianRational;
  using supervol::GrassmannElement;
  using RG = supervol::RationalGrassmann;
  using CG = GrassmannElement<Complex>;
  using BigRational = supervol::BigRational;

  std::mt19937 rng(7272u);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> pq(0, 3);
  std::uniform_int_distribution<int> gens(0, 3);

  bool ok = true;
  double worst_double = 0.0;
  int done = 0;
  while (done < 200) {
    const int p = pq(rng), q = pq(rng);
    if (p + q == 0) continue;
    const int ngen = 2 * gens(rng);  // 0, 2, 4, 6
    ++done;

    supervol::SuperMatrix<GaussianRational> mr(p, q, ngen);
    supervol::SuperMatrix<Complex> md(p, q, ngen);
    const int dim = p + q;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        const bool even_entry = (i < p) == (j < p);
        std::vector<std::pair<std::uint32_t, GaussianRational>> rterms;
        std::vector<std::pair<std::uint32_t, Complex>> dterms;
        for (std::uint32_t mask = 0; mask < (1u << ngen); ++mask) {
          const bool mask_even = (__builtin_popcount(mask) % 2) == 0;
          if (mask_even != even_entry) continue;
          const int a = num(rng), b = den(rng), c = num(rng), d = den(rng);
          if (a == 0 && c == 0) continue;
          rterms.emplace_back(
              mask, GaussianRational(BigRational(a, b), BigRational(c, d)));
          dterms.emplace_back(mask, Complex{static_cast<double>(a) / b,
                                            static_cast<double>(c) / d});
        }
        if (i == j) {  // body shift for invertibility (dominant diagonal)
          rterms.emplace_back(0u, GaussianRational(10));
          dterms.emplace_back(0u, Complex{10.0, 0.0});
        }
        mr.set(i, j, RG::from_terms(ngen, rterms));
        md.set(i, j, CG::from_terms(ngen, dterms));
      }

    const RG residual = supervol::berezinian(mr) *
                            supervol::berezinian(supervol::inverse(mr)) -
                        RG::constant(ngen, GaussianRational(1));
    ok = ok && residual.is_zero();

    const CG dres = supervol::berezinian(md) *
                        supervol::berezinian(supervol::inverse(md)) -
                    CG::constant(ngen, Complex{1.0, 0.0});
    const double e = dres.max_abs_coefficient();
    worst_double = std::max(worst_double, e);
    ok = ok && e <= 1e-13;
  }
  detail = fmt("200 cases exact; double mirror worst %.1e", worst_double);
  return ok;
}

//-----------------------------------------------------------------------------
// 8. Special functions: Γ recurrence/reflection, Barnes G recursion and
//    integer values, exact zeros of the reciprocals.
//-----------------------------------------------------------------------------
bool crit_special_functions(std::string& detail) {
  using supervol::barnes_g;
  using supervol::barnes_log_g;
  using supervol::gamma;
  using supervol::log_gamma;
  using supervol::reciprocal_gamma;

  std::mt19937 rng(31415u);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  auto near_int = [](const Complex& z) {
    return std::abs(z.imag()) < 0.15 &&
           std::abs(z.real() - std::round(z.real())) < 0.15;
  };
  bool ok = true;
  double worst = 0.0;

  int tested = 0;
  while (tested < 25) {
    const Complex z{u(rng), u(rng)};
    if (near_int(z) || near_int(z + 1.0)) continue;
    ++tested;
    const double er =
        frel(gamma(z + Complex{1.0, 0.0}).value, z * gamma(z).value);
    const double ef = frel(gamma(z).value * gamma(Complex{1.0, 0.0} - z).value,
                           kPi / std::sin(kPi * z));
    worst = std::max({worst, er, ef});
    ok = ok && er <= 1e-10 && ef <= 1e-10;
  }

  tested = 0;
  while (tested < 25) {
    const Complex z{u(rng), u(rng)};
    if (z.real() <= 0.2 && std::abs(z.imag()) < 0.2) continue;
    ++tested;
    const Complex lhs = barnes_log_g(z + Complex{1.0, 0.0});
    const Complex rhs = barnes_log_g(z) + log_gamma(z);
    const double eb = std::abs(std::exp(lhs - rhs) - 1.0);
    ok = ok && eb <= 1e-9;
    worst = std::max(worst, eb);
  }

  const double gvals[] = {1.0, 1.0, 1.0, 2.0, 12.0};
  for (int n = 1; n <= 5; ++n) {
    const double eg =
        frel(barnes_g({static_cast<double>(n), 0.0}).value, {gvals[n - 1], 0.0});
    ok = ok && eg <= 1e-12;
    worst = std::max(worst, eg);
  }

  ok = ok && reciprocal_gamma({0.0, 0.0}).is_exact_zero &&
       reciprocal_gamma({-4.0, 0.0}).is_exact_zero &&
       barnes_g({0.0, 0.0}).is_exact_zero &&
       barnes_g({-2.0, 0.0}).is_exact_zero;

  detail = fmt("worst dev %.1e", worst);
  return ok;
}

//-----------------------------------------------------------------------------
// 9. Classical regressions at m = 0.
//-----------------------------------------------------------------------------
bool crit_classical(std::string& detail) {
  bool ok = true;
  double worst = 0.0;
  const double spheres[] = {2.0, 2.0 * kPi, 4.0 * kPi, 2.0 * kPi * kPi,
                            8.0 * kPi * kPi / 3.0};
  for (int n = 0; n <= 4; ++n) {
    const double e =
        frel(supervol::sphere_volume(n, 0, 1.0).value.value, {spheres[n], 0.0});
    ok = ok && e <= 1e-13;
    worst = std::max(worst, e);
  }
  double fact = 1.0;
  for (int n = 1; n <= 5; ++n) {
    fact *= n;
    const double e = frel(supervol::cp_volume(n, 0, 1.0).value.value,
                          {std::pow(kPi, n) / fact, 0.0});
    ok = ok && e <= 1e-13;
    worst = std::max(worst, e);
  }
  const double eu = frel(supervol::unitary_group_volume(2, 0, 1.0).value.value,
                         {4.0 * std::pow(kPi, 3), 0.0});
  const double ep =
      frel(supervol::stiefel_volume_product(2, 0, 2, 1.0).value.value,
           {4.0 * std::pow(kPi, 3), 0.0});
  ok = ok && eu <= 1e-13 && ep <= 1e-13;
  worst = std::max({worst, eu, ep});
  detail = fmt("worst rel %.1e", worst);
  return ok;
}

}  // namespace

int main() {
  std::printf("supervol acceptance gate\n========================\n");
  criterion(1, "CP^{1|1} volume 2pi (closed form + chart oracle)", crit_cp11);
  criterion(2, "mixed Stiefel zeros and U(1|1) invariant density",
            crit_stiefel_zero_u11);
  criterion(3, "supersphere closed form vs delta + chart oracles",
            crit_sphere_oracles);
  criterion(4, "Gaussian Berezin integrals vs g_D/sqrt(Ber)", crit_gaussian);
  criterion(5, "Hopf factorization of normalized volumes", crit_hopf_normalized);
  criterion(6, "radius scaling law vol(R) = R^index vol(1)", crit_scaling);
  criterion(7, "Berezinian multiplicative exactness (rational)",
            crit_berezinian_exact);
  criterion(8, "Gamma and Barnes-G identities and exact zeros",
            crit_special_functions);
  criterion(9, "classical volumes at m = 0", crit_classical);
  if (g_failures == 0) {
    std::printf("------------------------\nall criteria passed\n");
    return 0;
  }
  std::printf("------------------------\n%d criteria FAILED\n", g_failures);
  return 1;
}
