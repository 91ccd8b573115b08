/**
 * @file volumes.cpp
 * @brief Closed-form and normalized supermanifold volumes.
 */
#include "supervol/volumes.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace supervol {

namespace {

/// Principal-branch Rᶻ for real R > 0.
Complex real_pow(double base, Complex z) { return std::exp(z * std::log(base)); }

/// Telescoped Barnes ratio G(z−w+1)/G(z+1) = Π_{j=0}^{w−1} 1/Γ(z−j) for
/// integer w ≥ 0 — entire in z, with exact zeros from Γ-poles.
AnalyticValue barnes_ratio_telescoped(Complex z, int w) {
  AnalyticValue prod = AnalyticValue::of(Complex{1.0, 0.0});
  for (int j = 0; j < w; ++j)
    prod = prod * reciprocal_gamma(z - static_cast<double>(j));
  return prod;
}

bool exact_nonneg_integer(Complex w, int& out) {
  if (w.imag() != 0.0) return false;
  const double r = w.real();
  if (r < 0.0 || r > 1.0e6 || r != std::round(r)) return false;
  out = static_cast<int>(r);
  return true;
}

bool exact_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

VolumeValue make_value(ManifoldSpec spec, AnalyticValue value, bool conjectural) {
  VolumeValue v;
  v.spec = spec;
  v.value = value;
  v.dimension = dimension_of(spec);
  v.index = v.dimension.index();
  v.gaussian_factor = supervol::gaussian_factor(v.dimension);
  v.conjectural = conjectural;
  return v;
}

}  // namespace

//=============================================================================
// Closed-form volumes
//=============================================================================

VolumeValue sphere_volume(int n, int m, double radius) {
  const ManifoldSpec spec{Family::sphere, n, m, 0, 0, radius};
  spec.validate();
  const int idx = n - 2 * m;
  const double prefactor = 2.0 * std::pow(radius, idx) *
                           std::pow(kPi, 0.5 * (n + 1)) * std::pow(2.0, m);
  const AnalyticValue value =
      Complex{prefactor, 0.0} * reciprocal_gamma(Complex{0.5 * (n + 1) - m, 0.0});
  return make_value(spec, value, false);
}

VolumeValue cp_volume(int n, int m, double radius) {
  const ManifoldSpec spec{Family::cp, n, m, 0, 0, radius};
  spec.validate();
  const double prefactor = std::pow(radius, 2 * (n - m)) * std::pow(kPi, n) *
                           std::pow(2.0, m);
  const AnalyticValue value =
      Complex{prefactor, 0.0} * reciprocal_gamma(Complex{double(n - m + 1), 0.0});
  return make_value(spec, value, false);
}

VolumeValue stiefel_volume(int n, int m, int r, int s, double radius) {
  const ManifoldSpec spec{Family::stiefel, n, m, r, s, radius};
  spec.validate();
  if (r > 0 && s > 0)
    return make_value(spec, AnalyticValue::exact_zero(), false);
  if (s == 0) {
    const int idx = index_of(spec);  // = r(2(n−m) − r)
    const double g = gaussian_factor(dimension_of(spec));
    AnalyticValue value = AnalyticValue::of(
        Complex{g * std::pow(radius, idx) * std::pow(2.0 * std::sqrt(kPi), r), 0.0});
    value = value * barnes_ratio_telescoped(Complex{double(n - m), 0.0}, r);
    return make_value(spec, value, false);
  }
  // r = 0, s > 0: parity reversion V_{0|s}(C^{n|m}) ≅ V_{s|0}(C^{m|n});
  // the superdimension (and hence g_D, index) is unchanged by the reversion.
  VolumeValue reduced = stiefel_volume(m, n, s, 0, radius);
  VolumeValue v = make_value(spec, reduced.value, false);
  if (!(v.dimension == reduced.dimension))
    throw std::logic_error("stiefel_volume: parity reversion changed dimension");
  return v;
}

VolumeValue stiefel_volume_product(int n, int m, int r, double radius) {
  const ManifoldSpec spec{Family::stiefel, n, m, r, 0, radius};
  spec.validate();
  AnalyticValue value = AnalyticValue::of(Complex{1.0, 0.0});
  for (int j = 1; j <= r; ++j)
    value = value * sphere_volume(2 * (n - j) + 1, m, radius).value;
  return make_value(spec, value, false);
}

VolumeValue grassmannian_volume(int n, int m, int r, int s, double radius) {
  const ManifoldSpec spec{Family::grassmannian, n, m, r, s, radius};
  spec.validate();
  if (r - s < 0) {
    // Parity reversion G_{r|s}(C^{n|m}) ≅ G_{s|r}(C^{m|n}); dimension invariant.
    VolumeValue reduced = grassmannian_volume(m, n, s, r, radius);
    VolumeValue v = make_value(spec, reduced.value, true);
    if (!(v.dimension == reduced.dimension))
      throw std::logic_error("grassmannian_volume: reversion changed dimension");
    return v;
  }
  const int w = r - s;
  const int z = n - m;
  const double g = gaussian_factor(dimension_of(spec));
  AnalyticValue value =
      AnalyticValue::of(Complex{g * std::pow(radius, 2 * w * (z - w)), 0.0});
  value = value * barnes_g(Complex{double(w + 1), 0.0});
  value = value * barnes_ratio_telescoped(Complex{double(z), 0.0}, w);
  return make_value(spec, value, true);
}

VolumeValue unitary_group_volume(int n, int m, double radius) {
  const ManifoldSpec spec{Family::unitary_group, n, m, n, m, radius};
  spec.validate();
  const VolumeValue top = stiefel_volume(n, m, n, m, radius);
  VolumeValue v = make_value(spec, top.value, false);
  if (!(v.dimension == top.dimension))
    throw std::logic_error("unitary_group_volume: dimension mismatch");
  return v;
}

VolumeValue volume_of(const ManifoldSpec& spec) {
  switch (spec.family) {
    case Family::sphere: return sphere_volume(spec.n, spec.m, spec.radius);
    case Family::cp: return cp_volume(spec.n, spec.m, spec.radius);
    case Family::stiefel:
      return stiefel_volume(spec.n, spec.m, spec.r, spec.s, spec.radius);
    case Family::grassmannian:
      return grassmannian_volume(spec.n, spec.m, spec.r, spec.s, spec.radius);
    case Family::unitary_group:
      return unitary_group_volume(spec.n, spec.m, spec.radius);
  }
  throw std::logic_error("volume_of: unknown family");
}

//=============================================================================
// Normalized volumes
//=============================================================================

namespace {

/// Barnes ratio G(z−w+1)/G(z+1) for arbitrary complex w (non-integer path):
/// best-effort meromorphic evaluation through exp(log G − log G).
Complex barnes_ratio_general(Complex z, Complex w) {
  if (exact_nonpositive_integer(z - w + 1.0)) return Complex{0.0, 0.0};
  if (exact_nonpositive_integer(z + 1.0))
    return Complex{std::numeric_limits<double>::infinity(), 0.0};
  return std::exp(barnes_log_g(z - w + 1.0) - barnes_log_g(z + 1.0));
}

}  // namespace

Complex normalized_volume(NormalizedFamily family, Complex z,
                          std::optional<Complex> w, double radius) {
  if (!(radius > 0.0))
    throw std::invalid_argument("normalized_volume: radius must be > 0");
  switch (family) {
    case NormalizedFamily::sphere:
      return real_pow(radius, z) * 2.0 * std::sqrt(kPi) *
             reciprocal_gamma(0.5 * (z + 1.0)).value;
    case NormalizedFamily::cp:
      return real_pow(radius, 2.0 * z) * reciprocal_gamma(z + 1.0).value;
    case NormalizedFamily::stiefel: {
      if (!w) throw std::invalid_argument("normalized_volume: stiefel needs w");
      const Complex ww = *w;
      const Complex scale = real_pow(radius, ww * (2.0 * z - ww)) *
                            std::exp(ww * std::log(2.0 * std::sqrt(kPi)));
      int wi = 0;
      if (exact_nonneg_integer(ww, wi))
        return scale * barnes_ratio_telescoped(z, wi).value;
      return scale * barnes_ratio_general(z, ww);
    }
    case NormalizedFamily::grassmannian: {
      if (!w) throw std::invalid_argument("normalized_volume: grassmannian needs w");
      const Complex ww = *w;
      const Complex scale = real_pow(radius, 2.0 * ww * (z - ww));
      int wi = 0;
      if (exact_nonneg_integer(ww, wi))
        return scale * barnes_g(ww + 1.0).value *
               barnes_ratio_telescoped(z, wi).value;
      if (exact_nonpositive_integer(ww + 1.0)) return Complex{0.0, 0.0};
      return scale * std::exp(barnes_log_g(ww + 1.0)) * barnes_ratio_general(z, ww);
    }
  }
  throw std::logic_error("normalized_volume: unknown family");
}

}  // namespace supervol
