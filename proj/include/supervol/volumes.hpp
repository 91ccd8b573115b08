/**
 * @file volumes.hpp
 * @brief Closed-form Riemannian volumes of the classical supermanifolds
 *        S^{n|2m}, CP^{n|m}, V_{r|s}(C^{n|m}), G_{r|s}(C^{n|m}), U(n|m),
 *        and their normalized analytic continuations 𝒱(·; R, z[, w]).
 *
 * Formulas (R > 0, all zeros detected exactly through 1/Γ and Barnes G):
 *
 *   vol S^{n|2m}_R   = 2 R^{n−2m} π^{(n+1)/2} 2ᵐ / Γ((n+1)/2 − m)
 *   vol CP^{n|m}_R   = R^{2(n−m)} πⁿ 2ᵐ / Γ(n − m + 1)
 *   vol V_{r|0}(C^{n|m})_R = g_D R^{χ(D)} (2√π)ʳ · G(n−m−r+1)/G(n−m+1),
 *                      D = dim V;  V_{r|s} with r,s > 0 vanishes identically;
 *                      V_{0|s} reduces by parity reversion to V_{s|0}(C^{m|n}).
 *   vol G_{r|s}(C^{n|m})_R = g_D R^{2w(z−w)} G(w+1) G(z−w+1)/G(z+1),
 *                      z = n−m, w = r−s (swap to w ≥ 0 by parity reversion);
 *                      conjectural.
 *   U(n|m) = V_{n|m}(C^{n|m}).
 *
 * Every volume satisfies  vol = g_D · 𝒱(family; R, index variables)  and the
 * scaling law  vol(R) = R^{ind} vol(1).
 */
#pragma once

#include <optional>

#include "supervol/special_functions.hpp"
#include "supervol/superdim.hpp"

namespace supervol {

//=============================================================================
// VolumeValue
//=============================================================================

/// A computed volume together with its structural metadata.
struct VolumeValue {
  ManifoldSpec spec;
  AnalyticValue value;        ///< volume; value.is_exact_zero marks structural 0
  SuperDimension dimension;   ///< real superdimension of the manifold
  int index = 0;              ///< χ(dimension) = even − odd
  double gaussian_factor = 1; ///< g_dimension
  bool conjectural = false;   ///< true for the Grassmannian family
};

//=============================================================================
// Closed-form volumes
//=============================================================================

VolumeValue sphere_volume(int n, int m, double radius);
VolumeValue cp_volume(int n, int m, double radius);
VolumeValue stiefel_volume(int n, int m, int r, int s, double radius);
/// Iterated-fibration product  Π_{j=1}^{r} vol S^{2(n−j)+1|2m}_R  (s = 0
/// branch); must agree with stiefel_volume(n, m, r, 0, R).
VolumeValue stiefel_volume_product(int n, int m, int r, double radius);
VolumeValue grassmannian_volume(int n, int m, int r, int s, double radius);
/// U(n|m) as the top Stiefel manifold V_{n|m}(C^{n|m}).
VolumeValue unitary_group_volume(int n, int m, double radius);

/// Dispatch on spec.family.
VolumeValue volume_of(const ManifoldSpec& spec);

//=============================================================================
// Normalized volumes 𝒱
//=============================================================================

enum class NormalizedFamily { sphere, cp, stiefel, grassmannian };

/// Analytic normalized volumes at arbitrary complex arguments:
///   𝒱(S;  R, z)    = Rᶻ · 2√π / Γ((z+1)/2)
///   𝒱(CP; R, z)    = R^{2z} / Γ(z+1)
///   𝒱(CV; R, z, w) = R^{w(2z−w)} (2√π)ʷ G(z−w+1)/G(z+1)
///   𝒱(CG; R, z, w) = R^{2w(z−w)} G(w+1) G(z−w+1)/G(z+1)
///
/// w is required for CV/CG.  For exact non-negative-integer w the Barnes-G
/// ratios are evaluated as telescoped products of 1/Γ, which are entire in z
/// (this covers every closed-form manifold volume).  For other w the ratio is
/// evaluated through exp(log G − log G); at an exact non-positive integer
/// argument of a numerator G the result is 0, and a non-positive integer
/// z + 1 (denominator zero with nonzero numerator) yields complex infinity.
Complex normalized_volume(NormalizedFamily family, Complex z,
                          std::optional<Complex> w, double radius);

}  // namespace supervol
