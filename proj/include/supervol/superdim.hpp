/**
 * @file superdim.hpp
 * @brief Superdimension ring Ẑ = Z[Π]/(Π² − 1), manifold families, dimension
 *        and index bookkeeping, and the Gaussian factor g_D.
 *
 * A superdimension n|m has an even part n and an odd part m.  Sums are
 * componentwise; products follow Π² = 1, so odd·odd contributes to even:
 *
 *   (n|m)·(n'|m') = (nn' + mm' | nm' + mn').
 *
 * The index is the ring homomorphism χ: Ẑ → Z, n|m ↦ n − m.  The Gaussian
 * factor of a dimension is g_{n|m} = (√π)ⁿ(√2)ᵐ — the Gaussian Berezin
 * integral over R^{n|m} with the standard quadratic form.
 */
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "supervol/special_functions.hpp"

namespace supervol {

//=============================================================================
// SuperDimension
//=============================================================================

struct SuperDimension {
  int even = 0;  ///< n ≥ 0
  int odd = 0;   ///< m ≥ 0

  constexpr SuperDimension() = default;
  constexpr SuperDimension(int n, int m) : even(n), odd(m) {}

  constexpr int index() const { return even - odd; }

  friend constexpr SuperDimension operator+(SuperDimension a, SuperDimension b) {
    return {a.even + b.even, a.odd + b.odd};
  }
  friend constexpr SuperDimension operator-(SuperDimension a, SuperDimension b) {
    return {a.even - b.even, a.odd - b.odd};
  }
  /// Ring product with Π² = 1 (odd·odd lands in even).
  friend constexpr SuperDimension operator*(SuperDimension a, SuperDimension b) {
    return {a.even * b.even + a.odd * b.odd, a.even * b.odd + a.odd * b.even};
  }
  friend constexpr SuperDimension operator*(int k, SuperDimension a) {
    return {k * a.even, k * a.odd};
  }
  friend constexpr bool operator==(SuperDimension a, SuperDimension b) {
    return a.even == b.even && a.odd == b.odd;
  }
};

/// g_{n|m} = (√π)ⁿ (√2)ᵐ.  Multiplicative over dimension sums.
inline double gaussian_factor(SuperDimension d) {
  return std::pow(kPi, 0.5 * d.even) * std::pow(2.0, 0.5 * d.odd);
}

//=============================================================================
// Manifold families
//=============================================================================

enum class Family { sphere, cp, stiefel, grassmannian, unitary_group };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::sphere: return "sphere";
    case Family::cp: return "cp";
    case Family::stiefel: return "stiefel";
    case Family::grassmannian: return "grassmannian";
    case Family::unitary_group: return "unitary_group";
  }
  throw std::logic_error("family_name: unknown family");
}

inline Family family_from_name(const std::string& s) {
  if (s == "sphere") return Family::sphere;
  if (s == "cp") return Family::cp;
  if (s == "stiefel") return Family::stiefel;
  if (s == "grassmannian") return Family::grassmannian;
  if (s == "unitary_group" || s == "unitary") return Family::unitary_group;
  throw std::invalid_argument("unknown family: " + s);
}

/// Which manifold and at which parameters.  The sphere family means S^{n|2m}
/// (n even dims, 2m odd dims); cp means CP^{n|m}; stiefel means
/// V_{r|s}(C^{n|m}); grassmannian means G_{r|s}(C^{n|m});
/// unitary_group means U(n|m) = V_{n|m}(C^{n|m}).
struct ManifoldSpec {
  Family family = Family::sphere;
  int n = 0;
  int m = 0;
  int r = 0;  ///< stiefel/grassmannian only
  int s = 0;  ///< stiefel/grassmannian only
  double radius = 1.0;

  void validate() const {
    if (n < 0 || m < 0) throw std::invalid_argument("manifold: n, m must be >= 0");
    if (!(radius > 0.0)) throw std::invalid_argument("manifold: radius must be > 0");
    if (family == Family::stiefel || family == Family::grassmannian) {
      if (r < 0 || r > n || s < 0 || s > m)
        throw std::invalid_argument("manifold: need 0 <= r <= n and 0 <= s <= m");
    }
  }
};

/// Real superdimension of the manifold, via ring arithmetic in Ẑ.
inline SuperDimension dimension_of(const ManifoldSpec& spec) {
  spec.validate();
  const SuperDimension nm{spec.n, spec.m};
  const SuperDimension rs{spec.r, spec.s};
  switch (spec.family) {
    case Family::sphere:  // S^{n|2m} ⊂ R^{n+1|2m}
      return {spec.n, 2 * spec.m};
    case Family::cp:  // complex dimension n|m, doubled
      return {2 * spec.n, 2 * spec.m};
    case Family::stiefel:  // (r|s)·(2(n|m) − (r|s))
      return rs * (2 * nm - rs);
    case Family::grassmannian:  // 2(r|s)·((n|m) − (r|s))
      return 2 * (rs * (nm - rs));
    case Family::unitary_group:  // (n|m)²
      return nm * nm;
  }
  throw std::logic_error("dimension_of: unknown family");
}

/// ind M = χ(dim M) = even − odd.
inline int index_of(const ManifoldSpec& spec) { return dimension_of(spec).index(); }

}  // namespace supervol
