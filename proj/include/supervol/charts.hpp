/**
 * @file charts.hpp
 * @brief Supermanifold charts: embeddings into flat superspace, exact
 *        even-coordinate derivatives by nilpotent augmentation, induced
 *        (pullback) metrics, Taylor lifts of elementary functions, and the
 *        smooth partition-of-unity machinery for the sphere atlas.
 *
 * Ambient conventions (R^{p|2m}):
 *  - even coordinates x¹ … x^p with metric δ_ij;
 *  - odd coordinates interleaved (ξ¹, η¹, ξ², η², …), with
 *    ds² = Σ (dxⁱ)² + 2 Σ dξ^μ dη^μ,  i.e. the constant odd-odd metric block
 *    [[0, −1], [1, 0]] per (ξ, η) pair;
 *  - chart generators: the chart's odd coordinates are generators
 *    0 … odd_dim−1 of the algebra, and two extra generators (odd_dim,
 *    odd_dim+1) form the nilpotent augmentation ε = θ_aug1 θ_aug2 used as an
 *    exact first-order infinitesimal for even-coordinate derivatives:
 *    Φ(x + ε) = Φ(x) + ε ∂Φ/∂x exactly, because ε² = 0.
 *
 * The induced metric of an embedding Φ follows
 *    g_{a'b'} = Σ_{A,B} (−1)^{Ã(B̃ + b̃')} (∂_{a'}Φ^A)(∂_{b'}Φ^B) G_{AB}
 * with left derivatives throughout; it satisfies the super-symmetry
 * g_{a'b'} = (−1)^{ã'b̃'} g_{b'a'}, which pullback_metric asserts.
 */
#pragma once

#include <functional>
#include <vector>

#include "supervol/grassmann.hpp"
#include "supervol/supermatrix.hpp"

namespace supervol {

using GE = GrassmannElement<Complex>;
using GEVec = std::vector<GE>;

//=============================================================================
// Taylor lifts of elementary functions
//=============================================================================

/// f(body + soul) = Σ_j f⁽ʲ⁾(body) soulʲ/j!  — exact by nilpotency.  These
/// helpers build the derivative lists for common f and call taylor_lift.

GE lift_sqrt(const GE& a);             ///< principal √ at a complex body ≠ 0
GE lift_pow(const GE& a, double p);    ///< body^p (principal); exact for integer p ≥ 0
GE lift_exp(const GE& a);
GE lift_sin(const GE& a);
GE lift_cos(const GE& a);

/// Coefficient of ε = θ_{aug1}θ_{aug2} (drop every term not containing the
/// augmentation pair; strip the pair from the rest).  Because the
/// augmentation generators carry the two highest indices, the strip is
/// sign-free.
GE extract_augmentation(const GE& a, int aug1, int aug2);

//=============================================================================
// Smoothstep partition weights
//=============================================================================

/// The C^k polynomial step S_k: [0,1] → [0,1] of degree 2k+1 with
/// S_k(0) = 0, S_k(1) = 1 and k vanishing derivatives at both ends; constant
/// outside [0,1].  Exact polynomial derivatives make it liftable to
/// Grassmann arguments (needed so the partition of unity holds exactly as a
/// Grassmann identity on the supermanifold, not just on the body).
class SmoothStep {
 public:
  explicit SmoothStep(int k);

  double value(double u) const;
  /// j-th derivative of the clamped function (0 outside (0, 1)).
  double derivative(double u, int j) const;
  /// Taylor lift at body(u); requires body(u) not exactly at 0 or 1.
  GE lift(const GE& u) const;

 private:
  int k_;
  std::vector<double> coeffs_;  // ascending powers, degree 2k+1
};

//=============================================================================
// SuperChart
//=============================================================================

/// A chart with even_dim numeric coordinates and odd_dim odd coordinates,
/// embedded in R^{ambient_even | ambient_odd}.  The embedding receives the
/// even coordinates as Grassmann elements (body = value, possibly + ε) and
/// the odd coordinates as generators, and returns the ambient coordinates
/// (even first, then odd, interleaved (ξ¹, η¹, …)).
struct SuperChart {
  int even_dim = 0;
  int odd_dim = 0;
  int ambient_even = 0;
  int ambient_odd = 0;
  int num_generators = 0;  ///< odd_dim + 2 (augmentation pair on top)

  std::function<GEVec(const GEVec& even_coords, const GEVec& odd_coords)> embed;

  /// Residual of the defining constraint (e.g. ⟨x,x⟩ − R²); must vanish as an
  /// exact Grassmann identity.  Optional.
  std::function<GE(const GEVec& ambient)> constraint_residual;
};

/// Induced metric at the given even-coordinate point: exact augmentation
/// derivatives along even directions, left odd_derivative along odd ones,
/// contracted with the flat ambient metric.  Asserts the constraint residual
/// (when present) and super-symmetry of the result.
SuperMatrix<Complex> pullback_metric(const SuperChart& chart,
                                     const std::vector<double>& point);

/// Debug variant: even-coordinate derivatives by central finite differences
/// (truncation error O(step²)); odd derivatives exact as above.
SuperMatrix<Complex> pullback_metric_fd(const SuperChart& chart,
                                        const std::vector<double>& point,
                                        double step);

//=============================================================================
// Chart factories
//=============================================================================

/// Graph chart of the sphere cap around x^{n+1} = sign·R:
/// x^{n+1} = sign·√(R² − Σ(xⁱ)² − 2Σξ^μη^μ), even coords x¹…xⁿ in the ball.
SuperChart sphere_cap_chart(int n, int m, double radius, int sign);

/// Angular band chart (n ≥ 1): even coords (t, φ₁…φ_{n−1}),
/// ρ = √(R² − 2Σξη),  x^{n+1} = ρ cos t,  xⁱ = ρ sin t ωⁱ(φ) with ω the
/// hyperspherical unit vector of S^{n−1}.  At the reference angles
/// φ_j = π/2 the classical S^{n−1} Jacobian equals 1 and the metric is
/// block-diagonal, so the volume density factorizes as F(t)·J_{S^{n−1}}(φ).
SuperChart sphere_band_chart(int n, int m, double radius);

/// Hopf chart on S^{3|2} ⊂ R^{4|2} ≅ C^{2|1}: even coords (u, v, α), odd
/// (θ, θ̄);  z^a = R e^{iα} N^{−1/2} w^a with w = (1, u+iv),
/// ζ = R e^{iα} N^{−1/2} θ,  N = 1 + w w̄ + iθθ̄.  The real ambient odd pair
/// is (ξ, η) = ((ζ+ζ̄)/2, (ζ−ζ̄)/(2i)), and ⟨x, x⟩ = Σ z z̄ + iζζ̄ = R²
/// exactly.
SuperChart hopf_chart_s32(double radius);

}  // namespace supervol
