#pragma once
/**
 * @file oracles.hpp
 * @brief Independent volume oracles: δ-function reduction, chart quadrature,
 *        Gaussian superintegrals, U(1|1) Maurer–Cartan, Hopf factorization.
 *
 * Every closed-form volume in volumes.hpp is cross-checked by at least one
 * routine here that never touches the Γ/Barnes-G formulas:
 *
 *  - sphere_volume_delta:  vol(S^{n|2m}_R) = ∫ d^{n+1}x D^{2m}θ 2R δ(Σx² + 2Σξη − R²),
 *    evaluated by expanding δ about its body and Berezin-integrating the
 *    nilpotent shift exactly (analytic in r; the quadrature spec is accepted
 *    for interface uniformity but not consulted).
 *
 *  - sphere_volume_chart:  a genuine atlas computation. Two graph-chart caps
 *    and a hyperspherical band are glued with a smooth partition of unity in
 *    the height coordinate; each chart integrates Berezin(χ·√Ber g) with
 *    Gauss–Legendre panels aligned to the partition breakpoints.
 *
 *  - cp_volume_chart:  Fubini–Study reduction of CP^{n|m} to a single radial
 *    integral of a Berezin integral of N(t)^{m−n−1}, N = 1 + |w|² + iΣθθ̄.
 *
 *  - gaussian_super_integral:  brute-force ∫ exp(−xᵀAx − F_odd) d^px D^qθ by
 *    tensor quadrature × nilpotent exponential, to be compared against
 *    g_D / √Ber(Q).
 *
 *  - u11_maurer_cartan:  left-invariant density of U(1|1) from the
 *    Maurer–Cartan form, expanded in a fixed Lie-superalgebra basis.
 *
 *  - hopf_factorization_check / cavalieri_check:  the super Hopf fibration
 *    S^{3|2} → CP^{1|1}, at the level of volume formulas and pointwise at the
 *    level of Berezinians.
 */

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "supervol/charts.hpp"
#include "supervol/quadrature.hpp"
#include "supervol/supermatrix.hpp"

namespace supervol {

//=============================================================================
// Reports
//=============================================================================

/// Outcome of one closed-form-vs-oracle comparison.
struct VerificationReport {
  std::string case_name;
  Complex closed_form{0.0, 0.0};
  Complex oracle{0.0, 0.0};
  double abs_err = 0.0;
  double rel_err = 0.0;  ///< abs_err / max(1, |closed_form|, |oracle|)
  int nodes = 0;
  double elapsed_ms = 0.0;
  bool pass = false;
};

//=============================================================================
// Classical helper
//=============================================================================

/// vol of the classical unit sphere S^k (k ≥ 0); vol(S⁰) = 2.
double classical_sphere_volume(int k);

//=============================================================================
// Sphere oracles
//=============================================================================

/// δ-function oracle for vol(S^{n|2m}_R).  Pre: 0 ≤ n ≤ 4, 0 ≤ m ≤ 2.
/// `quad` is accepted for signature uniformity; the radial reduction is
/// analytic (a finite sum of δ-derivative moments), so no nodes are consumed.
double sphere_volume_delta(int n, int m, double radius,
                           const QuadratureSpec& quad);

/// Placement of the partition-of-unity margins, as fractions of the radius:
/// cap weights transition over height h ∈ [h1_frac·R, h2_frac·R].
struct SphereChartOptions {
  double h1_frac = 0.35;
  double h2_frac = 0.65;
};

/// Atlas/quadrature oracle for vol(S^{n|2m}_R).  Pre: 0 ≤ n ≤ 3, 0 ≤ m ≤ 2.
double sphere_volume_chart(int n, int m, double radius,
                           const QuadratureSpec& quad,
                           const SphereChartOptions& opts = {});

//=============================================================================
// Complex projective oracle
//=============================================================================

/// Fubini–Study oracle for vol(CP^{n|m}_R).  Pre: 0 ≤ n ≤ 2, 0 ≤ m ≤ 2.
double cp_volume_chart(int n, int m, double radius, const QuadratureSpec& quad);

//=============================================================================
// Gaussian superintegrals
//=============================================================================

/// Brute-force Gaussian superintegral
///   ∫_{R^p} d^px ∫ D^qθ exp(−Σ_{ij} x^i x^j Q_{ij} − Σ_{ab} θ^a θ^b Q_{(p+b)(p+a)})
/// for a purely numeric (soul-free) block-diagonal even supermatrix Q whose
/// even-even block is real symmetric positive definite.  The even factor is a
/// tensor Gauss–Legendre integral over a box sized from the spectrum of the
/// even block; `quad.nodes_per_axis` is a lower bound on the per-axis rule.
Complex gaussian_super_integral(const SuperMatrix<Complex>& Q,
                                const QuadratureSpec& quad);

/// Closed-form target g_D / √Ber(Q) for the same integral
/// (D = R^{p|q}, g_D = π^{p/2} 2^{q/2}; principal square root).
Complex gaussian_target(const SuperMatrix<Complex>& Q);

/// Pfaffian of a small antisymmetric matrix (row-major, q ∈ {0, 2, 4}).
/// Convention: Pf[[0, c],[−c, 0]] = c; the brute-force odd factor of the
/// Gaussian above equals (−2)^{q/2} Pf(D) for odd-odd block D.
Complex pfaffian_small(const std::vector<Complex>& a, int q);

/// Sample an admissible Q on R^{p|2·m_pairs}: even block BᵀB + I (entries of
/// B uniform in [−1, 1]), odd block RᵀJR with det R > 0 and J the standard
/// interleaved symplectic form.  Shared by unit and acceptance tests.
SuperMatrix<Complex> random_admissible_gaussian_q(std::mt19937& rng, int p,
                                                  int m_pairs);

//=============================================================================
// U(1|1) Maurer–Cartan
//=============================================================================

struct U11Result {
  GE density;              ///< Ber of the Maurer–Cartan coefficient matrix
  double density_modulus;  ///< |body(density)|; the invariant value is 2
  Complex berezinian_body;
  double total_volume;     ///< ∫ dα dβ Dθ Dθ̄ density — exactly 0
};

/// Computes A_μ = (∂_μ g) g⁻¹ for the U(1|1) parametrization
///   g = [[e^{iα}(1 + (i/2)θθ̄), θ], [iθ̄ e^{iβ}, e^{i(β−α)}(1 − (i/2)θθ̄)]],
/// expands each A_μ in the basis {e₁, e₂ | ε₁, ε₂} of u(1|1), and returns the
/// Berezinian of the coefficient supermatrix.  Throws std::runtime_error if
/// the basis expansion fails to reconstruct A_μ to 1e−10.
U11Result u11_maurer_cartan();

//=============================================================================
// Hopf fibration S^{2n+1|2m} → CP^{n|m}
//=============================================================================

/// True iff (a) vol(S^{2n+1|2m}_R) = vol(CP^{n|m}_R) · 2πR to 1e−12 (relative,
/// floored at 1) and (b) the normalized-volume identity
/// 𝒱(S; R, 2z+1) = 𝒱(CP; R, z) · 𝒱(S; R, 1) holds to 1e−10 at 100 seeded
/// pseudo-random complex z with |z| ≤ 5.
bool hopf_factorization_check(int n, int m, double radius);

/// Pointwise Cavalieri check on S^{3|2}: the Berezinian of the pulled-back
/// round metric in Hopf coordinates (u, v, α | θ, θ̄) equals
/// φ₀ · (−4R²) · N(u, v, θ, θ̄)^{−2} coefficient-by-coefficient, where φ₀ is a
/// unimodular constant fixed by convention (recorded in the report).
struct CavalieriReport {
  double max_coeff_deviation = 0.0;
  Complex unit_phase{1.0, 0.0};
  bool pass = false;
};

CavalieriReport cavalieri_check(double radius, int samples);

//=============================================================================
// Verification suite driver (shared by CLI and acceptance tests)
//=============================================================================

/// Runs the named verification case ("sphere", "cp", "u11", "hopf",
/// "gaussian", "cavalieri", or "all") and returns one report per comparison.
/// Throws std::invalid_argument for unknown case names.
std::vector<VerificationReport> run_verification_suite(
    const std::string& case_name, const QuadratureSpec& quad);

}  // namespace supervol
