/**
 * @file quadrature.hpp
 * @brief Gauss–Legendre quadrature (1D, composite panels, tensor product),
 *        compensated summation, a simple adaptive 1D driver, and a small
 *        symmetric eigensolver used to size Gaussian integration boxes.
 *
 * All accumulation uses Neumaier-compensated sums.  Tensor-product
 * integration is thread-parallel (worker count from SUPERVOL_THREADS, default
 * hardware concurrency) with a deterministic, ordered combine so results are
 * bit-stable across runs regardless of thread count.
 */
#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace supervol {

using Complex = std::complex<double>;

//=============================================================================
// Specs
//=============================================================================

enum class QuadScheme { tensor, adaptive, radial };

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

struct QuadratureSpec {
  QuadScheme scheme = QuadScheme::tensor;
  int nodes_per_axis = 32;
  std::vector<Interval> domain;
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;

  void validate() const {
    if (nodes_per_axis < 2)
      throw std::invalid_argument("quadrature: nodes_per_axis must be >= 2");
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
      throw std::invalid_argument("quadrature: tolerances must be > 0");
    for (const Interval& iv : domain)
      if (!(iv.lo < iv.hi))
        throw std::invalid_argument("quadrature: interval must have lo < hi");
  }
};

//=============================================================================
// Compensated summation
//=============================================================================

/// Neumaier-compensated accumulation of doubles.
class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Componentwise compensated accumulation of complex values.
class ComplexNeumaierSum {
 public:
  void add(Complex z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  Complex value() const { return {re_.value(), im_.value()}; }

 private:
  NeumaierSum re_, im_;
};

namespace detail {
template <class T>
struct Accumulator;
template <>
struct Accumulator<double> : NeumaierSum {};
template <>
struct Accumulator<Complex> : ComplexNeumaierSum {};
}  // namespace detail

//=============================================================================
// Gauss–Legendre rules
//=============================================================================

struct GaussLegendreRule {
  std::vector<double> nodes;    ///< on [−1, 1], ascending
  std::vector<double> weights;  ///< positive, sum to 2
};

/// Cached n-point Gauss–Legendre rule (thread-safe; reference stays valid).
const GaussLegendreRule& gauss_legendre(int n);

/// ∫_a^b f, n-point Gauss–Legendre.  T is double or Complex.
template <class F>
auto integrate_1d(F&& f, double a, double b, int nodes)
    -> decltype(f(0.0)) {
  using T = decltype(f(0.0));
  const GaussLegendreRule& rule = gauss_legendre(nodes);
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  detail::Accumulator<T> acc;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k)
    acc.add(f(mid + half * rule.nodes[k]) * (half * rule.weights[k]));
  return acc.value();
}

/// Composite Gauss–Legendre over the panels defined by ascending breakpoints
/// b₀ < b₁ < … < b_K (K panels, `nodes` points each).  Splitting panels at
/// the breakpoints of a piecewise-smooth integrand restores spectral
/// convergence.
template <class F>
auto integrate_panels(F&& f, const std::vector<double>& breakpoints, int nodes)
    -> decltype(f(0.0)) {
  using T = decltype(f(0.0));
  if (breakpoints.size() < 2)
    throw std::invalid_argument("integrate_panels: need at least one panel");
  detail::Accumulator<T> acc;
  for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k) {
    if (!(breakpoints[k] < breakpoints[k + 1]))
      throw std::invalid_argument("integrate_panels: breakpoints must ascend");
    acc.add(integrate_1d(f, breakpoints[k], breakpoints[k + 1], nodes));
  }
  return acc.value();
}

//=============================================================================
// Tensor-product and adaptive integration
//=============================================================================

/// ∫ over the box Π[loᵢ, hiᵢ] of f(x), tensor Gauss–Legendre with
/// nodes_per_axis points per axis.  Thread-parallel, deterministic combine.
Complex integrate_tensor(const std::function<Complex(const std::vector<double>&)>& f,
                         const std::vector<Interval>& box, int nodes_per_axis);

/// Simple adaptive 1D integration by panel bisection: a panel is accepted
/// when its one-panel and two-panel estimates agree to the given tolerances.
Complex integrate_adaptive_1d(const std::function<Complex(double)>& f, double a,
                              double b, double abs_tol, double rel_tol,
                              int nodes = 16);

/// Worker count: SUPERVOL_THREADS if set (clamped to ≥ 1), else hardware
/// concurrency.
int thread_count_from_env();

//=============================================================================
// Small dense symmetric eigensolver (cyclic Jacobi)
//=============================================================================

/// Eigenvalues of a symmetric n×n matrix (row-major), ascending.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n);

}  // namespace supervol
