/**
 * @file supermatrix.hpp
 * @brief Even block supermatrices over a Grassmann algebra: product, inverse,
 *        supertranspose, Berezinian (superdeterminant), and the √Ber volume
 *        density used by the metric pipeline.
 *
 * A (p|q) supermatrix J is a (p+q)×(p+q) matrix of Grassmann elements with the
 * block structure
 *
 *        ⎡ J₀₀  J₀₁ ⎤    J₀₀: p×p,  J₁₁: q×q   (entries even),
 *   J =  ⎢          ⎥
 *        ⎣ J₁₀  J₁₁ ⎦    J₀₁: p×q,  J₁₀: q×p   (entries odd).
 *
 * Evenness of the blocks is enforced at mutation time.  The Berezinian
 *
 *   Ber J = det(J₀₀ − J₀₁ J₁₁⁻¹ J₁₀) / det J₁₁
 *         = det J₀₀ / det(J₁₁ − J₁₀ J₀₀⁻¹ J₀₁)
 *
 * is multiplicative on invertible even supermatrices and invariant under the
 * supertranspose  Jˢᵗ = [[J₀₀ᵗ, J₁₀ᵗ], [−J₀₁ᵗ, J₁₁ᵗ]].
 *
 * Determinants and adjugates of blocks with even (hence mutually commuting)
 * entries are computed by division-free cofactor expansion; the only
 * divisions anywhere are exact even-element inversions.  This keeps every
 * operation exact over an exact scalar ring — the property the zero-residual
 * Berezinian test suite relies on.
 */
#pragma once

#include <string>
#include <vector>

#include "supervol/grassmann.hpp"

namespace supervol {

template <class S>
class SuperMatrix {
 public:
  using Element = GrassmannElement<S>;
  using Traits = ScalarTraits<S>;

  /// Zero (p|q) supermatrix over Λ_N.
  SuperMatrix(int p, int q, int num_generators)
      : p_(p), q_(q), ngen_(num_generators) {
    if (p < 0 || q < 0 || p + q == 0)
      throw std::invalid_argument("SuperMatrix: invalid shape");
    entries_.assign(static_cast<std::size_t>(size()) * size(), Element(ngen_));
  }

  static SuperMatrix identity(int p, int q, int num_generators) {
    SuperMatrix m(p, q, num_generators);
    for (int i = 0; i < m.size(); ++i)
      m.entries_[m.flat(i, i)] = Element::constant(num_generators, Traits::one());
    return m;
  }

  int even_rows() const { return p_; }
  int odd_rows() const { return q_; }
  int size() const { return p_ + q_; }
  int generators() const { return ngen_; }

  const Element& at(int i, int j) const { return entries_[flat(i, j)]; }

  /// Mutate one entry, enforcing the evenness pattern: diagonal blocks take
  /// even elements, off-diagonal blocks take odd elements (zero is always
  /// allowed).
  void set(int i, int j, const Element& v) {
    if (v.generators() != ngen_)
      throw std::invalid_argument("SuperMatrix::set: wrong generator count");
    const bool diag_block = (i < p_) == (j < p_);
    const Parity par = v.parity();
    if (!v.is_zero()) {
      if (diag_block && par != Parity::even)
        throw std::invalid_argument(
            "SuperMatrix::set: diagonal-block entry must be even");
      if (!diag_block && par != Parity::odd)
        throw std::invalid_argument(
            "SuperMatrix::set: off-diagonal-block entry must be odd");
    }
    entries_[flat(i, j)] = v;
  }

  /// Numeric-entry convenience setter.
  void set(int i, int j, const S& v) {
    set(i, j, Element::constant(ngen_, v));
  }

  friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.p_ != b.p_ || a.q_ != b.q_ || a.ngen_ != b.ngen_)
      throw std::invalid_argument("SuperMatrix: shape/algebra mismatch in product");
    SuperMatrix c(a.p_, a.q_, a.ngen_);
    for (int i = 0; i < a.size(); ++i)
      for (int j = 0; j < a.size(); ++j) {
        Element sum(a.ngen_);
        for (int k = 0; k < a.size(); ++k)
          sum += a.at(i, k) * b.at(k, j);  // factor order preserved
        c.entries_[c.flat(i, j)] = sum;
      }
    return c;
  }

  friend SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.p_ != b.p_ || a.q_ != b.q_ || a.ngen_ != b.ngen_)
      throw std::invalid_argument("SuperMatrix: shape/algebra mismatch in sum");
    SuperMatrix c = a;
    for (std::size_t t = 0; t < c.entries_.size(); ++t) c.entries_[t] += b.entries_[t];
    return c;
  }

  friend SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.p_ != b.p_ || a.q_ != b.q_ || a.ngen_ != b.ngen_)
      throw std::invalid_argument("SuperMatrix: shape/algebra mismatch in difference");
    SuperMatrix c = a;
    for (std::size_t t = 0; t < c.entries_.size(); ++t) c.entries_[t] -= b.entries_[t];
    return c;
  }

  bool operator==(const SuperMatrix& b) const {
    return p_ == b.p_ && q_ == b.q_ && ngen_ == b.ngen_ && entries_ == b.entries_;
  }

  /// Supertranspose: [[A, B], [C, D]] ↦ [[Aᵗ, Cᵗ], [−Bᵗ, Dᵗ]].  Preserves the
  /// Berezinian; applying it four times is the identity map.
  SuperMatrix supertranspose() const {
    SuperMatrix r(p_, q_, ngen_);
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j) {
        const bool from_upper_right = i < p_ && j >= p_;  // B block
        Element v = at(i, j);
        if (from_upper_right) v = -v;
        r.entries_[r.flat(j, i)] = v;
      }
    return r;
  }

 private:
  int flat(int i, int j) const { return i * size() + j; }

  int p_, q_, ngen_;
  std::vector<Element> entries_;
};

//=============================================================================
// Commutative (even-entry) matrix helpers
//=============================================================================

namespace detail {

/// Determinant of a square matrix of even Grassmann elements by cofactor
/// expansion along the first column.  Division-free and always defined; even
/// entries commute, so any expansion order is valid.
template <class S>
GrassmannElement<S> det_even(const std::vector<GrassmannElement<S>>& m, int n,
                             int ngen) {
  if (n == 0) return GrassmannElement<S>::constant(ngen, ScalarTraits<S>::one());
  if (n == 1) return m[0];
  GrassmannElement<S> det(ngen);
  std::vector<GrassmannElement<S>> minor(static_cast<std::size_t>(n - 1) * (n - 1),
                                         GrassmannElement<S>(ngen));
  for (int i = 0; i < n; ++i) {
    if (m[static_cast<std::size_t>(i) * n].is_zero()) continue;
    int mr = 0;
    for (int r = 0; r < n; ++r) {
      if (r == i) continue;
      for (int c = 1; c < n; ++c)
        minor[static_cast<std::size_t>(mr) * (n - 1) + (c - 1)] =
            m[static_cast<std::size_t>(r) * n + c];
      ++mr;
    }
    GrassmannElement<S> term =
        m[static_cast<std::size_t>(i) * n] * det_even(minor, n - 1, ngen);
    det += (i % 2 == 0) ? term : -term;
  }
  return det;
}

/// Adjugate-based exact inverse of a square matrix of even Grassmann
/// elements.  Requires det to have invertible body.
template <class S>
std::vector<GrassmannElement<S>> inverse_even(
    const std::vector<GrassmannElement<S>>& m, int n, int ngen,
    const std::string& what) {
  const GrassmannElement<S> det = det_even<S>(m, n, ngen);
  if (ScalarTraits<S>::is_zero(det.body()))
    throw std::domain_error("SuperMatrix: " + what +
                            " has non-invertible body (zero body determinant)");
  const GrassmannElement<S> det_inv = even_inverse(det);
  std::vector<GrassmannElement<S>> inv(static_cast<std::size_t>(n) * n,
                                       GrassmannElement<S>(ngen));
  std::vector<GrassmannElement<S>> minor(static_cast<std::size_t>(n - 1) * (n - 1),
                                         GrassmannElement<S>(ngen));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int mr = 0;
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        int mc = 0;
        for (int c = 0; c < n; ++c) {
          if (c == j) continue;
          minor[static_cast<std::size_t>(mr) * (n - 1) + mc] =
              m[static_cast<std::size_t>(r) * n + c];
          ++mc;
        }
        ++mr;
      }
      GrassmannElement<S> cof = det_even<S>(minor, n - 1, ngen);
      if ((i + j) % 2 != 0) cof = -cof;
      inv[static_cast<std::size_t>(j) * n + i] = cof * det_inv;  // adj = cofᵗ
    }
  return inv;
}

/// Extract a block as a flat row-major vector.
template <class S>
std::vector<GrassmannElement<S>> block(const SuperMatrix<S>& m, int r0, int r1,
                                       int c0, int c1) {
  std::vector<GrassmannElement<S>> b;
  b.reserve(static_cast<std::size_t>(r1 - r0) * (c1 - c0));
  for (int i = r0; i < r1; ++i)
    for (int j = c0; j < c1; ++j) b.push_back(m.at(i, j));
  return b;
}

/// Flat row-major matrix product with explicit shapes (entries need not
/// commute; factor order is preserved).
template <class S>
std::vector<GrassmannElement<S>> matmul_flat(
    const std::vector<GrassmannElement<S>>& a, int ar, int ac,
    const std::vector<GrassmannElement<S>>& b, int bc, int ngen) {
  std::vector<GrassmannElement<S>> c(static_cast<std::size_t>(ar) * bc,
                                     GrassmannElement<S>(ngen));
  for (int i = 0; i < ar; ++i)
    for (int j = 0; j < bc; ++j) {
      GrassmannElement<S> sum(ngen);
      for (int k = 0; k < ac; ++k)
        sum += a[static_cast<std::size_t>(i) * ac + k] *
               b[static_cast<std::size_t>(k) * bc + j];
      c[static_cast<std::size_t>(i) * bc + j] = sum;
    }
  return c;
}

}  // namespace detail

//=============================================================================
// Berezinian and inverse
//=============================================================================

/// Berezinian via the odd-odd Schur complement:
/// Ber J = det(J₀₀ − J₀₁ J₁₁⁻¹ J₁₀) · det(J₁₁)⁻¹.
/// Requires body(J₁₁) invertible (q = 0 reduces to det J₀₀, p = 0 to 1/det J₁₁).
template <class S>
GrassmannElement<S> berezinian(const SuperMatrix<S>& m) {
  const int p = m.even_rows(), q = m.odd_rows(), ngen = m.generators();
  auto j00 = detail::block(m, 0, p, 0, p);
  auto j11 = detail::block(m, p, p + q, p, p + q);
  if (q == 0) return detail::det_even<S>(j00, p, ngen);
  const GrassmannElement<S> det11 = detail::det_even<S>(j11, q, ngen);
  if (ScalarTraits<S>::is_zero(det11.body()))
    throw std::domain_error(
        "berezinian: odd-odd block has non-invertible body");
  if (p == 0) return even_inverse(det11);
  auto j01 = detail::block(m, 0, p, p, p + q);
  auto j10 = detail::block(m, p, p + q, 0, p);
  auto inv11 = detail::inverse_even<S>(j11, q, ngen, "odd-odd block");
  auto schur = detail::matmul_flat<S>(
      j01, p, q, detail::matmul_flat<S>(inv11, q, q, j10, p, ngen), p, ngen);
  for (std::size_t t = 0; t < j00.size(); ++t) j00[t] -= schur[t];
  return detail::det_even<S>(j00, p, ngen) * even_inverse(det11);
}

/// Berezinian via the even-even Schur complement:
/// Ber J = det J₀₀ · det(J₁₁ − J₁₀ J₀₀⁻¹ J₀₁)⁻¹.
/// Requires body(J₀₀) invertible and body(J₁₁) invertible (for the final
/// reciprocal).  Agrees exactly with `berezinian` whenever both are defined.
template <class S>
GrassmannElement<S> berezinian_even_schur(const SuperMatrix<S>& m) {
  const int p = m.even_rows(), q = m.odd_rows(), ngen = m.generators();
  auto j00 = detail::block(m, 0, p, 0, p);
  if (q == 0) return detail::det_even<S>(j00, p, ngen);
  auto j11 = detail::block(m, p, p + q, p, p + q);
  if (p == 0) {
    const GrassmannElement<S> det11 = detail::det_even<S>(j11, q, ngen);
    if (ScalarTraits<S>::is_zero(det11.body()))
      throw std::domain_error("berezinian: odd-odd block has non-invertible body");
    return even_inverse(det11);
  }
  auto j01 = detail::block(m, 0, p, p, p + q);
  auto j10 = detail::block(m, p, p + q, 0, p);
  auto inv00 = detail::inverse_even<S>(j00, p, ngen, "even-even block");
  auto schur = detail::matmul_flat<S>(
      j10, q, p, detail::matmul_flat<S>(inv00, p, p, j01, q, ngen), q, ngen);
  for (std::size_t t = 0; t < j11.size(); ++t) j11[t] -= schur[t];
  const GrassmannElement<S> det_schur = detail::det_even<S>(j11, q, ngen);
  if (ScalarTraits<S>::is_zero(det_schur.body()))
    throw std::domain_error(
        "berezinian: odd-odd Schur complement has non-invertible body");
  return detail::det_even<S>(j00, p, ngen) * even_inverse(det_schur);
}

/// Exact inverse by block elimination (noncommutative Schur form; inverses
/// applied on the correct sides).  Requires invertible bodies on both
/// diagonal blocks; A · A⁻¹ = I holds exactly.
template <class S>
SuperMatrix<S> inverse(const SuperMatrix<S>& m) {
  const int p = m.even_rows(), q = m.odd_rows(), ngen = m.generators();
  using E = GrassmannElement<S>;
  if (q == 0) {
    auto inv00 = detail::inverse_even<S>(detail::block(m, 0, p, 0, p), p, ngen,
                                         "even-even block");
    SuperMatrix<S> r(p, 0, ngen);
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j)
        r.set(i, j, inv00[static_cast<std::size_t>(i) * p + j]);
    return r;
  }
  if (p == 0) {
    auto inv11 = detail::inverse_even<S>(detail::block(m, 0, q, 0, q), q, ngen,
                                         "odd-odd block");
    SuperMatrix<S> r(0, q, ngen);
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j)
        r.set(i, j, inv11[static_cast<std::size_t>(i) * q + j]);
    return r;
  }
  auto j00 = detail::block(m, 0, p, 0, p);
  auto j01 = detail::block(m, 0, p, p, p + q);
  auto j10 = detail::block(m, p, p + q, 0, p);
  auto j11 = detail::block(m, p, p + q, p, p + q);
  auto inv11 = detail::inverse_even<S>(j11, q, ngen, "odd-odd block");

  // X = J₀₀ − J₀₁ J₁₁⁻¹ J₁₀ has even entries and body(X) = body(J₀₀).
  auto x = j00;
  {
    auto t = detail::matmul_flat<S>(
        j01, p, q, detail::matmul_flat<S>(inv11, q, q, j10, p, ngen), p, ngen);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] -= t[k];
  }
  auto xinv = detail::inverse_even<S>(x, p, ngen, "even-even block");

  // J⁻¹ = [[X⁻¹, −X⁻¹ J₀₁ J₁₁⁻¹], [−J₁₁⁻¹ J₁₀ X⁻¹, J₁₁⁻¹ + J₁₁⁻¹ J₁₀ X⁻¹ J₀₁ J₁₁⁻¹]]
  auto upper_right = detail::matmul_flat<S>(
      detail::matmul_flat<S>(xinv, p, p, j01, q, ngen), p, q, inv11, q, ngen);
  auto lower_left = detail::matmul_flat<S>(
      detail::matmul_flat<S>(inv11, q, q, j10, p, ngen), q, p, xinv, p, ngen);
  auto lower_right = detail::matmul_flat<S>(
      detail::matmul_flat<S>(lower_left, q, p, j01, q, ngen), q, q, inv11, q, ngen);
  for (std::size_t k = 0; k < lower_right.size(); ++k)
    lower_right[k] = inv11[k] + lower_right[k];

  SuperMatrix<S> r(p, q, ngen);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      r.set(i, j, xinv[static_cast<std::size_t>(i) * p + j]);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j)
      r.set(i, p + j, -E(upper_right[static_cast<std::size_t>(i) * q + j]));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < p; ++j)
      r.set(p + i, j, -E(lower_left[static_cast<std::size_t>(i) * p + j]));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      r.set(p + i, p + j, lower_right[static_cast<std::size_t>(i) * q + j]);
  return r;
}

/// √g volume density: the Taylor lift of √(·) applied to Ber(g).  The body of
/// Ber(g) must be real and strictly positive (principal branch).
inline GrassmannElement<Complex> sqrt_berezinian_volume_density(
    const SuperMatrix<Complex>& g) {
  const GrassmannElement<Complex> ber = berezinian(g);
  const Complex b = ber.body();
  if (!(b.real() > 0.0) || std::abs(b.imag()) > 1e-9 * std::max(1.0, std::abs(b.real())))
    throw std::domain_error(
        "sqrt_berezinian_volume_density: Berezinian body is not positive real");
  // Derivatives of √x at b: f⁽ʲ⁾ = f⁽ʲ⁻¹⁾ · (1/2 − (j−1)) / b.
  const std::size_t need = static_cast<std::size_t>(g.generators() / 2) + 2;
  std::vector<Complex> derivs(need);
  derivs[0] = std::sqrt(b);
  for (std::size_t j = 1; j < need; ++j)
    derivs[j] = derivs[j - 1] * (0.5 - static_cast<double>(j - 1)) / b;
  return taylor_lift(derivs, ber);
}

}  // namespace supervol
