/**
 * @file grassmann.hpp
 * @brief Exact arithmetic in the complex Grassmann algebra Λ_N: supercommutative
 *        products, body/soul decomposition, Berezin integration, odd derivatives,
 *        and nilpotent-exact Taylor lifting of smooth scalar functions.
 *
 * Elements are stored sparsely as a map from generator subsets to coefficients.
 * A subset of the N generators θ₀, …, θ_{N−1} is encoded as a bitmask, and the
 * monomial it denotes is always the *ascending* product (bit i set ⇒ θᵢ present,
 * factors ordered by increasing index).  All signs are computed by counting
 * inversions against this canonical order.
 *
 * Conventions fixed here (and asserted throughout the test suite):
 *   • Berezin normalization:  ∫D(θ¹,…,θᵐ) θᵐ⋯θ¹ = 1, equivalently
 *     ∫D(θ¹,θ²) exp(−2θ¹θ²) = 2, the value of the standard Gaussian g₀|₂.
 *   • Partial Berezin integration over a subset S moves the S-generators to the
 *     right of each monomial (descending order) before extracting.
 *   • Complex conjugation is the ℂ-antilinear algebra homomorphism determined
 *     by a declared pairing of generators: (ab)* = a*b*, θ* = θ̄, θ̄* = θ,
 *     coefficients conjugated.  With this rule (iθθ̄)* = iθθ̄, so the Hermitian
 *     combinations appearing in Fubini–Study-type densities are self-conjugate,
 *     and conjugation is an involution.
 *
 * The scalar ring is a template parameter.  Production code instantiates
 * Scalar = std::complex<double>; the exact-arithmetic test suite instantiates
 * a Gaussian-rational scalar so that algebraic identities can be asserted with
 * literally zero residual.
 */
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace supervol {

using Complex = std::complex<double>;

//=============================================================================
// Scalar traits
//=============================================================================

/// Operations the Grassmann/supermatrix templates need from a scalar ring.
/// Specializations exist for std::complex<double> (production) and for the
/// exact Gaussian-rational scalar used by the zero-residual test suite.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  static Complex zero() { return Complex{0.0, 0.0}; }
  static Complex one() { return Complex{1.0, 0.0}; }
  static bool is_zero(const Complex& v) { return v == Complex{0.0, 0.0}; }
  static Complex conj(const Complex& v) { return std::conj(v); }
  static Complex from_int(long long k) {
    return Complex{static_cast<double>(k), 0.0};
  }
  static Complex inverse(const Complex& v) { return one() / v; }
};

//=============================================================================
// Parity
//=============================================================================

/// Z₂-grading carrier.  A Grassmann element is homogeneous-even when all its
/// monomials have even degree, homogeneous-odd when all have odd degree, and
/// inhomogeneous otherwise.  The zero element counts as even (and vacuously
/// odd); products of homogeneous elements add parities mod 2.
enum class Parity { even, odd, inhomogeneous };

//=============================================================================
// GrassmannElement
//=============================================================================

/// Maximum number of generators.  The coefficient space is 2^N-dimensional,
/// so the budget is capped; every pipeline in this project needs at most ~8.
inline constexpr int kMaxGenerators = 16;

template <class S>
class GrassmannElement {
 public:
  using scalar_type = S;
  using Traits = ScalarTraits<S>;
  using TermMap = std::map<std::uint32_t, S>;

  /// The zero element of Λ_N.
  explicit GrassmannElement(int num_generators = 0)
      : num_generators_(check_generator_count(num_generators)) {}

  /// The constant (pure body) c in Λ_N.
  static GrassmannElement constant(int num_generators, const S& c) {
    GrassmannElement a(num_generators);
    a.add_term(0u, c);
    return a;
  }

  /// The generator θ_i in Λ_N.
  static GrassmannElement generator(int num_generators, int i) {
    GrassmannElement a(num_generators);
    a.require_index(i);
    a.add_term(std::uint32_t{1} << i, Traits::one());
    return a;
  }

  /// Build an element from explicit (mask, coefficient) terms.
  static GrassmannElement from_terms(
      int num_generators,
      const std::vector<std::pair<std::uint32_t, S>>& terms) {
    GrassmannElement a(num_generators);
    for (const auto& [mask, c] : terms) {
      a.require_mask(mask);
      a.add_term(mask, c);
    }
    return a;
  }

  int generators() const { return num_generators_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of the monomial encoded by `mask` (zero when absent).
  S coefficient(std::uint32_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? Traits::zero() : it->second;
  }

  /// Empty-subset coefficient: the numeric part of the element.
  S body() const { return coefficient(0u); }

  /// The nilpotent remainder: a − body(a).
  GrassmannElement soul() const {
    GrassmannElement s(num_generators_);
    for (const auto& [mask, c] : terms_)
      if (mask != 0u) s.terms_.emplace(mask, c);
    return s;
  }

  Parity parity() const {
    bool has_even = false, has_odd = false;
    for (const auto& [mask, c] : terms_) {
      (void)c;
      (std::popcount(mask) % 2 == 0 ? has_even : has_odd) = true;
    }
    if (has_even && has_odd) return Parity::inhomogeneous;
    if (has_odd) return Parity::odd;
    return Parity::even;  // zero counts as even
  }

  bool is_even() const { return parity() == Parity::even; }
  bool is_odd() const { return is_zero() || parity() == Parity::odd; }

  //---------------------------------------------------------------- algebra

  GrassmannElement& operator+=(const GrassmannElement& b) {
    require_same_algebra(b);
    for (const auto& [mask, c] : b.terms_) add_term(mask, c);
    return *this;
  }

  GrassmannElement& operator-=(const GrassmannElement& b) {
    require_same_algebra(b);
    for (const auto& [mask, c] : b.terms_) add_term(mask, neg(c));
    return *this;
  }

  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) {
    a += b;
    return a;
  }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) {
    a -= b;
    return a;
  }
  friend GrassmannElement operator-(const GrassmannElement& a) {
    GrassmannElement r(a.num_generators_);
    for (const auto& [mask, c] : a.terms_) r.terms_.emplace(mask, neg(c));
    return r;
  }

  /// Supercommutative product.  Monomials with overlapping generator sets
  /// vanish by nilpotency; otherwise the sign is the parity of the number of
  /// transpositions needed to merge the two ascending words into one.
  friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
    a.require_same_algebra(b);
    GrassmannElement r(a.num_generators_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        if ((ma & mb) != 0u) continue;  // θᵢθᵢ = 0
        const int sgn = merge_sign(ma, mb);
        S prod = ca * cb;
        r.add_term(ma | mb, sgn < 0 ? neg(prod) : prod);
      }
    }
    return r;
  }

  friend GrassmannElement operator*(const S& c, const GrassmannElement& a) {
    GrassmannElement r(a.num_generators_);
    for (const auto& [mask, ca] : a.terms_) r.add_term(mask, c * ca);
    return r;
  }
  friend GrassmannElement operator*(const GrassmannElement& a, const S& c) {
    return c * a;
  }

  bool operator==(const GrassmannElement& b) const {
    return num_generators_ == b.num_generators_ && terms_ == b.terms_;
  }
  bool operator!=(const GrassmannElement& b) const { return !(*this == b); }

  //------------------------------------------------------------- utilities

  /// Re-embed into an algebra with a different number of generators.  Growing
  /// is always possible; shrinking requires that no term touches a dropped
  /// generator.
  GrassmannElement with_generators(int new_count) const {
    check_generator_count(new_count);
    GrassmannElement r(new_count);
    const std::uint32_t allowed =
        new_count >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << new_count) - 1u);
    for (const auto& [mask, c] : terms_) {
      if ((mask & ~allowed) != 0u)
        throw std::invalid_argument(
            "with_generators: term uses a generator outside the target algebra");
      r.terms_.emplace(mask, c);
    }
    return r;
  }

  /// Largest L∞ coefficient magnitude — only meaningful for floating scalars.
  double max_abs_coefficient() const
    requires std::is_same_v<S, Complex>
  {
    double m = 0.0;
    for (const auto& [mask, c] : terms_) {
      (void)mask;
      m = std::max(m, std::abs(c));
    }
    return m;
  }

 private:
  static int check_generator_count(int n) {
    if (n < 0 || n > kMaxGenerators)
      throw std::invalid_argument("GrassmannElement: generator count " +
                                  std::to_string(n) + " outside [0, " +
                                  std::to_string(kMaxGenerators) + "]");
    return n;
  }

  void require_index(int i) const {
    if (i < 0 || i >= num_generators_)
      throw std::invalid_argument("GrassmannElement: generator index " +
                                  std::to_string(i) + " outside [0, " +
                                  std::to_string(num_generators_) + ")");
  }

  void require_mask(std::uint32_t mask) const {
    const std::uint32_t allowed =
        num_generators_ >= 32 ? ~std::uint32_t{0}
                              : ((std::uint32_t{1} << num_generators_) - 1u);
    if ((mask & ~allowed) != 0u)
      throw std::invalid_argument(
          "GrassmannElement: subset mask uses a generator outside [0, N)");
  }

  void require_same_algebra(const GrassmannElement& b) const {
    if (num_generators_ != b.num_generators_)
      throw std::invalid_argument(
          "GrassmannElement: operands live in different algebras (N = " +
          std::to_string(num_generators_) + " vs " +
          std::to_string(b.num_generators_) + ")");
  }

  static S neg(const S& c) { return Traits::zero() - c; }

  void add_term(std::uint32_t mask, const S& c) {
    auto [it, inserted] = terms_.try_emplace(mask, c);
    if (!inserted) {
      it->second = it->second + c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    } else if (Traits::is_zero(it->second)) {
      terms_.erase(it);
    }
  }

  /// Sign of merging two disjoint ascending words: (−1)^{#(i∈a, j∈b): j<i}.
  static int merge_sign(std::uint32_t a, std::uint32_t b) {
    int swaps = 0;
    for (std::uint32_t t = a; t != 0u; t &= t - 1u) {
      const int i = std::countr_zero(t);
      swaps += std::popcount(b & ((std::uint32_t{1} << i) - 1u));
    }
    return (swaps & 1) ? -1 : +1;
  }

  int num_generators_;
  TermMap terms_;
};

//=============================================================================
// Free operations
//=============================================================================

/// body + soul decomposition: a = body(a)·1 + soul(a), soul nilpotent of order
/// ≤ ⌊N/2⌋ + 1.
template <class S>
std::pair<S, GrassmannElement<S>> body_soul(const GrassmannElement<S>& a) {
  return {a.body(), a.soul()};
}

/// Successive soul powers divided by factorials: [1, soul, soul²/2!, …],
/// truncated at the first vanishing power.  This is the expansion engine
/// shared by taylor_lift and the δ-function volume oracle.
template <class S>
std::vector<GrassmannElement<S>> soul_power_series(const GrassmannElement<S>& a) {
  using Traits = ScalarTraits<S>;
  if (a.parity() != Parity::even)
    throw std::invalid_argument("soul_power_series: element must be even");
  std::vector<GrassmannElement<S>> powers;
  GrassmannElement<S> term =
      GrassmannElement<S>::constant(a.generators(), Traits::one());
  const GrassmannElement<S> soul = a.soul();
  long long j = 0;
  while (!term.is_zero()) {
    powers.push_back(term);
    ++j;
    term = term * soul;
    term = Traits::inverse(Traits::from_int(j)) * term;  // soul^j / j!
  }
  return powers;
}

/// Nilpotent-exact Taylor lift:  f(a) := Σ_j f⁽ʲ⁾(x₀)·soul(a)ʲ/j!  for an even
/// element a with body x₀.  The series terminates because the soul is
/// nilpotent; `derivatives` must therefore hold f(x₀), f′(x₀), …, f⁽ᵏ⁾(x₀)
/// with k at least the nilpotency order of soul(a).
template <class S>
GrassmannElement<S> taylor_lift(const std::vector<S>& derivatives,
                                const GrassmannElement<S>& a) {
  if (a.parity() == Parity::odd && !a.is_zero())
    throw std::invalid_argument("taylor_lift: element must be even");
  const auto powers = soul_power_series(a);
  if (derivatives.size() < powers.size())
    throw std::invalid_argument(
        "taylor_lift: derivative list too short (need " +
        std::to_string(powers.size()) + " values, got " +
        std::to_string(derivatives.size()) + ")");
  GrassmannElement<S> r(a.generators());
  for (std::size_t j = 0; j < powers.size(); ++j) r += derivatives[j] * powers[j];
  return r;
}

/// Berezin integration over the generators listed in `generator_mask`.
///
/// Normalization: ∫D(θ^{i₁},…,θ^{iₘ}) θ^{iₘ}⋯θ^{i₁} = 1 with i₁ < … < iₘ.
/// Operationally, each monomial is reordered as (rest ascending)·(integrated
/// generators descending); the sign of that reorder multiplies the surviving
/// coefficient.  Monomials that do not contain every integrated generator die.
/// The result lives in the same algebra but touches only the remaining
/// generators (the subalgebra on [0,N) \ S); linear in the integrand.
template <class S>
GrassmannElement<S> berezin_integrate(const GrassmannElement<S>& a,
                                      std::uint32_t generator_mask) {
  GrassmannElement<S> r(a.generators());
  const int k = std::popcount(generator_mask);
  // Reversing a k-letter ascending word into descending order costs
  // k(k−1)/2 transpositions.
  const int reverse_parity = (k * (k - 1) / 2) % 2;
  for (const auto& [mask, c] : a.terms()) {
    if ((mask & generator_mask) != generator_mask) continue;
    const std::uint32_t rest = mask & ~generator_mask;
    // Cross inversions: pairs (u ∈ rest, s ∈ S) with u > s must swap when the
    // ascending word of `mask` is split into (rest asc)·(S asc).
    int cross = 0;
    for (std::uint32_t t = generator_mask; t != 0u; t &= t - 1u) {
      const int s = std::countr_zero(t);
      cross += std::popcount(rest >> (s + 1));
    }
    const bool negative = ((cross + reverse_parity) & 1) != 0;
    std::vector<std::pair<std::uint32_t, S>> term{
        {rest, negative ? (ScalarTraits<S>::zero() - c) : c}};
    r += GrassmannElement<S>::from_terms(a.generators(), term);
  }
  return r;
}

/// Berezin integration over an explicit list of generator indices.
template <class S>
GrassmannElement<S> berezin_integrate(const GrassmannElement<S>& a,
                                      const std::vector<int>& generators) {
  std::uint32_t mask = 0;
  for (int i : generators) {
    if (i < 0 || i >= a.generators())
      throw std::invalid_argument("berezin_integrate: generator index out of range");
    mask |= std::uint32_t{1} << i;
  }
  return berezin_integrate(a, mask);
}

/// Berezin integration over all generators, returning the scalar coefficient.
template <class S>
S berezin_full(const GrassmannElement<S>& a) {
  const std::uint32_t all =
      a.generators() >= 32 ? ~std::uint32_t{0}
                           : ((std::uint32_t{1} << a.generators()) - 1u);
  return berezin_integrate(a, all).body();
}

enum class DerivativeSide { left, right };

/// Signed partial derivative with respect to θ_i.
/// Left:  θ_i is commuted to the front of each monomial and stripped;
/// right: to the back.  ∂_θ(θ·b) = b for θ-free b (left rule).
template <class S>
GrassmannElement<S> odd_derivative(const GrassmannElement<S>& a, int generator,
                                   DerivativeSide side = DerivativeSide::left) {
  if (generator < 0 || generator >= a.generators())
    throw std::invalid_argument("odd_derivative: generator index out of range");
  const std::uint32_t bit = std::uint32_t{1} << generator;
  GrassmannElement<S> r(a.generators());
  for (const auto& [mask, c] : a.terms()) {
    if ((mask & bit) == 0u) continue;
    const std::uint32_t rest = mask & ~bit;
    int swaps;  // transpositions to move θ_i to the chosen end of the word
    if (side == DerivativeSide::left)
      swaps = std::popcount(rest & (bit - 1u));      // generators below i
    else
      swaps = std::popcount(rest & ~(bit | (bit - 1u)));  // generators above i
    const bool negative = (swaps & 1) != 0;
    std::vector<std::pair<std::uint32_t, S>> term{
        {rest, negative ? (ScalarTraits<S>::zero() - c) : c}};
    r += GrassmannElement<S>::from_terms(a.generators(), term);
  }
  return r;
}

/// Exact inverse of an even element with invertible body:
/// 1/a = (1/b)·Σ_j (−soul/b)^j, terminating by nilpotency; a·a⁻¹ = 1 exactly.
template <class S>
GrassmannElement<S> even_inverse(const GrassmannElement<S>& a) {
  using Traits = ScalarTraits<S>;
  if (a.parity() == Parity::odd && !a.is_zero())
    throw std::invalid_argument("even_inverse: element must be even");
  const S b = a.body();
  if (Traits::is_zero(b))
    throw std::invalid_argument("even_inverse: non-invertible (zero body)");
  const S binv = Traits::inverse(b);
  const GrassmannElement<S> minus_u =
      (Traits::zero() - binv) * a.soul();  // −soul/b, nilpotent
  GrassmannElement<S> result =
      GrassmannElement<S>::constant(a.generators(), Traits::one());
  GrassmannElement<S> power = result;
  while (true) {
    power = power * minus_u;
    if (power.is_zero()) break;
    result += power;
  }
  return binv * result;
}

/// Pairing of generators into (θ, θ̄) partners for conjugation.  partner[i]
/// is the index conjugate to generator i; the map must be an involution with
/// every generator paired (partner[partner[i]] == i).
using ConjugationPairing = std::vector<int>;

/// ℂ-antilinear conjugation: coefficients conjugated, each generator replaced
/// by its declared partner, products conjugated homomorphically
/// ((ab)* = a*b*).  An involution; (iθθ̄)* = iθθ̄ for a paired couple (θ, θ̄).
template <class S>
GrassmannElement<S> conjugate(const GrassmannElement<S>& a,
                              const ConjugationPairing& pairing) {
  using Traits = ScalarTraits<S>;
  if (static_cast<int>(pairing.size()) != a.generators())
    throw std::invalid_argument("conjugate: pairing size must equal generator count");
  for (int i = 0; i < a.generators(); ++i) {
    if (pairing[i] < 0 || pairing[i] >= a.generators())
      throw std::invalid_argument("conjugate: generator " + std::to_string(i) +
                                  " is unpaired");
    if (pairing[pairing[i]] != i)
      throw std::invalid_argument("conjugate: pairing is not an involution");
  }
  GrassmannElement<S> r(a.generators());
  for (const auto& [mask, c] : a.terms()) {
    // Map the ascending word θ_{i₁}⋯θ_{iₖ} to θ_{p(i₁)}⋯θ_{p(iₖ)} and sort the
    // partner indices back into ascending order, tracking the sign.
    std::vector<int> indices;
    for (std::uint32_t t = mask; t != 0u; t &= t - 1u)
      indices.push_back(pairing[std::countr_zero(t)]);
    int swaps = 0;
    for (std::size_t i = 1; i < indices.size(); ++i) {  // insertion sort
      std::size_t j = i;
      while (j > 0 && indices[j - 1] > indices[j]) {
        std::swap(indices[j - 1], indices[j]);
        ++swaps;
        --j;
      }
    }
    std::uint32_t new_mask = 0;
    for (int idx : indices) new_mask |= std::uint32_t{1} << idx;
    S coeff = Traits::conj(c);
    if (swaps & 1) coeff = Traits::zero() - coeff;
    std::vector<std::pair<std::uint32_t, S>> term{{new_mask, coeff}};
    r += GrassmannElement<S>::from_terms(a.generators(), term);
  }
  return r;
}

/// exp of a nilpotent even element (body must be zero): Σ aʲ/j!, terminating.
template <class S>
GrassmannElement<S> exp_nilpotent(const GrassmannElement<S>& a) {
  using Traits = ScalarTraits<S>;
  if (!Traits::is_zero(a.body()))
    throw std::invalid_argument("exp_nilpotent: element must have zero body");
  GrassmannElement<S> r(a.generators());
  for (const auto& p : soul_power_series(a)) r += p;
  return r;
}

}  // namespace supervol
