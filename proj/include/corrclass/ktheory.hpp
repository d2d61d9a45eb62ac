#pragma once

#include "corrclass/classes.hpp"
#include "corrclass/spaces.hpp"

namespace corrclass {

/// An element of the G_0(X) (x) Q model: a polynomial in the nilpotents
/// t_i = 1 - [O_i(-1)] truncated by t_i^{n_i+1} = 0. Pushforward is
/// computed from Euler characteristics and Koszul resolutions, not from
/// Chow classes, so Riemann-Roch checks against the Chow side are
/// non-circular.
class KClass {
  public:
    KClass() = default;
    KClass(Space space, RingElement element);

    /// The zero class on `x`.
    static KClass zero(const Space& x);
    /// [O_X].
    static KClass structure_sheaf(const Space& x);
    /// [O(d_1,...,d_k)] = prod (1 - t_i)^{-d_i}, expanded.
    static KClass line(const Space& x, const std::vector<int>& multidegree);
    /// Sum of line summands of the bundle.
    static KClass of_bundle(const VectorBundle& e);
    /// Basis monomial prod t_i^{e_i}.
    static KClass t_monomial(const Space& x, const std::vector<int>& exponents);

    const Space& space() const { return space_; }
    const RingElement& element() const { return element_; }
    bool is_zero() const { return element_.is_zero(); }

    friend KClass operator+(const KClass& a, const KClass& b);
    friend KClass operator-(const KClass& a, const KClass& b);
    /// Tensor product: the ring product of t-polynomials.
    friend KClass operator*(const KClass& a, const KClass& b);
    KClass scaled(const YPoly& c) const { return KClass(space_, element_.scaled(c)); }

    friend bool operator==(const KClass& a, const KClass& b) {
        return a.space_ == b.space_ && a.element_ == b.element_;
    }
    friend bool operator!=(const KClass& a, const KClass& b) { return !(a == b); }

    std::string str() const { return element_.str(); }

  private:
    Space space_;
    RingElement element_;
};

/// chi(P^p, O(d)) = (d+1)(d+2)...(d+p)/p!, the extended binomial; valid
/// for every integer d (Serre-duality cases included).
Rational euler_char_line(int p, long d);

/// Flat pullback: t_j -> t_{sigma(j)} (canonical embeddings pull O(-1) to
/// O(-1)) or t_j -> 0 on constant factors.
KClass k_pullback(const Morphism& f, const KClass& a);

/// Proper pushforward through the canonical factorization:
///  - projections integrate dropped factors by Euler characteristics, on
///    the t-basis via t^j = sum_a C(j,a)(-1)^a [O(-a)];
///  - the canonical embedding P^m -> P^n of codimension c maps
///    g(t) -> g(t) * t^c (Koszul resolution of the linear subspace);
///  - point inclusions insert t^{n_j};
///  - permutations relabel.
KClass k_pushforward(const Morphism& f, const KClass& a);

/// Baum-Fulton-MacPherson Todd transformation on the model: the Chern
/// character of `a` (ring map t_i -> 1 - e^{-h_i}) times td(TX), under the
/// identification of homology with the Chow ring.
RingElement td_bfm(const KClass& a);

/// The Chern-character ring map G_0 -> H_* alone (t_i -> 1 - e^{-h_i}).
RingElement k_chern_character(const KClass& a);

/// Prints a K-class in the O(d)-basis: each t-monomial expanded by
/// t_i = 1 - [O_i(-1)].
std::string k_obasis_str(const KClass& a);

}  // namespace corrclass
