#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "corrclass/ring.hpp"

namespace corrclass {

/// A finite product of projective spaces P^{n_1} x ... x P^{n_k}. Factor
/// order is part of the identity; k = 0 is the point.
class Space {
  public:
    Space() = default;
    explicit Space(std::vector<int> dims);

    static Space point() { return Space(); }

    int factor_count() const { return static_cast<int>(dims_.size()); }
    int factor_dim(int i) const { return dims_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& dims() const { return dims_; }
    int dim() const;
    bool is_point() const { return dims_.empty(); }

    /// Q[h_i]/(h_i^{n_i+1}).
    NilpotentRing chow_ring() const;
    /// Q[t_i]/(t_i^{n_i+1}), t_i = 1 - [O_i(-1)].
    NilpotentRing k_ring() const;

    friend bool operator==(const Space& a, const Space& b) { return a.dims_ == b.dims_; }
    friend bool operator!=(const Space& a, const Space& b) { return !(a == b); }
    friend bool operator<(const Space& a, const Space& b) { return a.dims_ < b.dims_; }

    /// "P(1,2)"; "P()" for the point.
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Space& s);

  private:
    std::vector<int> dims_;
};

/// Per-target-factor assignment of a model morphism: the factor is either
/// pulled from a source factor through the canonical linear embedding
/// P^{n} into the first coordinates of P^{m} (n <= m), or constant at the
/// canonical base point [1:0:...:0].
struct FactorAssignment {
    static constexpr int kConstant = -1;
    int source_factor = kConstant;

    bool is_constant() const { return source_factor == kConstant; }
    static FactorAssignment constant() { return FactorAssignment{}; }
    static FactorAssignment pulled(int i) { return FactorAssignment{i}; }

    friend bool operator==(const FactorAssignment&, const FactorAssignment&) = default;
    friend auto operator<=>(const FactorAssignment&, const FactorAssignment&) = default;
};

struct MorphismClassification {
    bool is_proper = true;  // every model object is complete
    bool is_smooth = false;
    bool is_iso = false;
    std::optional<int> relative_dimension;  // dim(source) - dim(target), smooth maps only
};

/// A morphism between products of projective spaces, given combinatorially
/// by one assignment per target factor. Source factors not pulled by any
/// target factor are projected away. The class is closed under composition
/// and under the fiber products the composition law needs; every member is
/// proper and l.c.i.
class Morphism {
  public:
    Morphism() = default;
    Morphism(Space source, Space target, std::vector<FactorAssignment> assignment);

    static Morphism identity(const Space& x);
    /// Projection of `source` onto the listed factors (in the given order).
    static Morphism projection(const Space& source, const std::vector<int>& kept_factors);
    /// The unique morphism to the point.
    static Morphism to_point(const Space& source);
    /// Permutation morphism: target factor j is pulled from source factor
    /// perm[j] (dims must match).
    static Morphism permutation(const Space& source, const std::vector<int>& perm);

    const Space& source() const { return source_; }
    const Space& target() const { return target_; }
    const std::vector<FactorAssignment>& assignment() const { return assign_; }

    /// True when source factor i is pulled by some target factor.
    bool factor_used(int i) const;
    /// The target factor pulling source factor i, or -1.
    int pulling_target(int i) const;

    MorphismClassification classify() const;
    bool is_smooth() const { return classify().is_smooth; }
    bool is_iso() const { return classify().is_iso; }

    friend bool operator==(const Morphism& a, const Morphism& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.assign_ == b.assign_;
    }
    friend bool operator!=(const Morphism& a, const Morphism& b) { return !(a == b); }
    friend bool operator<(const Morphism& a, const Morphism& b);

    /// "P(1,2) -> P(2) { t1 <- s2 }".
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Morphism& f);

  private:
    Space source_;
    Space target_;
    std::vector<FactorAssignment> assign_;  // one entry per target factor
};

/// g o f for f: X -> Y, g: Y -> Z.
Morphism compose_morphisms(const Morphism& f, const Morphism& g);

/// Fiber product against a smooth leg: for smooth g: M -> Y and arbitrary
/// h: N -> Y, returns W together with the pulled-back legs
///   h_tilde: W -> M   (the base change of h; proper)
///   g_tilde: W -> N   (the base change of g; smooth)
/// satisfying g o h_tilde == h o g_tilde exactly.
struct FiberSquare {
    Space w;
    Morphism h_tilde;  // W -> M
    Morphism g_tilde;  // W -> N
};
FiberSquare fiber_product(const Morphism& g, const Morphism& h);

/// Ring-homomorphism pullback on Chow classes: h_j -> h_{sigma(j)} for
/// pulled factors, h_j -> 0 for constant factors.
RingElement chow_pullback(const Morphism& f, const RingElement& c);

/// Proper pushforward on Chow classes, through the canonical factorization
/// (permutation, then projection integrating dropped factors, then
/// per-factor embeddings and point inclusions).
RingElement chow_pushforward(const Morphism& f, const RingElement& c);

/// Degree: the coefficient of the top monomial prod h_i^{n_i}.
YPoly integrate(const Space& x, const RingElement& c);

/// Rewrites a family of morphisms out of a common apex by the canonical
/// relabeling of the apex factors: factors are stably sorted by
/// (dimension, pulling target in each leg, unused last). Isomorphic
/// configurations (differing by an apex factor permutation) map to one
/// canonical form; the operation is idempotent. All legs must have the
/// same source. `new_pos` records where each old factor went.
struct ApexRelabeling {
    std::vector<Morphism> legs;
    std::vector<int> new_pos;  // new_pos[old index] = new index
};
ApexRelabeling canonicalize_apex_with_permutation(std::vector<Morphism> legs);
std::vector<Morphism> canonicalize_apex(std::vector<Morphism> legs);

/// A finite direct sum of line bundles O(d_1,...,d_k) on `base`, stored as
/// the multiset of multidegree vectors.
class VectorBundle {
  public:
    VectorBundle() = default;
    VectorBundle(Space base, std::vector<std::vector<int>> summands);

    static VectorBundle zero(const Space& base) { return VectorBundle(base, {}); }
    static VectorBundle line(const Space& base, std::vector<int> multidegree);
    static VectorBundle trivial(const Space& base, int rank);

    const Space& base() const { return base_; }
    int rank() const { return static_cast<int>(summands_.size()); }
    const std::vector<std::vector<int>>& summands() const { return summands_; }

    VectorBundle direct_sum(const VectorBundle& other) const;
    VectorBundle tensor(const VectorBundle& other) const;
    /// Pullback along f: W -> base: multidegree substitution.
    VectorBundle pulled_back(const Morphism& f) const;

    friend bool operator==(const VectorBundle& a, const VectorBundle& b) {
        return a.base_ == b.base_ && a.summands_ == b.summands_;
    }
    friend bool operator!=(const VectorBundle& a, const VectorBundle& b) { return !(a == b); }
    friend bool operator<(const VectorBundle& a, const VectorBundle& b);

    /// "O(1,0) + O(0,2)"; "0" for the rank-0 bundle.
    std::string str() const;

  private:
    Space base_;
    std::vector<std::vector<int>> summands_;  // sorted: canonical multiset order
};

/// The canonical product of linear subspaces P^{m_1} x ... x P^{m_k}
/// embedded in `ambient` factorwise onto the first coordinates.
class Subvariety {
  public:
    Subvariety() = default;
    Subvariety(Space ambient, std::vector<int> sub_dims);

    static Subvariety full(const Space& ambient);

    const Space& ambient() const { return ambient_; }
    const std::vector<int>& sub_dims() const { return sub_dims_; }
    Space abstract_space() const { return Space(sub_dims_); }
    int dim() const;
    /// The canonical embedding of the abstract space into the ambient one.
    Morphism embedding() const;

    friend bool operator==(const Subvariety& a, const Subvariety& b) {
        return a.ambient_ == b.ambient_ && a.sub_dims_ == b.sub_dims_;
    }
    friend bool operator!=(const Subvariety& a, const Subvariety& b) { return !(a == b); }
    friend bool operator<(const Subvariety& a, const Subvariety& b);

    /// "L(1,0) in P(2,1)".
    std::string str() const;

  private:
    Space ambient_;
    std::vector<int> sub_dims_;
};

}  // namespace corrclass
