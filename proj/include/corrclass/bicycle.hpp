#pragma once

#include "corrclass/corr.hpp"

namespace corrclass {

/// Bigrade of a cobordism bicycle: n is the relative dimension of the
/// smooth right leg, r the bundle rank.
struct Bigrade {
    int n = 0;
    int r = 0;
    friend bool operator==(const Bigrade&, const Bigrade&) = default;
    friend auto operator<=>(const Bigrade&, const Bigrade&) = default;
};

/// A cobordism bicycle of a vector bundle: a proper-smooth correspondence
/// carrying a line-bundle sum on its apex.
class Bicycle {
  public:
    Bicycle() = default;
    Bicycle(Correspondence corr, VectorBundle bundle);
    Bicycle(Morphism left, Morphism right, VectorBundle bundle);

    /// [X <- X -> X; O^rank].
    static Bicycle identity(const Space& x, int rank = 0);

    const Correspondence& corr() const { return corr_; }
    const VectorBundle& bundle() const { return bundle_; }
    const Space& source() const { return corr_.source(); }
    const Space& target() const { return corr_.target(); }
    const Space& apex() const { return corr_.apex(); }
    Bigrade grade() const;

    Bicycle canonicalize() const;

    friend bool operator==(const Bicycle& a, const Bicycle& b) {
        return a.corr_ == b.corr_ && a.bundle_ == b.bundle_;
    }
    friend bool operator!=(const Bicycle& a, const Bicycle& b) { return !(a == b); }
    friend bool operator<(const Bicycle& a, const Bicycle& b);

    std::string str() const;

  private:
    Correspondence corr_;
    VectorBundle bundle_;  // on the apex
};

enum class BicycleProduct { Whitney, Tensor };

/// Composes the correspondences through the fiber product and combines
/// the pulled-back bundles by direct sum (whitney) or tensor.
Bicycle bicycle_product(BicycleProduct mode, const Bicycle& a, const Bicycle& b);

enum class PushSide { LeftProper, RightSmooth };
enum class PullSide { LeftSmooth, RightProper };

/// Pushforwards: compose the named leg with f.
Bicycle bicycle_push(PushSide side, const Morphism& f, const Bicycle& b);
/// Pullbacks: base-change the named leg along f.
Bicycle bicycle_pull(PullSide side, const Morphism& f, const Bicycle& b);

/// f_{**} for proper-and-smooth f: both legs composed with f; the first
/// grade grows by dim f.
Bicycle bicycle_double_push(const Morphism& f, const Bicycle& b);
/// f^{**}: the two successive pullbacks (right-proper then left-smooth),
/// computed literally through both model fiber squares.
Bicycle bicycle_double_pull(const Morphism& f, const Bicycle& b);

/// An element of M_{*,*}(X,Y)^+: Z-linear combination of canonical
/// bicycles; grade buckets are derivable from the keys.
class BicycleSum {
  public:
    BicycleSum() = default;
    BicycleSum(Space source, Space target)
        : source_(std::move(source)), target_(std::move(target)) {}

    static BicycleSum of(const Bicycle& b, long coeff = 1);

    const Space& source() const { return source_; }
    const Space& target() const { return target_; }
    const std::map<Bicycle, long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Terms bucketed by bigrade.
    std::map<Bigrade, BicycleSum> by_grade() const;

    BicycleSum& add(const Bicycle& b, long coeff);
    friend BicycleSum operator+(const BicycleSum& a, const BicycleSum& b);
    friend BicycleSum operator-(const BicycleSum& a, const BicycleSum& b);
    BicycleSum scaled(long c) const;

    friend bool operator==(const BicycleSum& a, const BicycleSum& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const BicycleSum& a, const BicycleSum& b) { return !(a == b); }

    std::string str() const;

  private:
    Space source_;
    Space target_;
    std::map<Bicycle, long> terms_;
};

/// Bilinear extension of bicycle_product.
BicycleSum bicycle_sum_product(BicycleProduct mode, const BicycleSum& a, const BicycleSum& b);

/// The six bicycle functor evaluations. Hcl twists by cl1(E); Hcl1Cl2 by
/// cl1(T_s) and cl2(E); Hch/HclCh use the Chern character of E; G0tensor
/// acts on K-classes by [E] (x) s^*; HtdCh is the td/ch instance.
struct BicycleFunctor {
    enum class Kind { Hcl, Hch, Hcl1Cl2, HclCh, G0tensor, HtdCh };
    Kind kind = Kind::HtdCh;
    GenusKind cl1 = GenusKind::Todd;
    GenusKind cl2 = GenusKind::Chern;

    static BicycleFunctor hcl(GenusKind cl) { return {Kind::Hcl, cl, cl}; }
    static BicycleFunctor hch() { return {Kind::Hch}; }
    static BicycleFunctor hcl1cl2(GenusKind c1, GenusKind c2) { return {Kind::Hcl1Cl2, c1, c2}; }
    static BicycleFunctor hclch(GenusKind cl) { return {Kind::HclCh, cl}; }
    static BicycleFunctor g0tensor() { return {Kind::G0tensor}; }
    static BicycleFunctor htdch() { return {Kind::HtdCh}; }

    /// The product this functor is covariant for.
    BicycleProduct product() const {
        return (kind == Kind::Hcl || kind == Kind::Hcl1Cl2) ? BicycleProduct::Whitney
                                                            : BicycleProduct::Tensor;
    }
    bool k_valued() const { return kind == Kind::G0tensor; }
    std::string name() const;
};

FunctorValue apply_bicycle(const BicycleFunctor& f, const Bicycle& b, const FunctorValue& v);
FunctorValue apply_bicycle_sum(const BicycleFunctor& f, const BicycleSum& a,
                               const FunctorValue& v);
LinearOperator bicycle_operator(const BicycleFunctor& f, const BicycleSum& a);

/// Covariance of `f` under its product on the pair (a, b).
CheckResult check_bicycle_covariance(const BicycleFunctor& f, const BicycleSum& a,
                                     const BicycleSum& b);

/// td naturality for bicycles:
/// td_bfm o G0tensor(b) == HtdCh(b) o td_bfm.
CheckResult check_bicycle_td_naturality(const BicycleSum& b);

/// Negative control: same identity with the td(T_s) twist dropped from
/// the homology side.
CheckResult check_bicycle_td_naturality_without_twist(const BicycleSum& b);

/// Conjugation squares for H^{cl1,cl2} under the double pushforward and
/// pullback of a proper-and-smooth f.
CheckResult check_double_push_square(GenusKind cl1, GenusKind cl2, const Morphism& f,
                                     const Bicycle& b);
CheckResult check_double_pull_square(GenusKind cl1, GenusKind cl2, const Morphism& f,
                                     const Bicycle& b);

/// The decomposition remark: [X <- V -> Y; E] equals
/// [X <- V] o_+ [V; E] o_+ [V -> Y] after canonicalization.
CheckResult check_decomposition(const Bicycle& b);

}  // namespace corrclass
