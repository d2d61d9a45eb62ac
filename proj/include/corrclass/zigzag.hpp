#pragma once

#include "corrclass/corr.hpp"

namespace corrclass {

enum class ZigzagKind { ProSmooth, ProLci, SmoothObjects };

const char* zigzag_kind_name(ZigzagKind k);
ZigzagKind zigzag_kind_from_name(const std::string& name);

/// Does this zigzag kind admit evaluation by the given functor?
/// pro-smooth admits all six; pro-l.c.i. admits G0 and HTodd (Todd with
/// the virtual relative tangent class on embedding legs).
bool zigzag_kind_admits(ZigzagKind k, FunctorId fid);

/// A finite sequence of correspondences X = X_0 <- M_1 -> X_1 ... -> X_k.
/// The empty zigzag at X is admitted as the length-0 identity.
class Zigzag {
  public:
    Zigzag() = default;
    /// Empty zigzag at x.
    Zigzag(ZigzagKind kind, const Space& x);
    Zigzag(ZigzagKind kind, std::vector<Correspondence> links);

    ZigzagKind kind() const { return kind_; }
    int length() const { return static_cast<int>(links_.size()); }
    const std::vector<Correspondence>& links() const { return links_; }
    const Space& source() const { return links_.empty() ? endpoint_ : links_.front().source(); }
    const Space& target() const { return links_.empty() ? endpoint_ : links_.back().target(); }

    Zigzag canonicalize() const;

    friend bool operator==(const Zigzag& a, const Zigzag& b) {
        return a.kind_ == b.kind_ && a.links_ == b.links_ && a.endpoint_ == b.endpoint_;
    }
    friend bool operator!=(const Zigzag& a, const Zigzag& b) { return !(a == b); }
    friend bool operator<(const Zigzag& a, const Zigzag& b);

    std::string str() const;

  private:
    ZigzagKind kind_ = ZigzagKind::ProSmooth;
    std::vector<Correspondence> links_;
    Space endpoint_;  // meaningful only for the empty zigzag
};

/// Juxtaposition: concatenation of link sequences; lengths add; kinds must
/// agree and endpoints must match.
Zigzag zigzag_juxtapose(const Zigzag& a, const Zigzag& b);

/// An element of Zigzag(X,Y)^+ = directsum_k Zigzag_k(X,Y)^+.
class ZigzagSum {
  public:
    ZigzagSum() = default;
    ZigzagSum(Space source, Space target)
        : source_(std::move(source)), target_(std::move(target)) {}

    static ZigzagSum of(const Zigzag& z, long coeff = 1);

    const Space& source() const { return source_; }
    const Space& target() const { return target_; }
    const std::map<Zigzag, long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::map<int, ZigzagSum> by_length() const;

    ZigzagSum& add(const Zigzag& z, long coeff);
    friend ZigzagSum operator+(const ZigzagSum& a, const ZigzagSum& b);
    friend ZigzagSum operator-(const ZigzagSum& a, const ZigzagSum& b);
    ZigzagSum scaled(long c) const;

    friend bool operator==(const ZigzagSum& a, const ZigzagSum& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const ZigzagSum& a, const ZigzagSum& b) { return !(a == b); }

    std::string str() const;

  private:
    Space source_;
    Space target_;
    std::map<Zigzag, long> terms_;
};

/// Bilinear extension of juxtaposition.
ZigzagSum zigzag_sum_juxtapose(const ZigzagSum& a, const ZigzagSum& b);

/// Threads a functor value through the links, last link first.
FunctorValue apply_zigzag(FunctorId fid, const Zigzag& z, const FunctorValue& v);
FunctorValue apply_zigzag_sum(FunctorId fid, const ZigzagSum& s, const FunctorValue& v);

/// The per-link-composed zigzag operator.
LinearOperator zigzag_operator(FunctorId fid, const ZigzagSum& s);
LinearOperator zigzag_operator(FunctorId fid, const Zigzag& z);

/// Poincare duality on a smooth complete model space: the identification
/// H^* ~ H_* (cap with the fundamental class). Kept as explicit maps so
/// the dot-pullback is computed through the composite definition.
RingElement poincare_dual(const Space& x, const RingElement& cohomology_class);
RingElement poincare_dual_inverse(const Space& x, const RingElement& homology_class);

/// The dot-pullback PD_source o f^* o PD_target^{-1} on homology
/// classes. Equals the cohomological pullback under the identification.
RingElement pullback_dot(const Morphism& f, const RingElement& homology_class);

/// The homology action of a correspondence of smooth spaces:
/// left_* o (right)-dot.
RingElement smooth_corr_action(const Correspondence& c, const RingElement& v);
LinearOperator smooth_corr_operator(const Correspondence& c);

/// Operator of a smooth zigzag: per-link smooth_corr_action composed.
LinearOperator smooth_zigzag_operator(const Zigzag& z);

/// Identity checks used by the suites.
CheckResult check_zigzag_covariance(FunctorId fid, const ZigzagSum& a, const ZigzagSum& b);
CheckResult check_zigzag_naturality(TransformId t, const ZigzagSum& s);
/// Agreement of zigzag evaluation with the composed correspondence where
/// all intermediate fiber products exist (pro-smooth only).
CheckResult check_zigzag_vs_composition(FunctorId fid, const Zigzag& z);
/// (g o f)-dot == f-dot o g-dot.
CheckResult check_pullback_dot_functoriality(const Morphism& f, const Morphism& g);
/// Isomorphic smooth correspondences (apex permutations) give the same
/// g_* f-dot operator.
CheckResult check_smooth_iso_invariance(const Correspondence& c, const std::vector<int>& perm);

}  // namespace corrclass
