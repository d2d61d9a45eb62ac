#pragma once

#include <map>
#include <variant>

#include "corrclass/motivic.hpp"

namespace corrclass {

/// Predicates for the generic (M1, M2)-correspondence classes. Every model
/// morphism is proper and l.c.i.; Smooth and Iso are genuine restrictions.
enum class MorphClass { Proper, Smooth, Lci, Iso };

const char* morph_class_name(MorphClass c);
bool satisfies(const Morphism& f, MorphClass c);

/// A correspondence X <- M -> Y with class-tagged legs (default: proper
/// left, smooth right). Construction validates the tags; `canonicalize`
/// produces the representative with canonically relabeled apex factors.
class Correspondence {
  public:
    Correspondence() = default;
    Correspondence(Morphism left, Morphism right, MorphClass left_class = MorphClass::Proper,
                   MorphClass right_class = MorphClass::Smooth);

    static Correspondence identity(const Space& x);
    /// X <- Y -> Y with f proper (a plain morphism, read backwards).
    static Correspondence proper_identity(const Morphism& f);
    /// X <- X -> Y with g on the right.
    static Correspondence identity_smooth(const Morphism& g);

    const Space& source() const { return left_.target(); }
    const Space& target() const { return right_.target(); }
    const Space& apex() const { return left_.source(); }
    const Morphism& left() const { return left_; }
    const Morphism& right() const { return right_; }
    MorphClass left_class() const { return left_class_; }
    MorphClass right_class() const { return right_class_; }

    Correspondence canonicalize() const;
    /// Applies a permutation (new -> old) to the apex factors; the result
    /// is isomorphic to *this. For tests of isomorphism invariance.
    Correspondence permuted_apex(const std::vector<int>& order) const;

    friend bool operator==(const Correspondence& a, const Correspondence& b) {
        return a.left_ == b.left_ && a.right_ == b.right_ &&
               a.left_class_ == b.left_class_ && a.right_class_ == b.right_class_;
    }
    friend bool operator!=(const Correspondence& a, const Correspondence& b) {
        return !(a == b);
    }
    friend bool operator<(const Correspondence& a, const Correspondence& b);

    /// "P(1) <- P(1,2) -> P(2)" with leg tables.
    std::string str() const;

  private:
    Morphism left_;   // apex -> X
    Morphism right_;  // apex -> Y
    MorphClass left_class_ = MorphClass::Proper;
    MorphClass right_class_ = MorphClass::Smooth;
};

/// Composition through the model fiber product: requires the right leg of
/// the first factor to be smooth. Result is canonicalized.
Correspondence corr_compose(const Correspondence& a, const Correspondence& b);

/// An element of Corr(X,Y)^+: a Z-linear combination of canonical
/// correspondences.
class CorrSum {
  public:
    CorrSum() = default;
    CorrSum(Space source, Space target)
        : source_(std::move(source)), target_(std::move(target)) {}

    static CorrSum of(const Correspondence& c, long coeff = 1);

    const Space& source() const { return source_; }
    const Space& target() const { return target_; }
    const std::map<Correspondence, long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    CorrSum& add(const Correspondence& c, long coeff);
    friend CorrSum operator+(const CorrSum& a, const CorrSum& b);
    friend CorrSum operator-(const CorrSum& a, const CorrSum& b);
    CorrSum scaled(long c) const;

    friend bool operator==(const CorrSum& a, const CorrSum& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const CorrSum& a, const CorrSum& b) { return !(a == b); }

    std::string str() const;

  private:
    Space source_;
    Space target_;
    std::map<Correspondence, long> terms_;
};

/// Bilinear extension of corr_compose.
CorrSum corrsum_compose(const CorrSum& a, const CorrSum& b);

/// The six functors of the correspondence category.
enum class FunctorId { G0, HTodd, F, HChern, K0V, HHirz };

const char* functor_name(FunctorId f);
FunctorId functor_from_name(const std::string& name);

/// A value of one of the functors: a Chow class (HTodd/HChern/HHirz), a
/// K-class (G0), a constructible function (F) or a motivic class (K0V).
using FunctorValue = std::variant<RingElement, KClass, ConstructibleFn, MotivicClass>;

bool values_equal(const FunctorValue& a, const FunctorValue& b);
FunctorValue add_values(const FunctorValue& a, const FunctorValue& b);
FunctorValue scale_value(const FunctorValue& v, long c);
std::string value_str(const FunctorValue& v);

/// The canonical basis of the functor's value group at `x` (monomials for
/// G0 and the homology functors, indicator/motivic generators for F and
/// K0V).
std::vector<FunctorValue> functor_basis(FunctorId fid, const Space& x);
std::vector<std::string> functor_basis_labels(FunctorId fid, const Space& x);

/// The action of a single correspondence on a functor value:
/// pushforward(left) after the (possibly twisted) pullback(right).
FunctorValue apply_corr(FunctorId fid, const Correspondence& c, const FunctorValue& v);

/// Z-linear extension over a CorrSum.
FunctorValue apply_corr_sum(FunctorId fid, const CorrSum& a, const FunctorValue& v);

/// The exact value of a functor on a CorrSum: one image column per
/// canonical basis vector of the value group at the target. Equality of
/// operators is column-wise equality. For the finite-rank functors
/// (everything but K0V) the columns coordinatize to an exact matrix.
class LinearOperator {
  public:
    LinearOperator() = default;
    LinearOperator(FunctorId fid, Space domain_space, Space codomain_space,
                   std::vector<FunctorValue> columns);

    FunctorId functor_id() const { return fid_; }
    /// Space of the hom-source (the correspondence target Y; the operator
    /// maps F(Y) -> F(X)).
    const Space& domain_space() const { return domain_space_; }
    const Space& codomain_space() const { return codomain_space_; }
    const std::vector<FunctorValue>& columns() const { return columns_; }

    bool has_matrix() const { return fid_ != FunctorId::K0V; }
    /// Rows x columns of exact entries over the canonical bases. Throws
    /// for K0V (free module on motivic generators; compare columns).
    std::vector<std::vector<YPoly>> matrix() const;

    friend bool operator==(const LinearOperator& a, const LinearOperator& b);
    friend bool operator!=(const LinearOperator& a, const LinearOperator& b) {
        return !(a == b);
    }

    std::string str() const;

  private:
    FunctorId fid_ = FunctorId::G0;
    Space domain_space_;
    Space codomain_space_;
    std::vector<FunctorValue> columns_;
};

LinearOperator corr_operator(FunctorId fid, const CorrSum& a);
LinearOperator corr_operator(FunctorId fid, const Correspondence& c);

/// Exact product of coordinate matrices (codomain basis of b must be the
/// domain basis of a).
std::vector<std::vector<YPoly>> matrix_product(const std::vector<std::vector<YPoly>>& a,
                                               const std::vector<std::vector<YPoly>>& b);

/// "[row; row; ...]" rendering for reports and witnesses.
std::string matrix_str(const std::vector<std::vector<YPoly>>& m);

/// The three class transformations the engine verifies.
enum class TransformId { TdBfm, MacChern, HirzebruchTy };

const char* transform_name(TransformId t);
FunctorId transform_source(TransformId t);
FunctorId transform_target(TransformId t);
/// tau_X applied to a value of the source functor.
FunctorValue apply_transform(TransformId t, const FunctorValue& v);

/// Structured result of a single identity check; `witness` is filled on
/// failure with the offending basis label and both sides.
struct CheckResult {
    bool pass = true;
    std::string witness;
};

/// corr_operator(F, a o b) == corr_operator(F, a) * corr_operator(F, b),
/// column-wise and (where defined) as exact matrices.
CheckResult check_functoriality(FunctorId fid, const CorrSum& a, const CorrSum& b);

/// tau_X o F_src(a) == F_tgt(a) o tau_Y on the canonical basis.
CheckResult check_naturality(TransformId t, const CorrSum& a);

/// Negative-control variant: evaluates the homology side with the
/// relative-tangent twist omitted. A correct engine must FAIL this check
/// on correspondences with a non-trivial smooth right leg.
CheckResult check_naturality_without_twist(TransformId t, const CorrSum& a);

}  // namespace corrclass
