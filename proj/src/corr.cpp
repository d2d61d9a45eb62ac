#include "corrclass/corr.hpp"

#include <sstream>

#include "corrclass/errors.hpp"

namespace corrclass {

const char* morph_class_name(MorphClass c) {
    switch (c) {
        case MorphClass::Proper: return "proper";
        case MorphClass::Smooth: return "smooth";
        case MorphClass::Lci: return "lci";
        case MorphClass::Iso: return "iso";
    }
    return "?";
}

bool satisfies(const Morphism& f, MorphClass c) {
    switch (c) {
        case MorphClass::Proper: return f.classify().is_proper;
        case MorphClass::Smooth: return f.classify().is_smooth;
        case MorphClass::Lci: return true;  // every model morphism is l.c.i.
        case MorphClass::Iso: return f.classify().is_iso;
    }
    return false;
}

Correspondence::Correspondence(Morphism left, Morphism right, MorphClass left_class,
                               MorphClass right_class)
    : left_(std::move(left)),
      right_(std::move(right)),
      left_class_(left_class),
      right_class_(right_class) {
    if (left_.source() != right_.source())
        throw structural_error("Correspondence: legs must share an apex");
    if (!satisfies(left_, left_class_))
        throw unsupported_leg_error(std::string("Correspondence: left leg is not ") +
                                    morph_class_name(left_class_));
    if (!satisfies(right_, right_class_))
        throw unsupported_leg_error(std::string("Correspondence: right leg is not ") +
                                    morph_class_name(right_class_));
}

Correspondence Correspondence::identity(const Space& x) {
    return Correspondence(Morphism::identity(x), Morphism::identity(x));
}

Correspondence Correspondence::proper_identity(const Morphism& f) {
    return Correspondence(f, Morphism::identity(f.source()));
}

Correspondence Correspondence::identity_smooth(const Morphism& g) {
    return Correspondence(Morphism::identity(g.source()), g);
}

Correspondence Correspondence::canonicalize() const {
    auto legs = canonicalize_apex({left_, right_});
    return Correspondence(legs[0], legs[1], left_class_, right_class_);
}

Correspondence Correspondence::permuted_apex(const std::vector<int>& order) const {
    const Space& m = apex();
    if (static_cast<int>(order.size()) != m.factor_count())
        throw structural_error("permuted_apex: arity mismatch");
    std::vector<int> new_pos(order.size());
    std::vector<int> dims;
    for (int p = 0; p < m.factor_count(); ++p) {
        new_pos[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;
        dims.push_back(m.factor_dim(order[static_cast<std::size_t>(p)]));
    }
    const Space new_apex{std::vector<int>(dims)};
    auto remap = [&](const Morphism& f) {
        std::vector<FactorAssignment> a;
        for (const FactorAssignment& fa : f.assignment())
            a.push_back(fa.is_constant() ? fa
                                         : FactorAssignment::pulled(
                                               new_pos[static_cast<std::size_t>(fa.source_factor)]));
        return Morphism(new_apex, f.target(), std::move(a));
    };
    return Correspondence(remap(left_), remap(right_), left_class_, right_class_);
}

bool operator<(const Correspondence& a, const Correspondence& b) {
    if (a.left_ != b.left_) return a.left_ < b.left_;
    if (a.right_ != b.right_) return a.right_ < b.right_;
    if (a.left_class_ != b.left_class_) return a.left_class_ < b.left_class_;
    return a.right_class_ < b.right_class_;
}

std::string Correspondence::str() const {
    std::ostringstream os;
    os << source().str() << " <- " << apex().str() << " -> " << target().str()
       << " [left " << left_.str() << "; right " << right_.str() << "]";
    return os.str();
}

Correspondence corr_compose(const Correspondence& a, const Correspondence& b) {
    if (a.target() != b.source())
        throw structural_error("corr_compose: middle objects do not match");
    if (!a.right().is_smooth())
        throw unsupported_leg_error(
            "corr_compose: the model fiber product needs a smooth right leg");
    const FiberSquare sq = fiber_product(a.right(), b.left());
    return Correspondence(compose_morphisms(sq.h_tilde, a.left()),
                          compose_morphisms(sq.g_tilde, b.right()), a.left_class(),
                          b.right_class())
        .canonicalize();
}

CorrSum CorrSum::of(const Correspondence& c, long coeff) {
    CorrSum s(c.source(), c.target());
    s.add(c, coeff);
    return s;
}

CorrSum& CorrSum::add(const Correspondence& c, long coeff) {
    if (c.source() != source_ || c.target() != target_)
        throw structural_error("CorrSum: endpoint mismatch");
    if (coeff == 0) return *this;
    const Correspondence key = c.canonicalize();
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

CorrSum operator+(const CorrSum& a, const CorrSum& b) {
    if (a.source_ != b.source_ || a.target_ != b.target_)
        throw structural_error("CorrSum: endpoint mismatch in add");
    CorrSum out(a);
    for (const auto& [c, n] : b.terms_) out.add(c, n);
    return out;
}

CorrSum operator-(const CorrSum& a, const CorrSum& b) {
    if (a.source_ != b.source_ || a.target_ != b.target_)
        throw structural_error("CorrSum: endpoint mismatch in sub");
    CorrSum out(a);
    for (const auto& [c, n] : b.terms_) out.add(c, -n);
    return out;
}

CorrSum CorrSum::scaled(long c) const {
    CorrSum out(source_, target_);
    if (c == 0) return out;
    for (const auto& [k, n] : terms_) out.terms_.emplace(k, n * c);
    return out;
}

std::string CorrSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, n] : terms_) {
        long mag = n < 0 ? -n : n;
        if (first) {
            if (n < 0) os << "-";
            first = false;
        } else {
            os << (n < 0 ? " - " : " + ");
        }
        if (mag != 1) os << mag << "*";
        os << "[" << c.str() << "]";
    }
    return os.str();
}

CorrSum corrsum_compose(const CorrSum& a, const CorrSum& b) {
    if (a.target() != b.source())
        throw structural_error("corrsum_compose: middle objects do not match");
    CorrSum out(a.source(), b.target());
    for (const auto& [ca, na] : a.terms())
        for (const auto& [cb, nb] : b.terms()) out.add(corr_compose(ca, cb), na * nb);
    return out;
}

const char* functor_name(FunctorId f) {
    switch (f) {
        case FunctorId::G0: return "G0";
        case FunctorId::HTodd: return "HTodd";
        case FunctorId::F: return "F";
        case FunctorId::HChern: return "HChern";
        case FunctorId::K0V: return "K0V";
        case FunctorId::HHirz: return "HHirz";
    }
    return "?";
}

FunctorId functor_from_name(const std::string& name) {
    if (name == "G0") return FunctorId::G0;
    if (name == "HTodd") return FunctorId::HTodd;
    if (name == "F") return FunctorId::F;
    if (name == "HChern") return FunctorId::HChern;
    if (name == "K0V") return FunctorId::K0V;
    if (name == "HHirz") return FunctorId::HHirz;
    throw structural_error("unknown functor '" + name + "'");
}

bool values_equal(const FunctorValue& a, const FunctorValue& b) { return a == b; }

FunctorValue add_values(const FunctorValue& a, const FunctorValue& b) {
    if (a.index() != b.index()) throw structural_error("add_values: mixed value kinds");
    if (std::holds_alternative<RingElement>(a))
        return std::get<RingElement>(a) + std::get<RingElement>(b);
    if (std::holds_alternative<KClass>(a)) return std::get<KClass>(a) + std::get<KClass>(b);
    if (std::holds_alternative<ConstructibleFn>(a))
        return std::get<ConstructibleFn>(a) + std::get<ConstructibleFn>(b);
    return std::get<MotivicClass>(a) + std::get<MotivicClass>(b);
}

FunctorValue scale_value(const FunctorValue& v, long c) {
    if (std::holds_alternative<RingElement>(v))
        return std::get<RingElement>(v).scaled(YPoly(c));
    if (std::holds_alternative<KClass>(v)) return std::get<KClass>(v).scaled(YPoly(c));
    if (std::holds_alternative<ConstructibleFn>(v)) return std::get<ConstructibleFn>(v).scaled(c);
    return std::get<MotivicClass>(v).scaled(c);
}

std::string value_str(const FunctorValue& v) {
    if (std::holds_alternative<RingElement>(v)) return std::get<RingElement>(v).str();
    if (std::holds_alternative<KClass>(v)) return std::get<KClass>(v).str();
    if (std::holds_alternative<ConstructibleFn>(v)) return std::get<ConstructibleFn>(v).str();
    return std::get<MotivicClass>(v).str();
}

std::vector<FunctorValue> functor_basis(FunctorId fid, const Space& x) {
    std::vector<FunctorValue> basis;
    switch (fid) {
        case FunctorId::G0:
            for (const auto& e : x.k_ring().monomial_basis())
                basis.emplace_back(KClass::t_monomial(x, e));
            break;
        case FunctorId::HTodd:
        case FunctorId::HChern:
        case FunctorId::HHirz: {
            const NilpotentRing ring = x.chow_ring();
            for (const auto& e : ring.monomial_basis()) {
                std::map<std::vector<int>, YPoly> t;
                t.emplace(e, YPoly(1));
                basis.emplace_back(RingElement::from_terms(ring, std::move(t)));
            }
            break;
        }
        case FunctorId::F:
            for (const Subvariety& z : subvariety_basis(x))
                basis.emplace_back(ConstructibleFn::indicator(z));
            break;
        case FunctorId::K0V:
            for (const Subvariety& z : subvariety_basis(x))
                basis.emplace_back(MotivicClass::of_subvariety(z));
            break;
    }
    return basis;
}

std::vector<std::string> functor_basis_labels(FunctorId fid, const Space& x) {
    std::vector<std::string> labels;
    for (const FunctorValue& v : functor_basis(fid, x)) labels.push_back(value_str(v));
    return labels;
}

namespace {

RingElement homology_action(GenusKind kind, const Correspondence& c, const RingElement& v) {
    const RingElement pulled = chow_pullback(c.right(), v);
    const RingElement twist = relative_genus(kind, c.right());
    return chow_pushforward(c.left(), twist * pulled);
}

void require_smooth_right(const Correspondence& c, const char* what) {
    if (!c.right().is_smooth())
        throw unsupported_leg_error(std::string(what) + ": requires a smooth right leg");
}

}  // namespace

FunctorValue apply_corr(FunctorId fid, const Correspondence& c, const FunctorValue& v) {
    switch (fid) {
        case FunctorId::G0:
            // k_pullback along an embedding is the Koszul-exact Gysin map,
            // so proper-l.c.i. correspondences are admitted as well.
            return k_pushforward(c.left(), k_pullback(c.right(), std::get<KClass>(v)));
        case FunctorId::HTodd:
            return homology_action(GenusKind::Todd, c, std::get<RingElement>(v));
        case FunctorId::HChern:
            require_smooth_right(c, "HChern");
            return homology_action(GenusKind::Chern, c, std::get<RingElement>(v));
        case FunctorId::HHirz:
            require_smooth_right(c, "HHirz");
            return homology_action(GenusKind::Hirzebruch, c, std::get<RingElement>(v));
        case FunctorId::F:
            return cf_pushforward(c.left(), cf_pullback(c.right(), std::get<ConstructibleFn>(v)));
        case FunctorId::K0V:
            return mot_pushforward(c.left(), mot_pullback(c.right(), std::get<MotivicClass>(v)));
    }
    throw structural_error("apply_corr: unknown functor");
}

FunctorValue apply_corr_sum(FunctorId fid, const CorrSum& a, const FunctorValue& v) {
    FunctorValue acc;
    bool first = true;
    for (const auto& [c, n] : a.terms()) {
        FunctorValue img = scale_value(apply_corr(fid, c, v), n);
        acc = first ? img : add_values(acc, img);
        first = false;
    }
    if (first) {
        // The zero operator: produce the zero value of the codomain group.
        const Space& x = a.source();
        switch (fid) {
            case FunctorId::G0: return KClass::zero(x);
            case FunctorId::HTodd:
            case FunctorId::HChern:
            case FunctorId::HHirz: return RingElement(x.chow_ring());
            case FunctorId::F: return ConstructibleFn(x);
            case FunctorId::K0V: return MotivicClass(x);
        }
    }
    return acc;
}

LinearOperator::LinearOperator(FunctorId fid, Space domain_space, Space codomain_space,
                               std::vector<FunctorValue> columns)
    : fid_(fid),
      domain_space_(std::move(domain_space)),
      codomain_space_(std::move(codomain_space)),
      columns_(std::move(columns)) {}

namespace {

std::vector<YPoly> coordinates(FunctorId fid, const Space& x, const FunctorValue& v) {
    std::vector<YPoly> out;
    switch (fid) {
        case FunctorId::G0: {
            const KClass& k = std::get<KClass>(v);
            for (const auto& e : x.k_ring().monomial_basis()) out.push_back(k.element().coeff(e));
            break;
        }
        case FunctorId::HTodd:
        case FunctorId::HChern:
        case FunctorId::HHirz: {
            const RingElement& r = std::get<RingElement>(v);
            for (const auto& e : x.chow_ring().monomial_basis()) out.push_back(r.coeff(e));
            break;
        }
        case FunctorId::F: {
            const ConstructibleFn& f = std::get<ConstructibleFn>(v);
            for (const Subvariety& z : subvariety_basis(x)) {
                auto it = f.terms().find(z);
                out.push_back(YPoly(it == f.terms().end() ? 0 : it->second));
            }
            break;
        }
        case FunctorId::K0V:
            throw structural_error("coordinates: K0V values live in a free module on "
                                   "motivic generators; compare columns instead");
    }
    return out;
}

}  // namespace

std::vector<std::vector<YPoly>> LinearOperator::matrix() const {
    if (!has_matrix())
        throw structural_error("LinearOperator::matrix: not defined for K0V");
    const std::size_t rows = functor_basis(fid_, codomain_space_).size();
    std::vector<std::vector<YPoly>> m(rows, std::vector<YPoly>(columns_.size(), YPoly()));
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        const std::vector<YPoly> col = coordinates(fid_, codomain_space_, columns_[j]);
        for (std::size_t i = 0; i < rows; ++i) m[i][j] = col[i];
    }
    return m;
}

bool operator==(const LinearOperator& a, const LinearOperator& b) {
    return a.fid_ == b.fid_ && a.domain_space_ == b.domain_space_ &&
           a.codomain_space_ == b.codomain_space_ && a.columns_ == b.columns_;
}

std::string LinearOperator::str() const {
    std::ostringstream os;
    os << functor_name(fid_) << " operator " << domain_space_.str() << " => "
       << codomain_space_.str() << " [";
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (j) os << "; ";
        os << value_str(columns_[j]);
    }
    os << "]";
    return os.str();
}

LinearOperator corr_operator(FunctorId fid, const CorrSum& a) {
    std::vector<FunctorValue> columns;
    for (const FunctorValue& v : functor_basis(fid, a.target()))
        columns.push_back(apply_corr_sum(fid, a, v));
    return LinearOperator(fid, a.target(), a.source(), std::move(columns));
}

LinearOperator corr_operator(FunctorId fid, const Correspondence& c) {
    return corr_operator(fid, CorrSum::of(c));
}

std::string matrix_str(const std::vector<std::vector<YPoly>>& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            if (j) os << ", ";
            os << m[i][j].str();
        }
    }
    os << "]";
    return os.str();
}

std::vector<std::vector<YPoly>> matrix_product(const std::vector<std::vector<YPoly>>& a,
                                               const std::vector<std::vector<YPoly>>& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t n = a.size(), k = b.size(), m = b.front().size();
    for (const auto& row : a)
        if (row.size() != k) throw structural_error("matrix_product: shape mismatch");
    std::vector<std::vector<YPoly>> out(n, std::vector<YPoly>(m, YPoly()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            YPoly acc;
            for (std::size_t u = 0; u < k; ++u) acc += a[i][u] * b[u][j];
            out[i][j] = acc;
        }
    return out;
}

const char* transform_name(TransformId t) {
    switch (t) {
        case TransformId::TdBfm: return "td";
        case TransformId::MacChern: return "chern";
        case TransformId::HirzebruchTy: return "hirzebruch";
    }
    return "?";
}

FunctorId transform_source(TransformId t) {
    switch (t) {
        case TransformId::TdBfm: return FunctorId::G0;
        case TransformId::MacChern: return FunctorId::F;
        case TransformId::HirzebruchTy: return FunctorId::K0V;
    }
    throw structural_error("transform_source: unknown transform");
}

FunctorId transform_target(TransformId t) {
    switch (t) {
        case TransformId::TdBfm: return FunctorId::HTodd;
        case TransformId::MacChern: return FunctorId::HChern;
        case TransformId::HirzebruchTy: return FunctorId::HHirz;
    }
    throw structural_error("transform_target: unknown transform");
}

FunctorValue apply_transform(TransformId t, const FunctorValue& v) {
    switch (t) {
        case TransformId::TdBfm: return td_bfm(std::get<KClass>(v));
        case TransformId::MacChern: return mac_chern(std::get<ConstructibleFn>(v));
        case TransformId::HirzebruchTy: return hirzebruch_ty(std::get<MotivicClass>(v));
    }
    throw structural_error("apply_transform: unknown transform");
}

CheckResult check_functoriality(FunctorId fid, const CorrSum& a, const CorrSum& b) {
    if (a.target() != b.source())
        throw structural_error("check_functoriality: non-composable pair");
    const CorrSum ab = corrsum_compose(a, b);
    const auto basis = functor_basis(fid, b.target());
    const auto labels = functor_basis_labels(fid, b.target());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const FunctorValue lhs = apply_corr_sum(fid, ab, basis[j]);
        const FunctorValue rhs = apply_corr_sum(fid, a, apply_corr_sum(fid, b, basis[j]));
        if (!values_equal(lhs, rhs)) {
            return CheckResult{false, "basis " + labels[j] + ": composed -> " + value_str(lhs) +
                                          ", factored -> " + value_str(rhs)};
        }
    }
    // The finite-rank functors are additionally checked as exact matrix
    // products over the canonical bases.
    if (fid != FunctorId::K0V) {
        const auto m_ab = corr_operator(fid, ab).matrix();
        const auto m_a = corr_operator(fid, a).matrix();
        const auto m_b = corr_operator(fid, b).matrix();
        const auto prod = matrix_product(m_a, m_b);
        if (m_ab != prod)
            return CheckResult{false, "matrix mismatch: composed " + matrix_str(m_ab) +
                                          " vs product " + matrix_str(prod)};
    }
    return CheckResult{};
}

CheckResult check_naturality(TransformId t, const CorrSum& a) {
    const FunctorId src = transform_source(t), tgt = transform_target(t);
    const auto basis = functor_basis(src, a.target());
    const auto labels = functor_basis_labels(src, a.target());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const FunctorValue lhs = apply_transform(t, apply_corr_sum(src, a, basis[j]));
        const FunctorValue rhs = apply_corr_sum(tgt, a, apply_transform(t, basis[j]));
        if (!values_equal(lhs, rhs)) {
            return CheckResult{false, std::string("transform ") + transform_name(t) + ", basis " +
                                          labels[j] + ": tau-first -> " + value_str(rhs) +
                                          ", functor-first -> " + value_str(lhs)};
        }
    }
    return CheckResult{};
}

CheckResult check_naturality_without_twist(TransformId t, const CorrSum& a) {
    const FunctorId src = transform_source(t);
    const auto basis = functor_basis(src, a.target());
    const auto labels = functor_basis_labels(src, a.target());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const FunctorValue lhs = apply_transform(t, apply_corr_sum(src, a, basis[j]));
        // Untwisted homology action: push o pull with no relative tangent
        // class. Deliberately wrong whenever the right leg has fibers.
        RingElement rhs(a.source().chow_ring());
        const RingElement tau = std::get<RingElement>(apply_transform(t, basis[j]));
        for (const auto& [c, n] : a.terms()) {
            rhs += chow_pushforward(c.left(), chow_pullback(c.right(), tau)).scaled(YPoly(n));
        }
        if (!values_equal(lhs, FunctorValue(rhs))) {
            return CheckResult{false, std::string("transform ") + transform_name(t) + ", basis " +
                                          labels[j] + ": twisted -> " + value_str(lhs) +
                                          ", untwisted -> " + rhs.str()};
        }
    }
    return CheckResult{};
}

}  // namespace corrclass
