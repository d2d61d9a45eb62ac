#include "corrclass/zigzag.hpp"

#include <sstream>

#include "corrclass/errors.hpp"

namespace corrclass {

const char* zigzag_kind_name(ZigzagKind k) {
    switch (k) {
        case ZigzagKind::ProSmooth: return "pro-smooth";
        case ZigzagKind::ProLci: return "pro-lci";
        case ZigzagKind::SmoothObjects: return "smooth";
    }
    return "?";
}

ZigzagKind zigzag_kind_from_name(const std::string& name) {
    if (name == "pro-smooth") return ZigzagKind::ProSmooth;
    if (name == "pro-lci") return ZigzagKind::ProLci;
    if (name == "smooth") return ZigzagKind::SmoothObjects;
    throw structural_error("unknown zigzag kind '" + name + "'");
}

bool zigzag_kind_admits(ZigzagKind k, FunctorId fid) {
    switch (k) {
        case ZigzagKind::ProSmooth: return true;
        case ZigzagKind::ProLci: return fid == FunctorId::G0 || fid == FunctorId::HTodd;
        case ZigzagKind::SmoothObjects: return false;  // uses its own homology functor
    }
    return false;
}

namespace {

void validate_link(ZigzagKind kind, const Correspondence& c) {
    switch (kind) {
        case ZigzagKind::ProSmooth:
            if (!c.right().is_smooth())
                throw unsupported_leg_error("Zigzag: pro-smooth link needs a smooth right leg");
            break;
        case ZigzagKind::ProLci:
            break;  // every model morphism is proper and l.c.i.
        case ZigzagKind::SmoothObjects:
            break;  // every model space is smooth
    }
}

}  // namespace

Zigzag::Zigzag(ZigzagKind kind, const Space& x) : kind_(kind), endpoint_(x) {}

Zigzag::Zigzag(ZigzagKind kind, std::vector<Correspondence> links)
    : kind_(kind), links_(std::move(links)) {
    if (links_.empty()) throw structural_error("Zigzag: use the endpoint constructor for length 0");
    for (std::size_t i = 0; i < links_.size(); ++i) {
        validate_link(kind_, links_[i]);
        if (i + 1 < links_.size() && links_[i].target() != links_[i + 1].source())
            throw structural_error("Zigzag: adjacent endpoints do not match");
    }
}

Zigzag Zigzag::canonicalize() const {
    if (links_.empty()) return *this;
    std::vector<Correspondence> links;
    for (const Correspondence& c : links_) links.push_back(c.canonicalize());
    return Zigzag(kind_, std::move(links));
}

bool operator<(const Zigzag& a, const Zigzag& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    if (a.endpoint_ != b.endpoint_) return a.endpoint_ < b.endpoint_;
    return a.links_ < b.links_;
}

std::string Zigzag::str() const {
    if (links_.empty()) return "empty at " + endpoint_.str();
    std::ostringstream os;
    for (std::size_t i = 0; i < links_.size(); ++i) {
        if (i) os << " ~ ";
        os << "[" << links_[i].str() << "]";
    }
    os << " kind " << zigzag_kind_name(kind_);
    return os.str();
}

Zigzag zigzag_juxtapose(const Zigzag& a, const Zigzag& b) {
    if (a.kind() != b.kind()) throw structural_error("zigzag_juxtapose: kind mismatch");
    if (a.target() != b.source()) throw structural_error("zigzag_juxtapose: endpoint mismatch");
    if (a.length() == 0) return b;
    if (b.length() == 0) return a;
    std::vector<Correspondence> links(a.links());
    links.insert(links.end(), b.links().begin(), b.links().end());
    return Zigzag(a.kind(), std::move(links));
}

ZigzagSum ZigzagSum::of(const Zigzag& z, long coeff) {
    ZigzagSum s(z.source(), z.target());
    s.add(z, coeff);
    return s;
}

ZigzagSum& ZigzagSum::add(const Zigzag& z, long coeff) {
    if (z.source() != source_ || z.target() != target_)
        throw structural_error("ZigzagSum: endpoint mismatch");
    if (coeff == 0) return *this;
    const Zigzag key = z.canonicalize();
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

std::map<int, ZigzagSum> ZigzagSum::by_length() const {
    std::map<int, ZigzagSum> out;
    for (const auto& [z, n] : terms_) {
        auto [it, inserted] = out.try_emplace(z.length(), source_, target_);
        it->second.add(z, n);
    }
    return out;
}

ZigzagSum operator+(const ZigzagSum& a, const ZigzagSum& b) {
    if (a.source_ != b.source_ || a.target_ != b.target_)
        throw structural_error("ZigzagSum: endpoint mismatch in add");
    ZigzagSum out(a);
    for (const auto& [z, n] : b.terms_) out.add(z, n);
    return out;
}

ZigzagSum operator-(const ZigzagSum& a, const ZigzagSum& b) {
    if (a.source_ != b.source_ || a.target_ != b.target_)
        throw structural_error("ZigzagSum: endpoint mismatch in sub");
    ZigzagSum out(a);
    for (const auto& [z, n] : b.terms_) out.add(z, -n);
    return out;
}

ZigzagSum ZigzagSum::scaled(long c) const {
    ZigzagSum out(source_, target_);
    if (c == 0) return out;
    for (const auto& [z, n] : terms_) out.terms_.emplace(z, n * c);
    return out;
}

std::string ZigzagSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [z, n] : terms_) {
        long mag = n < 0 ? -n : n;
        if (first) {
            if (n < 0) os << "-";
            first = false;
        } else {
            os << (n < 0 ? " - " : " + ");
        }
        if (mag != 1) os << mag << "*";
        os << "(" << z.str() << ")";
    }
    return os.str();
}

ZigzagSum zigzag_sum_juxtapose(const ZigzagSum& a, const ZigzagSum& b) {
    if (a.target() != b.source())
        throw structural_error("zigzag_sum_juxtapose: endpoint mismatch");
    ZigzagSum out(a.source(), b.target());
    for (const auto& [za, na] : a.terms())
        for (const auto& [zb, nb] : b.terms()) out.add(zigzag_juxtapose(za, zb), na * nb);
    return out;
}

FunctorValue apply_zigzag(FunctorId fid, const Zigzag& z, const FunctorValue& v) {
    if (!zigzag_kind_admits(z.kind(), fid))
        throw unsupported_leg_error(std::string("zigzag kind ") + zigzag_kind_name(z.kind()) +
                                    " does not admit functor " + functor_name(fid));
    FunctorValue acc = v;
    for (auto it = z.links().rbegin(); it != z.links().rend(); ++it)
        acc = apply_corr(fid, *it, acc);
    return acc;
}

FunctorValue apply_zigzag_sum(FunctorId fid, const ZigzagSum& s, const FunctorValue& v) {
    FunctorValue acc;
    bool first = true;
    for (const auto& [z, n] : s.terms()) {
        FunctorValue img = scale_value(apply_zigzag(fid, z, v), n);
        acc = first ? img : add_values(acc, img);
        first = false;
    }
    if (first) {
        const Space& x = s.source();
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

LinearOperator zigzag_operator(FunctorId fid, const ZigzagSum& s) {
    std::vector<FunctorValue> columns;
    for (const FunctorValue& v : functor_basis(fid, s.target()))
        columns.push_back(apply_zigzag_sum(fid, s, v));
    return LinearOperator(fid, s.target(), s.source(), std::move(columns));
}

LinearOperator zigzag_operator(FunctorId fid, const Zigzag& z) {
    return zigzag_operator(fid, ZigzagSum::of(z));
}

RingElement poincare_dual(const Space& x, const RingElement& cohomology_class) {
    if (cohomology_class.ring() != x.chow_ring())
        throw structural_error("poincare_dual: class not on the given space");
    // Cap with [X]: on a smooth complete model space the representation is
    // shared, so the map is the identity on representatives.
    return cohomology_class;
}

RingElement poincare_dual_inverse(const Space& x, const RingElement& homology_class) {
    if (homology_class.ring() != x.chow_ring())
        throw structural_error("poincare_dual_inverse: class not on the given space");
    return homology_class;
}

RingElement pullback_dot(const Morphism& f, const RingElement& homology_class) {
    const RingElement cohom = poincare_dual_inverse(f.target(), homology_class);
    return poincare_dual(f.source(), chow_pullback(f, cohom));
}

RingElement smooth_corr_action(const Correspondence& c, const RingElement& v) {
    return chow_pushforward(c.left(), pullback_dot(c.right(), v));
}

LinearOperator smooth_corr_operator(const Correspondence& c) {
    std::vector<FunctorValue> columns;
    for (const FunctorValue& v : functor_basis(FunctorId::HTodd, c.target()))
        columns.push_back(smooth_corr_action(c, std::get<RingElement>(v)));
    return LinearOperator(FunctorId::HTodd, c.target(), c.source(), std::move(columns));
}

LinearOperator smooth_zigzag_operator(const Zigzag& z) {
    std::vector<FunctorValue> columns;
    for (const FunctorValue& v : functor_basis(FunctorId::HTodd, z.target())) {
        RingElement acc = std::get<RingElement>(v);
        for (auto it = z.links().rbegin(); it != z.links().rend(); ++it)
            acc = smooth_corr_action(*it, acc);
        columns.push_back(acc);
    }
    return LinearOperator(FunctorId::HTodd, z.target(), z.source(), std::move(columns));
}

CheckResult check_zigzag_covariance(FunctorId fid, const ZigzagSum& a, const ZigzagSum& b) {
    const ZigzagSum ab = zigzag_sum_juxtapose(a, b);
    const auto basis = functor_basis(fid, b.target());
    for (const FunctorValue& v : basis) {
        const FunctorValue lhs = apply_zigzag_sum(fid, ab, v);
        const FunctorValue rhs = apply_zigzag_sum(fid, a, apply_zigzag_sum(fid, b, v));
        if (!values_equal(lhs, rhs)) {
            return CheckResult{false, std::string(functor_name(fid)) + " basis " + value_str(v) +
                                          ": juxtaposed -> " + value_str(lhs) + ", factored -> " +
                                          value_str(rhs)};
        }
    }
    return CheckResult{};
}

CheckResult check_zigzag_naturality(TransformId t, const ZigzagSum& s) {
    const FunctorId src = transform_source(t), tgt = transform_target(t);
    const auto basis = functor_basis(src, s.target());
    const auto labels = functor_basis_labels(src, s.target());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const FunctorValue lhs = apply_transform(t, apply_zigzag_sum(src, s, basis[j]));
        const FunctorValue rhs = apply_zigzag_sum(tgt, s, apply_transform(t, basis[j]));
        if (!values_equal(lhs, rhs)) {
            return CheckResult{false, std::string("transform ") + transform_name(t) + ", basis " +
                                          labels[j] + ": functor-first -> " + value_str(lhs) +
                                          ", tau-first -> " + value_str(rhs)};
        }
    }
    return CheckResult{};
}

CheckResult check_zigzag_vs_composition(FunctorId fid, const Zigzag& z) {
    if (z.length() == 0) return CheckResult{};
    CorrSum composed = CorrSum::of(z.links().front());
    for (std::size_t i = 1; i < z.links().size(); ++i)
        composed = corrsum_compose(composed, CorrSum::of(z.links()[i]));
    const auto basis = functor_basis(fid, z.target());
    for (const FunctorValue& v : basis) {
        const FunctorValue lhs = apply_zigzag(fid, z, v);
        const FunctorValue rhs = apply_corr_sum(fid, composed, v);
        if (!values_equal(lhs, rhs)) {
            return CheckResult{false, std::string(functor_name(fid)) + " basis " + value_str(v) +
                                          ": zigzag -> " + value_str(lhs) + ", composed -> " +
                                          value_str(rhs)};
        }
    }
    return CheckResult{};
}

CheckResult check_pullback_dot_functoriality(const Morphism& f, const Morphism& g) {
    if (f.target() != g.source())
        throw structural_error("check_pullback_dot_functoriality: not composable");
    const Morphism gf = compose_morphisms(f, g);
    for (const FunctorValue& v : functor_basis(FunctorId::HTodd, g.target())) {
        const RingElement& h = std::get<RingElement>(v);
        const RingElement lhs = pullback_dot(gf, h);
        const RingElement rhs = pullback_dot(f, pullback_dot(g, h));
        if (lhs != rhs) {
            return CheckResult{false, "basis " + h.str() + ": (g o f)-dot -> " + lhs.str() +
                                          ", f-dot o g-dot -> " + rhs.str()};
        }
    }
    return CheckResult{};
}

CheckResult check_smooth_iso_invariance(const Correspondence& c, const std::vector<int>& perm) {
    const Correspondence permuted = c.permuted_apex(perm);
    const LinearOperator a = smooth_corr_operator(c);
    const LinearOperator b = smooth_corr_operator(permuted);
    if (a != b)
        return CheckResult{false, "operators differ: " + a.str() + " vs " + b.str()};
    return CheckResult{};
}

}  // namespace corrclass
