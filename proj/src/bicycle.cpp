#include "corrclass/bicycle.hpp"

#include <sstream>

#include "corrclass/errors.hpp"

namespace corrclass {

Bicycle::Bicycle(Correspondence corr, VectorBundle bundle)
    : corr_(std::move(corr)), bundle_(std::move(bundle)) {
    if (bundle_.base() != corr_.apex())
        throw structural_error("Bicycle: bundle must live on the apex");
    if (!corr_.right().is_smooth())
        throw unsupported_leg_error("Bicycle: right leg must be smooth");
}

Bicycle::Bicycle(Morphism left, Morphism right, VectorBundle bundle)
    : Bicycle(Correspondence(std::move(left), std::move(right)), std::move(bundle)) {}

Bicycle Bicycle::identity(const Space& x, int rank) {
    return Bicycle(Correspondence::identity(x), VectorBundle::trivial(x, rank));
}

Bigrade Bicycle::grade() const {
    return Bigrade{*corr_.right().classify().relative_dimension, bundle_.rank()};
}

namespace {

std::vector<std::vector<int>> relabel_summands(const std::vector<std::vector<int>>& summands,
                                               const std::vector<int>& new_pos, int new_count) {
    std::vector<std::vector<int>> out;
    for (const auto& d : summands) {
        std::vector<int> nd(static_cast<std::size_t>(new_count), 0);
        for (std::size_t i = 0; i < d.size(); ++i)
            nd[static_cast<std::size_t>(new_pos[i])] = d[i];
        out.push_back(std::move(nd));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Bicycle Bicycle::canonicalize() const {
    const ApexRelabeling rl = canonicalize_apex_with_permutation({corr_.left(), corr_.right()});
    const Space& new_apex = rl.legs[0].source();
    const int k = new_apex.factor_count();

    std::vector<std::vector<int>> best =
        relabel_summands(bundle_.summands(), rl.new_pos, k);

    // Apex factors unused by both legs and of equal dimension are
    // interchangeable; the legs are blind to their order but the bundle is
    // not. Minimize the summand list over permutations within each such
    // group (groups are contiguous in the canonical factor order).
    std::vector<std::pair<int, int>> groups;  // [begin, end) in new indices
    {
        auto unused = [&](int p) {
            return rl.legs[0].pulling_target(p) < 0 && rl.legs[1].pulling_target(p) < 0;
        };
        int p = 0;
        while (p < k) {
            if (!unused(p)) {
                ++p;
                continue;
            }
            int q = p + 1;
            while (q < k && unused(q) && new_apex.factor_dim(q) == new_apex.factor_dim(p)) ++q;
            if (q - p > 1) groups.emplace_back(p, q);
            p = q;
        }
    }
    if (!groups.empty()) {
        std::vector<int> perm(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i;
        // Try every combination of within-group permutations.
        std::vector<std::vector<std::vector<int>>> group_perms;
        for (auto [b, e] : groups) {
            std::vector<int> ids;
            for (int i = b; i < e; ++i) ids.push_back(i);
            std::vector<std::vector<int>> perms;
            std::sort(ids.begin(), ids.end());
            do perms.push_back(ids); while (std::next_permutation(ids.begin(), ids.end()));
            group_perms.push_back(std::move(perms));
        }
        std::vector<std::size_t> pick(group_perms.size(), 0);
        while (true) {
            std::vector<int> full(perm);
            for (std::size_t g = 0; g < groups.size(); ++g) {
                const auto [b, e] = groups[g];
                for (int i = b; i < e; ++i)
                    full[static_cast<std::size_t>(i)] =
                        group_perms[g][pick[g]][static_cast<std::size_t>(i - b)];
            }
            // full[new index after base relabeling] = final index.
            std::vector<int> combined(rl.new_pos.size());
            for (std::size_t i = 0; i < rl.new_pos.size(); ++i)
                combined[i] = full[static_cast<std::size_t>(rl.new_pos[i])];
            auto candidate = relabel_summands(bundle_.summands(), combined, k);
            if (candidate < best) best = std::move(candidate);
            std::size_t g = 0;
            while (g < pick.size() && ++pick[g] == group_perms[g].size()) pick[g++] = 0;
            if (g == pick.size()) break;
        }
    }
    return Bicycle(
        Correspondence(rl.legs[0], rl.legs[1], corr_.left_class(), corr_.right_class()),
        VectorBundle(new_apex, std::move(best)));
}

bool operator<(const Bicycle& a, const Bicycle& b) {
    if (a.corr_ != b.corr_) return a.corr_ < b.corr_;
    return a.bundle_ < b.bundle_;
}

std::string Bicycle::str() const {
    std::ostringstream os;
    os << corr_.str() << " with " << bundle_.str();
    return os.str();
}

Bicycle bicycle_product(BicycleProduct mode, const Bicycle& a, const Bicycle& b) {
    if (a.target() != b.source())
        throw structural_error("bicycle_product: middle objects do not match");
    // Same fiber product as corr_compose, but the pulled-back legs are
    // needed to transport the bundles.
    const FiberSquare sq = fiber_product(a.corr().right(), b.corr().left());
    const Morphism left = compose_morphisms(sq.h_tilde, a.corr().left());
    const Morphism right = compose_morphisms(sq.g_tilde, b.corr().right());
    const VectorBundle ea = a.bundle().pulled_back(sq.h_tilde);
    const VectorBundle fb = b.bundle().pulled_back(sq.g_tilde);
    const VectorBundle e =
        mode == BicycleProduct::Whitney ? ea.direct_sum(fb) : ea.tensor(fb);
    return Bicycle(Correspondence(left, right), e).canonicalize();
}

Bicycle bicycle_push(PushSide side, const Morphism& f, const Bicycle& b) {
    if (side == PushSide::LeftProper) {
        if (f.source() != b.source())
            throw structural_error("bicycle_push: f must start at the bicycle source");
        return Bicycle(Correspondence(compose_morphisms(b.corr().left(), f), b.corr().right()),
                       b.bundle())
            .canonicalize();
    }
    if (!f.is_smooth())
        throw unsupported_leg_error("bicycle_push: right-side pushforward needs smooth f");
    if (f.source() != b.target())
        throw structural_error("bicycle_push: f must start at the bicycle target");
    return Bicycle(Correspondence(b.corr().left(), compose_morphisms(b.corr().right(), f)),
                   b.bundle())
        .canonicalize();
}

Bicycle bicycle_pull(PullSide side, const Morphism& f, const Bicycle& b) {
    if (side == PullSide::LeftSmooth) {
        if (!f.is_smooth())
            throw unsupported_leg_error("bicycle_pull: left-side pullback needs smooth f");
        if (f.target() != b.source())
            throw structural_error("bicycle_pull: f must end at the bicycle source");
        // X' x_X V with the bundle pulled through the V-side leg.
        const FiberSquare sq = fiber_product(f, b.corr().left());
        return Bicycle(Correspondence(sq.h_tilde, compose_morphisms(sq.g_tilde, b.corr().right())),
                       b.bundle().pulled_back(sq.g_tilde))
            .canonicalize();
    }
    if (f.target() != b.target())
        throw structural_error("bicycle_pull: f must end at the bicycle target");
    // V x_Y Y' against the smooth right leg.
    const FiberSquare sq = fiber_product(b.corr().right(), f);
    return Bicycle(Correspondence(compose_morphisms(sq.h_tilde, b.corr().left()), sq.g_tilde),
                   b.bundle().pulled_back(sq.h_tilde))
        .canonicalize();
}

Bicycle bicycle_double_push(const Morphism& f, const Bicycle& b) {
    if (!f.is_smooth())
        throw unsupported_leg_error("bicycle_double_push: f must be proper and smooth");
    if (b.source() != b.target() || b.source() != f.source())
        throw structural_error("bicycle_double_push: bicycle must sit on (X,X) with f: X -> Y");
    return bicycle_push(PushSide::RightSmooth, f, bicycle_push(PushSide::LeftProper, f, b));
}

Bicycle bicycle_double_pull(const Morphism& f, const Bicycle& b) {
    if (!f.is_smooth())
        throw unsupported_leg_error("bicycle_double_pull: f must be proper and smooth");
    if (b.source() != b.target() || b.source() != f.target())
        throw structural_error("bicycle_double_pull: bicycle must sit on (Y,Y) with f: X -> Y");
    return bicycle_pull(PullSide::LeftSmooth, f, bicycle_pull(PullSide::RightProper, f, b));
}

BicycleSum BicycleSum::of(const Bicycle& b, long coeff) {
    BicycleSum s(b.source(), b.target());
    s.add(b, coeff);
    return s;
}

BicycleSum& BicycleSum::add(const Bicycle& b, long coeff) {
    if (b.source() != source_ || b.target() != target_)
        throw structural_error("BicycleSum: endpoint mismatch");
    if (coeff == 0) return *this;
    const Bicycle key = b.canonicalize();
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

std::map<Bigrade, BicycleSum> BicycleSum::by_grade() const {
    std::map<Bigrade, BicycleSum> out;
    for (const auto& [b, n] : terms_) {
        auto [it, inserted] = out.try_emplace(b.grade(), source_, target_);
        it->second.add(b, n);
    }
    return out;
}

BicycleSum operator+(const BicycleSum& a, const BicycleSum& b) {
    if (a.source_ != b.source_ || a.target_ != b.target_)
        throw structural_error("BicycleSum: endpoint mismatch in add");
    BicycleSum out(a);
    for (const auto& [k, n] : b.terms_) out.add(k, n);
    return out;
}

BicycleSum operator-(const BicycleSum& a, const BicycleSum& b) {
    if (a.source_ != b.source_ || a.target_ != b.target_)
        throw structural_error("BicycleSum: endpoint mismatch in sub");
    BicycleSum out(a);
    for (const auto& [k, n] : b.terms_) out.add(k, -n);
    return out;
}

BicycleSum BicycleSum::scaled(long c) const {
    BicycleSum out(source_, target_);
    if (c == 0) return out;
    for (const auto& [k, n] : terms_) out.terms_.emplace(k, n * c);
    return out;
}

std::string BicycleSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, n] : terms_) {
        long mag = n < 0 ? -n : n;
        if (first) {
            if (n < 0) os << "-";
            first = false;
        } else {
            os << (n < 0 ? " - " : " + ");
        }
        if (mag != 1) os << mag << "*";
        os << "[" << b.str() << "]";
    }
    return os.str();
}

BicycleSum bicycle_sum_product(BicycleProduct mode, const BicycleSum& a, const BicycleSum& b) {
    if (a.target() != b.source())
        throw structural_error("bicycle_sum_product: middle objects do not match");
    BicycleSum out(a.source(), b.target());
    for (const auto& [ba, na] : a.terms())
        for (const auto& [bb, nb] : b.terms()) out.add(bicycle_product(mode, ba, bb), na * nb);
    return out;
}

std::string BicycleFunctor::name() const {
    switch (kind) {
        case Kind::Hcl: return std::string("Hcl(") + genus_kind_name(cl1) + ")";
        case Kind::Hch: return "Hch";
        case Kind::Hcl1Cl2:
            return std::string("Hcl1cl2(") + genus_kind_name(cl1) + "," + genus_kind_name(cl2) +
                   ")";
        case Kind::HclCh: return std::string("Hclch(") + genus_kind_name(cl1) + ")";
        case Kind::G0tensor: return "G0tensor";
        case Kind::HtdCh: return "Htdch";
    }
    return "?";
}

FunctorValue apply_bicycle(const BicycleFunctor& f, const Bicycle& b, const FunctorValue& v) {
    const Morphism& p = b.corr().left();
    const Morphism& s = b.corr().right();
    if (f.kind == BicycleFunctor::Kind::G0tensor) {
        return k_pushforward(p, KClass::of_bundle(b.bundle()) * k_pullback(s, std::get<KClass>(v)));
    }
    const RingElement pulled = chow_pullback(s, std::get<RingElement>(v));
    RingElement twist = RingElement::constant(b.apex().chow_ring(), YPoly(1));
    switch (f.kind) {
        case BicycleFunctor::Kind::Hcl: twist = genus_of_bundle(f.cl1, b.bundle()); break;
        case BicycleFunctor::Kind::Hch: twist = chern_character(b.bundle()); break;
        case BicycleFunctor::Kind::Hcl1Cl2:
            twist = relative_genus(f.cl1, s) * genus_of_bundle(f.cl2, b.bundle());
            break;
        case BicycleFunctor::Kind::HclCh:
            twist = relative_genus(f.cl1, s) * chern_character(b.bundle());
            break;
        case BicycleFunctor::Kind::HtdCh:
            twist = relative_genus(GenusKind::Todd, s) * chern_character(b.bundle());
            break;
        case BicycleFunctor::Kind::G0tensor: break;  // handled above
    }
    return chow_pushforward(p, twist * pulled);
}

FunctorValue apply_bicycle_sum(const BicycleFunctor& f, const BicycleSum& a,
                               const FunctorValue& v) {
    FunctorValue acc;
    bool first = true;
    for (const auto& [b, n] : a.terms()) {
        FunctorValue img = scale_value(apply_bicycle(f, b, v), n);
        acc = first ? img : add_values(acc, img);
        first = false;
    }
    if (first) {
        if (f.k_valued()) return KClass::zero(a.source());
        return RingElement(a.source().chow_ring());
    }
    return acc;
}

namespace {

std::vector<FunctorValue> bicycle_basis(const BicycleFunctor& f, const Space& x) {
    return functor_basis(f.k_valued() ? FunctorId::G0 : FunctorId::HTodd, x);
}

}  // namespace

LinearOperator bicycle_operator(const BicycleFunctor& f, const BicycleSum& a) {
    std::vector<FunctorValue> columns;
    for (const FunctorValue& v : bicycle_basis(f, a.target()))
        columns.push_back(apply_bicycle_sum(f, a, v));
    return LinearOperator(f.k_valued() ? FunctorId::G0 : FunctorId::HTodd, a.target(), a.source(),
                          std::move(columns));
}

CheckResult check_bicycle_covariance(const BicycleFunctor& f, const BicycleSum& a,
                                     const BicycleSum& b) {
    const BicycleSum ab = bicycle_sum_product(f.product(), a, b);
    const auto basis = bicycle_basis(f, b.target());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const FunctorValue lhs = apply_bicycle_sum(f, ab, basis[j]);
        const FunctorValue rhs = apply_bicycle_sum(f, a, apply_bicycle_sum(f, b, basis[j]));
        if (!values_equal(lhs, rhs)) {
            return CheckResult{false, f.name() + " basis " + value_str(basis[j]) +
                                          ": composed -> " + value_str(lhs) + ", factored -> " +
                                          value_str(rhs)};
        }
    }
    return CheckResult{};
}

CheckResult check_bicycle_td_naturality(const BicycleSum& b) {
    const auto basis = functor_basis(FunctorId::G0, b.target());
    for (const FunctorValue& v : basis) {
        const FunctorValue lhs =
            td_bfm(std::get<KClass>(apply_bicycle_sum(BicycleFunctor::g0tensor(), b, v)));
        const FunctorValue rhs =
            apply_bicycle_sum(BicycleFunctor::htdch(), b, td_bfm(std::get<KClass>(v)));
        if (!values_equal(lhs, rhs)) {
            return CheckResult{false, "basis " + value_str(v) + ": td o G0tensor -> " +
                                          value_str(lhs) + ", Htdch o td -> " + value_str(rhs)};
        }
    }
    return CheckResult{};
}

CheckResult check_bicycle_td_naturality_without_twist(const BicycleSum& b) {
    // Htdch with the td(T_s) factor dropped: ch(E) alone twists the
    // pullback. Must disagree with td o G0tensor when a right leg has
    // fibers.
    const auto basis = functor_basis(FunctorId::G0, b.target());
    for (const FunctorValue& v : basis) {
        const FunctorValue lhs =
            td_bfm(std::get<KClass>(apply_bicycle_sum(BicycleFunctor::g0tensor(), b, v)));
        const FunctorValue rhs =
            apply_bicycle_sum(BicycleFunctor::hch(), b, td_bfm(std::get<KClass>(v)));
        if (!values_equal(lhs, rhs)) {
            return CheckResult{false, "basis " + value_str(v) + ": twisted -> " + value_str(lhs) +
                                          ", untwisted -> " + value_str(rhs)};
        }
    }
    return CheckResult{};
}

namespace {

RingElement twist_pullback(GenusKind cl, const Morphism& f, const RingElement& v) {
    return relative_genus(cl, f) * chow_pullback(f, v);
}

}  // namespace

CheckResult check_double_push_square(GenusKind cl1, GenusKind cl2, const Morphism& f,
                                     const Bicycle& b) {
    const BicycleFunctor h = BicycleFunctor::hcl1cl2(cl1, cl2);
    const Bicycle fb = bicycle_double_push(f, b);
    const Space& y = f.target();
    for (const FunctorValue& v : functor_basis(FunctorId::HTodd, y)) {
        const FunctorValue lhs = apply_bicycle(h, fb, v);
        // f_star_star(H) = f_* o H o (cl1(T_f) cap f^*).
        const RingElement pulled = twist_pullback(cl1, f, std::get<RingElement>(v));
        const RingElement mid = std::get<RingElement>(apply_bicycle(h, b, FunctorValue(pulled)));
        const FunctorValue rhs = chow_pushforward(f, mid);
        if (!values_equal(lhs, rhs)) {
            return CheckResult{false, "basis " + value_str(v) + ": H(f_** b) -> " +
                                          value_str(lhs) + ", f_star_star(H(b)) -> " +
                                          value_str(rhs)};
        }
    }
    return CheckResult{};
}

CheckResult check_double_pull_square(GenusKind cl1, GenusKind cl2, const Morphism& f,
                                     const Bicycle& b) {
    const BicycleFunctor h = BicycleFunctor::hcl1cl2(cl1, cl2);
    const Bicycle fb = bicycle_double_pull(f, b);
    const Space& y = f.target();
    for (const FunctorValue& v : functor_basis(FunctorId::HTodd, f.source())) {
        const FunctorValue lhs = apply_bicycle(h, fb, v);
        // f_star_star(H) = (cl1(T_f) cap f^*) o H o f_*.
        const RingElement pushed = chow_pushforward(f, std::get<RingElement>(v));
        const RingElement mid = std::get<RingElement>(apply_bicycle(h, b, FunctorValue(pushed)));
        const FunctorValue rhs = twist_pullback(cl1, f, mid);
        if (!values_equal(lhs, rhs)) {
            return CheckResult{false, "basis " + value_str(v) + ": H(f^** b) -> " +
                                          value_str(lhs) + ", f_star_star(H(b)) -> " +
                                          value_str(rhs)};
        }
    }
    (void)y;
    return CheckResult{};
}

CheckResult check_decomposition(const Bicycle& b) {
    const Space& v = b.apex();
    const Bicycle left_part(Correspondence(b.corr().left(), Morphism::identity(v)),
                            VectorBundle::zero(v));
    const Bicycle middle(Correspondence::identity(v), b.bundle());
    const Bicycle right_part(Correspondence(Morphism::identity(v), b.corr().right()),
                             VectorBundle::zero(v));
    const Bicycle recomposed = bicycle_product(
        BicycleProduct::Whitney, bicycle_product(BicycleProduct::Whitney, left_part, middle),
        right_part);
    if (recomposed != b.canonicalize()) {
        return CheckResult{false,
                           "decomposition: " + recomposed.str() + " != " + b.canonicalize().str()};
    }
    return CheckResult{};
}

}  // namespace corrclass
