#include "corrclass/spaces.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "corrclass/errors.hpp"

namespace corrclass {

Space::Space(std::vector<int> dims) : dims_(std::move(dims)) {
    for (int n : dims_)
        if (n < 0) throw structural_error("Space: negative factor dimension");
}

int Space::dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

NilpotentRing Space::chow_ring() const {
    std::vector<int> trunc(dims_);
    for (int& d : trunc) ++d;
    return NilpotentRing(trunc, "h");
}

NilpotentRing Space::k_ring() const {
    std::vector<int> trunc(dims_);
    for (int& d : trunc) ++d;
    return NilpotentRing(trunc, "t");
}

std::string Space::str() const {
    std::ostringstream os;
    os << "P(";
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (i) os << ",";
        os << dims_[i];
    }
    os << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Space& s) { return os << s.str(); }

Morphism::Morphism(Space source, Space target, std::vector<FactorAssignment> assignment)
    : source_(std::move(source)), target_(std::move(target)), assign_(std::move(assignment)) {
    if (static_cast<int>(assign_.size()) != target_.factor_count())
        throw structural_error("Morphism: one assignment per target factor required");
    std::vector<bool> used(static_cast<std::size_t>(source_.factor_count()), false);
    for (int j = 0; j < target_.factor_count(); ++j) {
        const FactorAssignment& a = assign_[static_cast<std::size_t>(j)];
        if (a.is_constant()) continue;
        if (a.source_factor < 0 || a.source_factor >= source_.factor_count())
            throw structural_error("Morphism: pulled source factor out of range");
        if (used[static_cast<std::size_t>(a.source_factor)])
            throw structural_error("Morphism: source factor pulled twice");
        used[static_cast<std::size_t>(a.source_factor)] = true;
        if (source_.factor_dim(a.source_factor) > target_.factor_dim(j))
            throw structural_error("Morphism: embedding would lower dimension");
    }
}

Morphism Morphism::identity(const Space& x) {
    std::vector<FactorAssignment> a;
    for (int i = 0; i < x.factor_count(); ++i) a.push_back(FactorAssignment::pulled(i));
    return Morphism(x, x, std::move(a));
}

Morphism Morphism::projection(const Space& source, const std::vector<int>& kept_factors) {
    std::vector<int> dims;
    std::vector<FactorAssignment> a;
    for (int i : kept_factors) {
        if (i < 0 || i >= source.factor_count())
            throw structural_error("Morphism::projection: factor out of range");
        dims.push_back(source.factor_dim(i));
        a.push_back(FactorAssignment::pulled(i));
    }
    return Morphism(source, Space(std::move(dims)), std::move(a));
}

Morphism Morphism::to_point(const Space& source) { return Morphism(source, Space::point(), {}); }

Morphism Morphism::permutation(const Space& source, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != source.factor_count())
        throw structural_error("Morphism::permutation: arity mismatch");
    std::vector<int> dims;
    std::vector<FactorAssignment> a;
    for (int i : perm) {
        dims.push_back(source.factor_dim(i));
        a.push_back(FactorAssignment::pulled(i));
    }
    return Morphism(source, Space(std::move(dims)), std::move(a));
}

bool Morphism::factor_used(int i) const { return pulling_target(i) >= 0; }

int Morphism::pulling_target(int i) const {
    for (int j = 0; j < target_.factor_count(); ++j) {
        const FactorAssignment& a = assign_[static_cast<std::size_t>(j)];
        if (!a.is_constant() && a.source_factor == i) return j;
    }
    return -1;
}

MorphismClassification Morphism::classify() const {
    MorphismClassification c;
    c.is_smooth = true;
    for (int j = 0; j < target_.factor_count(); ++j) {
        const FactorAssignment& a = assign_[static_cast<std::size_t>(j)];
        if (a.is_constant() || source_.factor_dim(a.source_factor) != target_.factor_dim(j)) {
            c.is_smooth = false;
            break;
        }
    }
    if (c.is_smooth) {
        c.relative_dimension = source_.dim() - target_.dim();
        c.is_iso = target_.factor_count() == source_.factor_count();
    }
    return c;
}

bool operator<(const Morphism& a, const Morphism& b) {
    if (a.source_ != b.source_) return a.source_ < b.source_;
    if (a.target_ != b.target_) return a.target_ < b.target_;
    return a.assign_ < b.assign_;
}

std::string Morphism::str() const {
    std::ostringstream os;
    os << source_.str() << " -> " << target_.str() << " {";
    bool first = true;
    for (int j = 0; j < target_.factor_count(); ++j) {
        os << (first ? " " : ", ");
        first = false;
        os << "t" << (j + 1) << " <- ";
        const FactorAssignment& a = assign_[static_cast<std::size_t>(j)];
        if (a.is_constant())
            os << "const";
        else
            os << "s" << (a.source_factor + 1);
    }
    os << (first ? "}" : " }");
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Morphism& f) { return os << f.str(); }

Morphism compose_morphisms(const Morphism& f, const Morphism& g) {
    if (f.target() != g.source())
        throw structural_error("compose_morphisms: target(f) != source(g)");
    std::vector<FactorAssignment> a;
    for (int j = 0; j < g.target().factor_count(); ++j) {
        const FactorAssignment& gj = g.assignment()[static_cast<std::size_t>(j)];
        if (gj.is_constant()) {
            a.push_back(FactorAssignment::constant());
        } else {
            // Canonical embeddings compose canonically; the base point maps
            // to the base point.
            a.push_back(f.assignment()[static_cast<std::size_t>(gj.source_factor)]);
        }
    }
    return Morphism(f.source(), g.target(), std::move(a));
}

FiberSquare fiber_product(const Morphism& g, const Morphism& h) {
    if (!g.is_smooth())
        throw unsupported_leg_error("fiber_product: the g-leg must be smooth in the model");
    if (g.target() != h.target())
        throw structural_error("fiber_product: legs must share a target");
    const Space& m = g.source();
    const Space& n = h.source();

    // Via g, M decomposes as (base factors matched with Y) x A. The fiber
    // product is then W = N x A.
    std::vector<int> fiber_factors;  // indices into M
    for (int i = 0; i < m.factor_count(); ++i)
        if (!g.factor_used(i)) fiber_factors.push_back(i);

    std::vector<int> w_dims(n.dims());
    for (int i : fiber_factors) w_dims.push_back(m.factor_dim(i));
    Space w(std::move(w_dims));

    // h_tilde: W -> M. Base factor sigma_g(j) receives h's assignment for
    // the matching Y-factor j; fiber factor i receives its copy in W.
    std::vector<FactorAssignment> ht(static_cast<std::size_t>(m.factor_count()),
                                     FactorAssignment::constant());
    for (int j = 0; j < g.target().factor_count(); ++j) {
        const int i = g.assignment()[static_cast<std::size_t>(j)].source_factor;
        ht[static_cast<std::size_t>(i)] = h.assignment()[static_cast<std::size_t>(j)];
    }
    for (std::size_t a = 0; a < fiber_factors.size(); ++a) {
        ht[static_cast<std::size_t>(fiber_factors[a])] =
            FactorAssignment::pulled(n.factor_count() + static_cast<int>(a));
    }

    // g_tilde: W -> N is the projection onto the N-block.
    std::vector<FactorAssignment> gt;
    for (int u = 0; u < n.factor_count(); ++u) gt.push_back(FactorAssignment::pulled(u));

    return FiberSquare{w, Morphism(w, m, std::move(ht)), Morphism(w, n, std::move(gt))};
}

RingElement chow_pullback(const Morphism& f, const RingElement& c) {
    const NilpotentRing target_ring = f.target().chow_ring();
    if (c.ring() != target_ring)
        throw structural_error("chow_pullback: class not in the target Chow ring");
    const NilpotentRing source_ring = f.source().chow_ring();
    RingElement out(source_ring);
    for (const auto& [e, coeff] : c.terms()) {
        RingElement mono = RingElement::constant(source_ring, coeff);
        for (int j = 0; j < f.target().factor_count() && !mono.is_zero(); ++j) {
            const int p = e[static_cast<std::size_t>(j)];
            if (p == 0) continue;
            const FactorAssignment& a = f.assignment()[static_cast<std::size_t>(j)];
            if (a.is_constant()) {
                mono = RingElement(source_ring);  // h_j restricts to 0
            } else {
                mono = mono * RingElement::generator(source_ring, a.source_factor,
                                                     p);  // truncates if needed
            }
        }
        out += mono;
    }
    return out;
}

RingElement chow_pushforward(const Morphism& f, const RingElement& c) {
    const NilpotentRing source_ring = f.source().chow_ring();
    if (c.ring() != source_ring)
        throw structural_error("chow_pushforward: class not in the source Chow ring");
    const NilpotentRing target_ring = f.target().chow_ring();
    RingElement out(target_ring);
    std::map<std::vector<int>, YPoly> terms;
    for (const auto& [e, coeff] : c.terms()) {
        // Dropped factors integrate: the term survives iff each carries its
        // top power.
        bool alive = true;
        for (int i = 0; i < f.source().factor_count(); ++i) {
            if (!f.factor_used(i) && e[static_cast<std::size_t>(i)] != f.source().factor_dim(i)) {
                alive = false;
                break;
            }
        }
        if (!alive) continue;
        // Embeddings shift by the codimension; point inclusions insert the
        // class of a point.
        std::vector<int> te(static_cast<std::size_t>(f.target().factor_count()), 0);
        for (int j = 0; j < f.target().factor_count(); ++j) {
            const FactorAssignment& a = f.assignment()[static_cast<std::size_t>(j)];
            if (a.is_constant()) {
                te[static_cast<std::size_t>(j)] = f.target().factor_dim(j);
            } else {
                te[static_cast<std::size_t>(j)] =
                    e[static_cast<std::size_t>(a.source_factor)] +
                    (f.target().factor_dim(j) - f.source().factor_dim(a.source_factor));
            }
        }
        auto it = terms.find(te);
        if (it == terms.end())
            terms.emplace(std::move(te), coeff);
        else
            it->second += coeff;
    }
    return RingElement::from_terms(target_ring, std::move(terms));
}

YPoly integrate(const Space& x, const RingElement& c) {
    if (c.ring() != x.chow_ring())
        throw structural_error("integrate: class not in the space's Chow ring");
    return c.coeff(x.dims());
}

ApexRelabeling canonicalize_apex_with_permutation(std::vector<Morphism> legs) {
    if (legs.empty()) return ApexRelabeling{std::move(legs), {}};
    const Space apex = legs.front().source();
    for (const Morphism& f : legs)
        if (f.source() != apex) throw structural_error("canonicalize_apex: differing sources");

    const int k = apex.factor_count();
    constexpr int kUnused = 1 << 20;
    std::vector<std::vector<int>> key(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        auto& ki = key[static_cast<std::size_t>(i)];
        ki.push_back(apex.factor_dim(i));
        for (const Morphism& f : legs) {
            const int j = f.pulling_target(i);
            ki.push_back(j < 0 ? kUnused : j);
        }
    }
    std::vector<int> order(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&key](int a, int b) {
        return key[static_cast<std::size_t>(a)] < key[static_cast<std::size_t>(b)];
    });

    std::vector<int> new_pos(static_cast<std::size_t>(k));
    std::vector<int> new_dims;
    for (int p = 0; p < k; ++p) {
        new_pos[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;
        new_dims.push_back(apex.factor_dim(order[static_cast<std::size_t>(p)]));
    }
    const Space new_apex{std::vector<int>(new_dims)};

    std::vector<Morphism> out;
    for (const Morphism& f : legs) {
        std::vector<FactorAssignment> a;
        for (const FactorAssignment& fa : f.assignment()) {
            a.push_back(fa.is_constant()
                            ? fa
                            : FactorAssignment::pulled(
                                  new_pos[static_cast<std::size_t>(fa.source_factor)]));
        }
        out.emplace_back(new_apex, f.target(), std::move(a));
    }
    return ApexRelabeling{std::move(out), std::move(new_pos)};
}

std::vector<Morphism> canonicalize_apex(std::vector<Morphism> legs) {
    return canonicalize_apex_with_permutation(std::move(legs)).legs;
}

VectorBundle::VectorBundle(Space base, std::vector<std::vector<int>> summands)
    : base_(std::move(base)), summands_(std::move(summands)) {
    for (const auto& d : summands_)
        if (static_cast<int>(d.size()) != base_.factor_count())
            throw structural_error("VectorBundle: multidegree arity mismatch");
    std::sort(summands_.begin(), summands_.end());
}

VectorBundle VectorBundle::line(const Space& base, std::vector<int> multidegree) {
    return VectorBundle(base, {std::move(multidegree)});
}

VectorBundle VectorBundle::trivial(const Space& base, int rank) {
    std::vector<std::vector<int>> s(
        static_cast<std::size_t>(rank),
        std::vector<int>(static_cast<std::size_t>(base.factor_count()), 0));
    return VectorBundle(base, std::move(s));
}

VectorBundle VectorBundle::direct_sum(const VectorBundle& other) const {
    if (base_ != other.base_) throw structural_error("VectorBundle: base mismatch in sum");
    std::vector<std::vector<int>> s(summands_);
    s.insert(s.end(), other.summands_.begin(), other.summands_.end());
    return VectorBundle(base_, std::move(s));
}

VectorBundle VectorBundle::tensor(const VectorBundle& other) const {
    if (base_ != other.base_) throw structural_error("VectorBundle: base mismatch in tensor");
    std::vector<std::vector<int>> s;
    for (const auto& a : summands_) {
        for (const auto& b : other.summands_) {
            std::vector<int> d(a);
            for (std::size_t i = 0; i < d.size(); ++i) d[i] += b[i];
            s.push_back(std::move(d));
        }
    }
    return VectorBundle(base_, std::move(s));
}

VectorBundle VectorBundle::pulled_back(const Morphism& f) const {
    if (f.target() != base_)
        throw structural_error("VectorBundle::pulled_back: morphism target is not the base");
    std::vector<std::vector<int>> s;
    for (const auto& d : summands_) {
        std::vector<int> pd(static_cast<std::size_t>(f.source().factor_count()), 0);
        for (int j = 0; j < base_.factor_count(); ++j) {
            const FactorAssignment& a = f.assignment()[static_cast<std::size_t>(j)];
            if (!a.is_constant())
                pd[static_cast<std::size_t>(a.source_factor)] += d[static_cast<std::size_t>(j)];
        }
        s.push_back(std::move(pd));
    }
    return VectorBundle(f.source(), std::move(s));
}

bool operator<(const VectorBundle& a, const VectorBundle& b) {
    if (a.base_ != b.base_) return a.base_ < b.base_;
    return a.summands_ < b.summands_;
}

std::string VectorBundle::str() const {
    if (summands_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t s = 0; s < summands_.size(); ++s) {
        if (s) os << " + ";
        os << "O(";
        for (std::size_t i = 0; i < summands_[s].size(); ++i) {
            if (i) os << ",";
            os << summands_[s][i];
        }
        os << ")";
    }
    return os.str();
}

Subvariety::Subvariety(Space ambient, std::vector<int> sub_dims)
    : ambient_(std::move(ambient)), sub_dims_(std::move(sub_dims)) {
    if (static_cast<int>(sub_dims_.size()) != ambient_.factor_count())
        throw structural_error("Subvariety: one dimension per ambient factor required");
    for (int i = 0; i < ambient_.factor_count(); ++i) {
        const int m = sub_dims_[static_cast<std::size_t>(i)];
        if (m < 0 || m > ambient_.factor_dim(i))
            throw structural_error("Subvariety: factor dimension out of bounds");
    }
}

Subvariety Subvariety::full(const Space& ambient) { return Subvariety(ambient, ambient.dims()); }

int Subvariety::dim() const { return std::accumulate(sub_dims_.begin(), sub_dims_.end(), 0); }

Morphism Subvariety::embedding() const {
    std::vector<FactorAssignment> a;
    for (int i = 0; i < ambient_.factor_count(); ++i) a.push_back(FactorAssignment::pulled(i));
    return Morphism(abstract_space(), ambient_, std::move(a));
}

bool operator<(const Subvariety& a, const Subvariety& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
    return a.sub_dims_ < b.sub_dims_;
}

std::string Subvariety::str() const {
    std::ostringstream os;
    os << "L(";
    for (std::size_t i = 0; i < sub_dims_.size(); ++i) {
        if (i) os << ",";
        os << sub_dims_[i];
    }
    os << ") in " << ambient_.str();
    return os.str();
}

}  // namespace corrclass
