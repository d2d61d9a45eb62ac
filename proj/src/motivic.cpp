#include "corrclass/motivic.hpp"

#include <sstream>

#include "corrclass/errors.hpp"

namespace corrclass {

ConstructibleFn ConstructibleFn::indicator(const Subvariety& z, long coeff) {
    ConstructibleFn f(z.ambient());
    f.add(z, coeff);
    return f;
}

ConstructibleFn ConstructibleFn::one(const Space& x) {
    return indicator(Subvariety::full(x));
}

ConstructibleFn& ConstructibleFn::add(const Subvariety& z, long coeff) {
    if (z.ambient() != space_) throw structural_error("ConstructibleFn: ambient mismatch");
    if (coeff == 0) return *this;
    auto it = terms_.find(z);
    if (it == terms_.end()) {
        terms_.emplace(z, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

ConstructibleFn operator+(const ConstructibleFn& a, const ConstructibleFn& b) {
    if (a.space_ != b.space_) throw structural_error("ConstructibleFn: space mismatch");
    ConstructibleFn out(a);
    for (const auto& [z, c] : b.terms_) out.add(z, c);
    return out;
}

ConstructibleFn operator-(const ConstructibleFn& a, const ConstructibleFn& b) {
    if (a.space_ != b.space_) throw structural_error("ConstructibleFn: space mismatch");
    ConstructibleFn out(a);
    for (const auto& [z, c] : b.terms_) out.add(z, -c);
    return out;
}

ConstructibleFn ConstructibleFn::scaled(long c) const {
    ConstructibleFn out(space_);
    if (c == 0) return out;
    for (const auto& [z, n] : terms_) out.terms_.emplace(z, n * c);
    return out;
}

std::string ConstructibleFn::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [z, c] : terms_) {
        long mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) os << mag << "*";
        os << "ind(" << z.str() << ")";
    }
    return os.str();
}

MotivicGenerator::MotivicGenerator(Morphism structure) {
    structure_ = canonicalize_apex({std::move(structure)}).front();
}

MotivicGenerator MotivicGenerator::of_subvariety(const Subvariety& z) {
    return MotivicGenerator(z.embedding());
}

MotivicGenerator MotivicGenerator::identity(const Space& x) {
    return MotivicGenerator(Morphism::identity(x));
}

std::string MotivicGenerator::str() const { return "[" + structure_.str() + "]"; }

MotivicClass MotivicClass::of_generator(const MotivicGenerator& g, long coeff) {
    MotivicClass m(g.base());
    m.add(g, coeff);
    return m;
}

MotivicClass MotivicClass::of_subvariety(const Subvariety& z, long coeff) {
    return of_generator(MotivicGenerator::of_subvariety(z), coeff);
}

MotivicClass& MotivicClass::add(const MotivicGenerator& g, long coeff) {
    if (g.base() != space_) throw structural_error("MotivicClass: base mismatch");
    if (coeff == 0) return *this;
    auto it = terms_.find(g);
    if (it == terms_.end()) {
        terms_.emplace(g, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

MotivicClass operator+(const MotivicClass& a, const MotivicClass& b) {
    if (a.space_ != b.space_) throw structural_error("MotivicClass: space mismatch");
    MotivicClass out(a);
    for (const auto& [g, c] : b.terms_) out.add(g, c);
    return out;
}

MotivicClass operator-(const MotivicClass& a, const MotivicClass& b) {
    if (a.space_ != b.space_) throw structural_error("MotivicClass: space mismatch");
    MotivicClass out(a);
    for (const auto& [g, c] : b.terms_) out.add(g, -c);
    return out;
}

MotivicClass MotivicClass::scaled(long c) const {
    MotivicClass out(space_);
    if (c == 0) return out;
    for (const auto& [g, n] : terms_) out.terms_.emplace(g, n * c);
    return out;
}

std::string MotivicClass::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : terms_) {
        long mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) os << mag << "*";
        os << g.str();
    }
    return os.str();
}

std::vector<Subvariety> subvariety_basis(const Space& x) {
    std::vector<Subvariety> basis;
    std::vector<int> m(static_cast<std::size_t>(x.factor_count()), 0);
    while (true) {
        basis.push_back(Subvariety(x, m));
        int i = x.factor_count() - 1;
        while (i >= 0) {
            if (++m[static_cast<std::size_t>(i)] <= x.factor_dim(i)) break;
            m[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return basis;
}

long euler_characteristic(const Space& x) {
    long chi = 1;
    for (int i = 0; i < x.factor_count(); ++i) chi *= x.factor_dim(i) + 1;
    return chi;
}

ConstructibleFn cf_pushforward(const Morphism& f, const ConstructibleFn& phi) {
    if (phi.space() != f.source())
        throw structural_error("cf_pushforward: function not on the morphism source");
    ConstructibleFn out(f.target());
    for (const auto& [z, c] : phi.terms()) {
        long mult = c;
        for (int i = 0; i < f.source().factor_count(); ++i) {
            if (!f.factor_used(i)) mult *= z.sub_dims()[static_cast<std::size_t>(i)] + 1;
        }
        std::vector<int> image_dims;
        for (int j = 0; j < f.target().factor_count(); ++j) {
            const FactorAssignment& a = f.assignment()[static_cast<std::size_t>(j)];
            image_dims.push_back(a.is_constant()
                                     ? 0
                                     : z.sub_dims()[static_cast<std::size_t>(a.source_factor)]);
        }
        out.add(Subvariety(f.target(), std::move(image_dims)), mult);
    }
    return out;
}

ConstructibleFn cf_pullback(const Morphism& g, const ConstructibleFn& phi) {
    if (!g.is_smooth())
        throw unsupported_leg_error("cf_pullback: pullback requires a smooth morphism");
    if (phi.space() != g.target())
        throw structural_error("cf_pullback: function not on the morphism target");
    ConstructibleFn out(g.source());
    for (const auto& [z, c] : phi.terms()) {
        std::vector<int> pre_dims(g.source().dims());  // fiber factors stay full
        for (int j = 0; j < g.target().factor_count(); ++j) {
            const int i = g.assignment()[static_cast<std::size_t>(j)].source_factor;
            pre_dims[static_cast<std::size_t>(i)] = z.sub_dims()[static_cast<std::size_t>(j)];
        }
        out.add(Subvariety(g.source(), std::move(pre_dims)), c);
    }
    return out;
}

RingElement mac_chern(const ConstructibleFn& phi) {
    RingElement out(phi.space().chow_ring());
    for (const auto& [z, c] : phi.terms()) {
        const RingElement cls = tangent_genus(GenusKind::Chern, z.abstract_space());
        out += chow_pushforward(z.embedding(), cls).scaled(YPoly(c));
    }
    return out;
}

MotivicClass mot_pushforward(const Morphism& f, const MotivicClass& m) {
    if (m.space() != f.source())
        throw structural_error("mot_pushforward: class not on the morphism source");
    MotivicClass out(f.target());
    for (const auto& [g, c] : m.terms())
        out.add(MotivicGenerator(compose_morphisms(g.structure(), f)), c);
    return out;
}

MotivicClass mot_pullback(const Morphism& g, const MotivicClass& m) {
    if (!g.is_smooth())
        throw unsupported_leg_error("mot_pullback: pullback requires a smooth morphism");
    if (m.space() != g.target())
        throw structural_error("mot_pullback: class not on the morphism target");
    MotivicClass out(g.source());
    for (const auto& [gen, c] : m.terms()) {
        const FiberSquare sq = fiber_product(g, gen.structure());
        out.add(MotivicGenerator(sq.h_tilde), c);
    }
    return out;
}

RingElement hirzebruch_ty(const MotivicClass& m) {
    RingElement out(m.space().chow_ring());
    for (const auto& [g, c] : m.terms()) {
        const RingElement cls = tangent_genus(GenusKind::Hirzebruch, g.total_space());
        out += chow_pushforward(g.structure(), cls).scaled(YPoly(c));
    }
    return out;
}

ConstructibleFn epsilon_map(const MotivicClass& m) {
    ConstructibleFn out(m.space());
    for (const auto& [g, c] : m.terms())
        out = out + cf_pushforward(g.structure(), ConstructibleFn::one(g.total_space())).scaled(c);
    return out;
}

KClass gamma_map(const MotivicClass& m) {
    KClass out = KClass::zero(m.space());
    for (const auto& [g, c] : m.terms())
        out = out + k_pushforward(g.structure(), KClass::structure_sheaf(g.total_space()))
                        .scaled(YPoly(c));
    return out;
}

}  // namespace corrclass
