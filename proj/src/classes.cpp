#include "corrclass/classes.hpp"

#include "corrclass/errors.hpp"

namespace corrclass {

const char* genus_kind_name(GenusKind kind) {
    switch (kind) {
        case GenusKind::Chern: return "chern";
        case GenusKind::Todd: return "todd";
        case GenusKind::Lclass: return "lclass";
        case GenusKind::Hirzebruch: return "hirzebruch";
    }
    return "?";
}

const UnivariateSeries& genus_factor_series(GenusKind kind) {
    switch (kind) {
        case GenusKind::Chern: return chern_factor_series();
        case GenusKind::Todd: return todd_series();
        case GenusKind::Lclass: return l_series();
        case GenusKind::Hirzebruch: return hirzebruch_series();
    }
    throw domain_error("genus_factor_series: unknown kind");
}

RingElement genus_class(GenusKind kind, const RootList& roots) {
    if (roots.empty())
        throw structural_error("genus_class: empty root list has no ambient ring");
    return genus_class(kind, roots, roots.front().ring());
}

RingElement genus_class(GenusKind kind, const RootList& roots, const NilpotentRing& ring) {
    RingElement acc = RingElement::constant(ring, YPoly(1));
    const UnivariateSeries& q = genus_factor_series(kind);
    for (const RingElement& r : roots) {
        if (r.ring() != ring) throw structural_error("genus_class: mixed rings in root list");
        if (!r.is_homogeneous(1))
            throw structural_error("genus_class: roots must be homogeneous of degree 1");
        acc = acc * series_substitute(q, r);
    }
    return acc;
}

RootList bundle_roots(const VectorBundle& bundle) {
    const NilpotentRing ring = bundle.base().chow_ring();
    RootList roots;
    for (const auto& d : bundle.summands()) {
        RingElement r(ring);
        for (int i = 0; i < bundle.base().factor_count(); ++i) {
            const int di = d[static_cast<std::size_t>(i)];
            if (di != 0) r += RingElement::generator(ring, i).scaled(YPoly(di));
        }
        roots.push_back(std::move(r));
    }
    return roots;
}

RingElement genus_of_bundle(GenusKind kind, const VectorBundle& bundle) {
    const NilpotentRing ring = bundle.base().chow_ring();
    RingElement acc = RingElement::constant(ring, YPoly(1));
    const UnivariateSeries& q = genus_factor_series(kind);
    for (const RingElement& r : bundle_roots(bundle)) acc = acc * series_substitute(q, r);
    return acc;
}

RingElement chern_character(const VectorBundle& bundle) {
    const NilpotentRing ring = bundle.base().chow_ring();
    RingElement acc(ring);
    for (const RingElement& r : bundle_roots(bundle)) acc += series_substitute(exp_series(), r);
    return acc;
}

RootList tangent_roots(const Space& x) {
    const NilpotentRing ring = x.chow_ring();
    RootList roots;
    for (int i = 0; i < x.factor_count(); ++i) {
        for (int c = 0; c < x.factor_dim(i) + 1; ++c)
            roots.push_back(RingElement::generator(ring, i));
    }
    return roots;
}

RingElement tangent_genus(GenusKind kind, const Space& x) {
    return genus_class(kind, tangent_roots(x), x.chow_ring());
}

RingElement relative_genus(GenusKind kind, const Morphism& f) {
    const NilpotentRing source_ring = f.source().chow_ring();
    const auto cls = f.classify();
    if (cls.is_smooth) {
        // Fiber factors only; base factors cancel exactly.
        RingElement acc = RingElement::constant(source_ring, YPoly(1));
        const UnivariateSeries& q = genus_factor_series(kind);
        for (int i = 0; i < f.source().factor_count(); ++i) {
            if (f.factor_used(i)) continue;
            const RingElement h = RingElement::generator(source_ring, i);
            for (int c = 0; c < f.source().factor_dim(i) + 1; ++c)
                acc = acc * series_substitute(q, h);
        }
        return acc;
    }
    // Virtual relative tangent: genus(T source) / f^* genus(T target).
    const RingElement num = tangent_genus(kind, f.source());
    const RingElement den = chow_pullback(f, tangent_genus(kind, f.target()));
    return num * invert_unit(den);
}

}  // namespace corrclass
