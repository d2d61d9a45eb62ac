#include "corrclass/ktheory.hpp"

#include <sstream>

#include "corrclass/errors.hpp"

namespace corrclass {

KClass::KClass(Space space, RingElement element)
    : space_(std::move(space)), element_(std::move(element)) {
    if (element_.ring() != space_.k_ring())
        throw structural_error("KClass: element not in the space's K-ring");
}

KClass KClass::zero(const Space& x) { return KClass(x, RingElement(x.k_ring())); }

KClass KClass::structure_sheaf(const Space& x) {
    return KClass(x, RingElement::constant(x.k_ring(), YPoly(1)));
}

KClass KClass::line(const Space& x, const std::vector<int>& multidegree) {
    if (static_cast<int>(multidegree.size()) != x.factor_count())
        throw structural_error("KClass::line: multidegree arity mismatch");
    const NilpotentRing ring = x.k_ring();
    RingElement acc = RingElement::constant(ring, YPoly(1));
    for (int i = 0; i < x.factor_count(); ++i) {
        const int d = multidegree[static_cast<std::size_t>(i)];
        if (d == 0) continue;
        RingElement one_minus_t =
            RingElement::constant(ring, YPoly(1)) - RingElement::generator(ring, i);
        RingElement factor = d > 0 ? invert_unit(one_minus_t).pow(static_cast<unsigned>(d))
                                   : one_minus_t.pow(static_cast<unsigned>(-d));
        acc = acc * factor;
    }
    return KClass(x, acc);
}

KClass KClass::of_bundle(const VectorBundle& e) {
    KClass acc = KClass::zero(e.base());
    for (const auto& d : e.summands()) acc = acc + KClass::line(e.base(), d);
    return acc;
}

KClass KClass::t_monomial(const Space& x, const std::vector<int>& exponents) {
    const NilpotentRing ring = x.k_ring();
    std::map<std::vector<int>, YPoly> terms;
    terms.emplace(exponents, YPoly(1));
    return KClass(x, RingElement::from_terms(ring, std::move(terms)));
}

KClass operator+(const KClass& a, const KClass& b) {
    if (a.space_ != b.space_) throw structural_error("KClass: space mismatch in add");
    return KClass(a.space_, a.element_ + b.element_);
}

KClass operator-(const KClass& a, const KClass& b) {
    if (a.space_ != b.space_) throw structural_error("KClass: space mismatch in sub");
    return KClass(a.space_, a.element_ - b.element_);
}

KClass operator*(const KClass& a, const KClass& b) {
    if (a.space_ != b.space_) throw structural_error("KClass: space mismatch in tensor");
    return KClass(a.space_, a.element_ * b.element_);
}

Rational euler_char_line(int p, long d) {
    Rational num(1);
    for (int u = 1; u <= p; ++u) num *= Rational(d + u);
    return num / factorial(static_cast<unsigned>(p));
}

KClass k_pullback(const Morphism& f, const KClass& a) {
    if (a.space() != f.target())
        throw structural_error("k_pullback: class not on the morphism target");
    const NilpotentRing source_ring = f.source().k_ring();
    RingElement out(source_ring);
    for (const auto& [e, coeff] : a.element().terms()) {
        RingElement mono = RingElement::constant(source_ring, coeff);
        for (int j = 0; j < f.target().factor_count() && !mono.is_zero(); ++j) {
            const int p = e[static_cast<std::size_t>(j)];
            if (p == 0) continue;
            const FactorAssignment& fa = f.assignment()[static_cast<std::size_t>(j)];
            if (fa.is_constant())
                mono = RingElement(source_ring);
            else
                mono = mono * RingElement::generator(source_ring, fa.source_factor, p);
        }
        out += mono;
    }
    return KClass(f.source(), out);
}

namespace {

// Pushforward of t^j along P^p -> pt: expand t^j = sum_a C(j,a)(-1)^a
// [O(-a)] and take Euler characteristics.
Rational integrate_t_power(int p, int j) {
    Rational acc(0);
    for (int a = 0; a <= j; ++a) {
        Rational term = binomial(j, static_cast<unsigned>(a)) * euler_char_line(p, -a);
        acc += (a % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

KClass k_pushforward(const Morphism& f, const KClass& a) {
    if (a.space() != f.source())
        throw structural_error("k_pushforward: class not on the morphism source");
    const NilpotentRing target_ring = f.target().k_ring();
    std::map<std::vector<int>, YPoly> terms;
    for (const auto& [e, coeff] : a.element().terms()) {
        YPoly c = coeff;
        // Dropped factors integrate by Euler characteristic.
        for (int i = 0; i < f.source().factor_count() && !c.is_zero(); ++i) {
            if (f.factor_used(i)) continue;
            c = c * YPoly(integrate_t_power(f.source().factor_dim(i),
                                            e[static_cast<std::size_t>(i)]));
        }
        if (c.is_zero()) continue;
        // Embeddings multiply by the Koszul class t^codim; point inclusions
        // insert t^{n_j}.
        std::vector<int> te(static_cast<std::size_t>(f.target().factor_count()), 0);
        bool alive = true;
        for (int j = 0; j < f.target().factor_count(); ++j) {
            const FactorAssignment& fa = f.assignment()[static_cast<std::size_t>(j)];
            if (fa.is_constant()) {
                te[static_cast<std::size_t>(j)] = f.target().factor_dim(j);
            } else {
                const int codim =
                    f.target().factor_dim(j) - f.source().factor_dim(fa.source_factor);
                te[static_cast<std::size_t>(j)] =
                    e[static_cast<std::size_t>(fa.source_factor)] + codim;
            }
            if (te[static_cast<std::size_t>(j)] > f.target().factor_dim(j)) {
                alive = false;
                break;
            }
        }
        if (!alive) continue;
        auto it = terms.find(te);
        if (it == terms.end())
            terms.emplace(std::move(te), c);
        else
            it->second += c;
    }
    return KClass(f.target(), RingElement::from_terms(target_ring, std::move(terms)));
}

RingElement k_chern_character(const KClass& a) {
    const Space& x = a.space();
    const NilpotentRing chow = x.chow_ring();
    // ch(t_i) = 1 - e^{-h_i}.
    std::vector<RingElement> ch_t;
    for (int i = 0; i < x.factor_count(); ++i) {
        RingElement mh = -RingElement::generator(chow, i);
        ch_t.push_back(RingElement::constant(chow, YPoly(1)) -
                       series_substitute(exp_series(), mh));
    }
    RingElement out(chow);
    for (const auto& [e, coeff] : a.element().terms()) {
        RingElement mono = RingElement::constant(chow, coeff);
        for (int i = 0; i < x.factor_count() && !mono.is_zero(); ++i) {
            const int p = e[static_cast<std::size_t>(i)];
            if (p > 0) mono = mono * ch_t[static_cast<std::size_t>(i)].pow(static_cast<unsigned>(p));
        }
        out += mono;
    }
    return out;
}

RingElement td_bfm(const KClass& a) {
    return k_chern_character(a) * tangent_genus(GenusKind::Todd, a.space());
}

std::string k_obasis_str(const KClass& a) {
    // Expand each t-monomial prod t_i^{e_i} into the alternating sum over
    // O(-a_1,...,-a_k) with a_i <= e_i.
    const int k = a.space().factor_count();
    std::map<std::vector<int>, Rational> coeffs;  // multidegree -> coefficient
    for (const auto& [e, c] : a.element().terms()) {
        std::vector<int> aa(static_cast<std::size_t>(k), 0);
        while (true) {
            Rational w = c.coeff(0);
            int parity = 0;
            for (int i = 0; i < k; ++i) {
                w *= binomial(e[static_cast<std::size_t>(i)],
                              static_cast<unsigned>(aa[static_cast<std::size_t>(i)]));
                parity += aa[static_cast<std::size_t>(i)];
            }
            if (parity % 2 == 1) w = -w;
            if (!w.is_zero()) {
                std::vector<int> deg(aa);
                for (int& d : deg) d = -d;
                coeffs[deg] += w;
            }
            int i = k - 1;
            while (i >= 0) {
                if (++aa[static_cast<std::size_t>(i)] <= e[static_cast<std::size_t>(i)]) break;
                aa[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
        }
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [deg, c] : coeffs) {
        if (c.is_zero()) continue;
        const Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (!mag.is_one()) os << mag.str() << "*";
        os << "O(";
        for (std::size_t i = 0; i < deg.size(); ++i) {
            if (i) os << ",";
            os << deg[i];
        }
        os << ")";
    }
    return first ? "0" : os.str();
}

}  // namespace corrclass
