#include <doctest.h>

#include "corrclass/classes.hpp"
#include "corrclass/rng.hpp"
#include "corrclass/suites.hpp"

using namespace corrclass;

namespace {

RootList repeated_generator(const NilpotentRing& ring, int count) {
    return RootList(static_cast<std::size_t>(count), RingElement::generator(ring, 0));
}

}  // namespace

TEST_CASE("todd of the tangent roots of P1") {
    const NilpotentRing r2({2});
    // Oracle: square 1 + h/2 + h^2/12 and truncate at h^2 = 0.
    const RingElement factor = series_substitute(todd_series(), RingElement::generator(r2, 0));
    const RingElement oracle = factor * factor;
    const RingElement td = genus_class(GenusKind::Todd, repeated_generator(r2, 2));
    CHECK(td == oracle);
    CHECK(td.str() == "1 + h1");
}

TEST_CASE("chern of the tangent roots of P2 is the binomial expansion") {
    const NilpotentRing r3({3});
    const RingElement c = genus_class(GenusKind::Chern, repeated_generator(r3, 3));
    for (int k = 0; k <= 2; ++k)
        CHECK(c.coeff({k}) == YPoly(binomial(3, static_cast<unsigned>(k))));
    CHECK(c.str() == "1 + 3*h1 + 3*h1^2");
}

TEST_CASE("hirzebruch class of {h,h} on P1") {
    const NilpotentRing r2({2});
    const RingElement ty = genus_class(GenusKind::Hirzebruch, repeated_generator(r2, 2));
    // Oracle: Q_y = 1 + (1-y)/2 a + O(a^2); squared and truncated gives
    // 1 + (1-y) h.
    CHECK(ty.coeff({0}) == YPoly(1));
    CHECK(ty.coeff({1}) == YPoly(1) - YPoly::y());
}

TEST_CASE("L class of {h,h,h} on P2") {
    const NilpotentRing r3({3});
    // Oracle: cube 1 + h^2/3 and truncate.
    const RingElement factor = series_substitute(l_series(), RingElement::generator(r3, 0));
    CHECK(factor.coeff({1}) == YPoly(0));
    CHECK(factor.coeff({2}) == YPoly(Rational(1, 3)));
    const RingElement l = genus_class(GenusKind::Lclass, repeated_generator(r3, 3));
    CHECK(l == factor.pow(3));
    CHECK(l.str() == "1 + h1^2");
}

TEST_CASE("genus errors") {
    const NilpotentRing r2({2}), r3({3});
    RootList mixed = {RingElement::generator(r2, 0), RingElement::generator(r3, 0)};
    CHECK_THROWS_AS((void)genus_class(GenusKind::Todd, mixed), structural_error);
    RootList not_linear = {RingElement::generator(r3, 0, 2)};
    CHECK_THROWS_AS((void)genus_class(GenusKind::Todd, not_linear), structural_error);
    CHECK_THROWS_AS((void)genus_class(GenusKind::Todd, RootList{}), structural_error);
}

TEST_CASE("multiplicativity over split root lists for all four kinds") {
    Rng rng(13);
    const NilpotentRing ring({3, 2});
    for (int i = 0; i < 30; ++i) {
        RootList r1, r2;
        for (int k = 0, n = rng.uniform(1, 3); k < n; ++k) {
            RingElement root =
                RingElement::generator(ring, 0).scaled(YPoly(rng.uniform(-2, 2))) +
                RingElement::generator(ring, 1).scaled(YPoly(rng.uniform(-2, 2)));
            if (root.is_zero()) root = RingElement::generator(ring, 0);
            r1.push_back(root);
        }
        for (int k = 0, n = rng.uniform(1, 3); k < n; ++k) {
            RingElement root =
                RingElement::generator(ring, 0).scaled(YPoly(rng.uniform(-2, 2))) +
                RingElement::generator(ring, 1).scaled(YPoly(rng.uniform(-2, 2)));
            if (root.is_zero()) root = RingElement::generator(ring, 1);
            r2.push_back(root);
        }
        RootList joined(r1);
        joined.insert(joined.end(), r2.begin(), r2.end());
        for (GenusKind kind : {GenusKind::Chern, GenusKind::Todd, GenusKind::Lclass,
                               GenusKind::Hirzebruch}) {
            CHECK(genus_class(kind, joined, ring) ==
                  genus_class(kind, r1, ring) * genus_class(kind, r2, ring));
        }
    }
}

TEST_CASE("specializations of the hirzebruch class on random root lists") {
    const SuiteResult r = suite_specializations(2024, 200, 6);
    CHECK(r.pass());
    CHECK(r.cases == 200);
}

TEST_CASE("chern character examples") {
    const Space p2({2});
    const RingElement ch_o2 = chern_character(VectorBundle::line(p2, {2}));
    CHECK(ch_o2.coeff({0}) == YPoly(1));
    CHECK(ch_o2.coeff({1}) == YPoly(2));
    CHECK(ch_o2.coeff({2}) == YPoly(2));  // e^{2h}: 4/2 = 2

    CHECK(chern_character(VectorBundle::line(p2, {0})) ==
          RingElement::constant(p2.chow_ring(), YPoly(1)));

    const Space p1({1});
    const VectorBundle o1o1 =
        VectorBundle::line(p1, {1}).direct_sum(VectorBundle::line(p1, {1}));
    const RingElement ch = chern_character(o1o1);
    CHECK(ch.coeff({0}) == YPoly(2));
    CHECK(ch.coeff({1}) == YPoly(2));
}

TEST_CASE("chern character is additive and multiplicative") {
    Rng rng(3);
    const Space base({2, 1});
    for (int i = 0; i < 25; ++i) {
        const VectorBundle e = random_bundle(rng, base, 3, 2);
        const VectorBundle f = random_bundle(rng, base, 3, 2);
        CHECK(chern_character(e.direct_sum(f)) == chern_character(e) + chern_character(f));
        CHECK(chern_character(e.tensor(f)) == chern_character(e) * chern_character(f));
    }
}

TEST_CASE("rank is the constant term of the chern character") {
    Rng rng(4);
    const Space base({1, 1});
    for (int i = 0; i < 20; ++i) {
        const VectorBundle e = random_bundle(rng, base, 4, 3);
        CHECK(chern_character(e).constant_term() == YPoly(e.rank()));
    }
}

TEST_CASE("specializations hold at deep truncation orders") {
    // Q[h]/(h^7): series coefficients through order 6 enter the product.
    const NilpotentRing r7({7});
    RootList roots;
    for (int c : {1, -2, 3}) roots.push_back(RingElement::generator(r7, 0).scaled(YPoly(c)));
    const RingElement ty = genus_class(GenusKind::Hirzebruch, roots, r7);
    CHECK(ty.evaluate_y(Rational(-1)) == genus_class(GenusKind::Chern, roots, r7));
    CHECK(ty.evaluate_y(Rational(0)) == genus_class(GenusKind::Todd, roots, r7));
    CHECK(ty.evaluate_y(Rational(1)) == genus_class(GenusKind::Lclass, roots, r7));
}

TEST_CASE("HRR extends beyond the desk-check range") {
    // chi(P^n, O(d)) = C(d+n, n) for n = 5, 6 through both routes.
    for (int n : {5, 6}) {
        const Space pn({n});
        for (long d : {-4L, 0L, 3L, 7L}) {
            const VectorBundle od = VectorBundle::line(pn, {static_cast<int>(d)});
            const YPoly lhs =
                integrate(pn, chern_character(od) * tangent_genus(GenusKind::Todd, pn));
            const KClass rhs = k_pushforward(Morphism::to_point(pn), KClass::line(pn, {(int)d}));
            CHECK(lhs == YPoly(euler_char_line(n, d)));
            CHECK(rhs.element().constant_term() == YPoly(euler_char_line(n, d)));
        }
    }
}

TEST_CASE("genus kind names resolve for the DSL") {
    CHECK(std::string(genus_kind_name(GenusKind::Chern)) == "chern");
    CHECK(std::string(genus_kind_name(GenusKind::Todd)) == "todd");
    CHECK(std::string(genus_kind_name(GenusKind::Lclass)) == "lclass");
    CHECK(std::string(genus_kind_name(GenusKind::Hirzebruch)) == "hirzebruch");
}
