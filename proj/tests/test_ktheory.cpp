#include <doctest.h>

#include "corrclass/ktheory.hpp"
#include "corrclass/rng.hpp"
#include "corrclass/suites.hpp"

using namespace corrclass;

namespace {

// Independent oracle for chi(P^p, O(d)), d >= 0: count the monomials of
// degree d in p+1 variables by direct enumeration.
long count_monomials(int vars, int degree) {
    if (vars == 1) return 1;
    long total = 0;
    for (int first = 0; first <= degree; ++first)
        total += count_monomials(vars - 1, degree - first);
    return total;
}

KClass t_power(const Space& x, int factor, int power) {
    std::vector<int> e(static_cast<std::size_t>(x.factor_count()), 0);
    e[static_cast<std::size_t>(factor)] = power;
    return KClass::t_monomial(x, e);
}

const Space& p11_helper() {
    static const Space p11({1, 1});
    return p11;
}

}  // namespace

TEST_CASE("euler characteristics match the section-count oracle") {
    for (int p = 0; p <= 4; ++p)
        for (int d = 0; d <= 5; ++d)
            CHECK(euler_char_line(p, d) == Rational(count_monomials(p + 1, d)));
    // Negative twists in the vanishing range.
    CHECK(euler_char_line(2, -1) == Rational(0));
    CHECK(euler_char_line(2, -2) == Rational(0));
    // Serre duality: chi(P2, O(-3)) = chi(P2, O(0)) = 1.
    CHECK(euler_char_line(2, -3) == Rational(1));
    CHECK(euler_char_line(1, -2) == Rational(-1));
}

TEST_CASE("line bundle classes in the t-basis") {
    const Space p1({1});
    const KClass o1 = KClass::line(p1, {1});
    CHECK(o1.str() == "1 + t1");  // (1-t)^{-1} with t^2 = 0
    CHECK(KClass::line(p1, {0}) == KClass::structure_sheaf(p1));
    CHECK(o1 * o1 == KClass::line(p1, {2}));  // (1+t)^2 = 1 + 2t
    CHECK((o1 * o1).str() == "1 + 2*t1");
    // O(-1) = 1 - t exactly.
    CHECK(KClass::line(p1, {-1}).str() == "1 - t1");
}

TEST_CASE("k_of_bundle sums line classes") {
    const Space p11({1, 1});
    const VectorBundle e =
        VectorBundle::line(p11, {1, 0}).direct_sum(VectorBundle::line(p11, {0, 1}));
    CHECK(KClass::of_bundle(e) == KClass::line(p11, {1, 0}) + KClass::line(p11, {0, 1}));
}

TEST_CASE("k pullback examples") {
    const Space p11({1, 1});
    const Space p1({1});
    const Space p2({2});
    const Morphism proj = Morphism::projection(p11, {0});
    CHECK(k_pullback(proj, t_power(p1, 0, 1)) == t_power(p11, 0, 1));

    const Morphism emb(p1, p2, {FactorAssignment::pulled(0)});
    CHECK(k_pullback(emb, t_power(p2, 0, 2)).is_zero());
    // The embedding pulls O(-1) to O(-1), hence t to t.
    CHECK(k_pullback(emb, t_power(p2, 0, 1)) == t_power(p1, 0, 1));

    const Morphism cst(Space::point(), p2, {FactorAssignment::constant()});
    CHECK(k_pullback(cst, t_power(p2, 0, 1)).is_zero());
}

TEST_CASE("k pushforward examples") {
    const Space p2({2});
    const Space p1({1});
    // chi(P2, O(1)) = 3 global sections.
    const KClass pushed = k_pushforward(Morphism::to_point(p2), KClass::line(p2, {1}));
    CHECK(pushed.element().constant_term() == YPoly(Rational(count_monomials(3, 1))));

    // P1 x P1 -> P1 dropping the second factor: [O(0,3)] -> 4 [O(0)].
    const Space p11({1, 1});
    const Morphism drop2 = Morphism::projection(p11, {0});
    CHECK(k_pushforward(drop2, KClass::line(p11, {0, 3})) ==
          KClass::structure_sheaf(p1).scaled(YPoly(4)));

    // Koszul: pushing 1 along P1 -> P2 gives t.
    const Morphism emb(p1, p2, {FactorAssignment::pulled(0)});
    CHECK(k_pushforward(emb, KClass::structure_sheaf(p1)) == t_power(p2, 0, 1));
    // Point inclusion: 1 -> t^2 on P2.
    const Morphism pt_in(Space::point(), p2, {FactorAssignment::constant()});
    CHECK(k_pushforward(pt_in, KClass::structure_sheaf(Space::point())) == t_power(p2, 0, 2));
}

TEST_CASE("pushforward of the structure sheaf to a point is 1") {
    for (const Space& x :
         {Space({1}), Space({2}), Space({3}), Space({1, 1}), Space({2, 1}), Space({1, 1, 1})}) {
        const KClass chi = k_pushforward(Morphism::to_point(x), KClass::structure_sheaf(x));
        CHECK(chi == KClass::structure_sheaf(Space::point()));
    }
}

TEST_CASE("td_bfm examples") {
    const Space p1({1});
    CHECK(td_bfm(KClass::structure_sheaf(p1)).str() == "1 + h1");
    // t = [O_pt] on P1: ch(t) = h, times td = 1 + h, truncated: h.
    CHECK(td_bfm(t_power(p1, 0, 1)) == RingElement::generator(p1.chow_ring(), 0));
    CHECK(td_bfm(KClass::zero(p1)).is_zero());
}

TEST_CASE("GRR: td_bfm commutes with proper pushforward on a generated suite") {
    const Space p1({1});
    const Space p2({2});
    const Space p11({1, 1});
    const Space p21({2, 1});
    std::vector<Morphism> suite = {
        Morphism::to_point(p1),
        Morphism::to_point(p2),
        Morphism::to_point(p21),
        Morphism::projection(p11, {0}),
        Morphism::projection(p21, {1}),
        Morphism(p1, p2, {FactorAssignment::pulled(0)}),
        Morphism(Space::point(), p2, {FactorAssignment::constant()}),
        Morphism(p1, p21, {FactorAssignment::pulled(0), FactorAssignment::constant()}),
        Morphism::permutation(p11, {1, 0}),
        // Compositions: embed then project, embed then embed.
        compose_morphisms(Morphism(p1, p2, {FactorAssignment::pulled(0)}),
                          Morphism::to_point(p2)),
        compose_morphisms(Morphism(p1, p11, {FactorAssignment::pulled(0),
                                             FactorAssignment::constant()}),
                          Morphism(p11, p21,
                                   {FactorAssignment::pulled(0), FactorAssignment::pulled(1)})),
    };
    for (const Morphism& f : suite) {
        for (const auto& e : f.source().k_ring().monomial_basis()) {
            const KClass a = KClass::t_monomial(f.source(), e);
            CHECK(chow_pushforward(f, td_bfm(a)) == td_bfm(k_pushforward(f, a)));
        }
    }
}

TEST_CASE("VRR for smooth morphisms") {
    Rng rng(77);
    for (int i = 0; i < 50; ++i) {
        const Space y = random_space(rng, 3, 2);
        const auto corr = random_proper_smooth(rng, Space::point(), y, 5);
        const Morphism g = corr.right();
        for (const auto& e : y.k_ring().monomial_basis()) {
            const KClass a = KClass::t_monomial(y, e);
            CHECK(td_bfm(k_pullback(g, a)) ==
                  relative_genus(GenusKind::Todd, g) * chow_pullback(g, td_bfm(a)));
        }
    }
}

TEST_CASE("VRR for embeddings with the virtual relative tangent class") {
    const Space p1({1});
    const Space p2({2});
    const Space p3({3});
    const Space p21({2, 1});
    const std::vector<Morphism> embeddings = {
        Morphism(p1, p2, {FactorAssignment::pulled(0)}),
        Morphism(p1, p3, {FactorAssignment::pulled(0)}),
        Morphism(p2, p3, {FactorAssignment::pulled(0)}),
        Morphism(p11_helper(), p21, {FactorAssignment::pulled(0), FactorAssignment::pulled(1)}),
        Morphism(Space::point(), p2, {FactorAssignment::constant()}),
    };
    for (const Morphism& g : embeddings) {
        for (const auto& e : g.target().k_ring().monomial_basis()) {
            const KClass a = KClass::t_monomial(g.target(), e);
            CHECK(td_bfm(k_pullback(g, a)) ==
                  relative_genus(GenusKind::Todd, g) * chow_pullback(g, td_bfm(a)));
        }
    }
}

TEST_CASE("base change in K-theory on model fiber squares") {
    Rng rng(53);
    for (int i = 0; i < 60; ++i) {
        const Space y = random_space(rng, 3, 2);
        const Space n = random_space(rng, 3, 2);
        const auto corr = random_proper_smooth(rng, n, y, 5);
        const Morphism g = corr.right();
        const Morphism h = random_morphism(rng, n, y);
        const FiberSquare sq = fiber_product(g, h);
        for (const auto& e : n.k_ring().monomial_basis()) {
            const KClass v = KClass::t_monomial(n, e);
            CHECK(k_pushforward(sq.h_tilde, k_pullback(sq.g_tilde, v)) ==
                  k_pullback(g, k_pushforward(h, v)));
        }
    }
}

TEST_CASE("k-class O-basis printing") {
    const Space p1({1});
    CHECK(k_obasis_str(KClass::structure_sheaf(p1)) == "O(0)");
    // t = 1 - [O(-1)].
    CHECK(k_obasis_str(t_power(p1, 0, 1)) == "-O(-1) + O(0)");
    CHECK(k_obasis_str(KClass::zero(p1)) == "0");
}
