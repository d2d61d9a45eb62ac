#include <doctest.h>

#include "corrclass/corr.hpp"
#include "corrclass/rng.hpp"
#include "corrclass/suites.hpp"

using namespace corrclass;

namespace {

Correspondence span_over_point(const Space& apex) {
    return Correspondence(Morphism::to_point(apex), Morphism::to_point(apex));
}

std::vector<std::vector<YPoly>> identity_matrix(std::size_t n) {
    std::vector<std::vector<YPoly>> m(n, std::vector<YPoly>(n, YPoly()));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = YPoly(1);
    return m;
}

}  // namespace

TEST_CASE("canonicalization identifies apex factor orders") {
    const Space p12({1, 2});
    const Space p21({2, 1});
    const Correspondence a = span_over_point(p12);
    const Correspondence b = span_over_point(p21);
    CHECK(a.canonicalize() == b.canonicalize());
    CHECK(a.canonicalize() == a.canonicalize().canonicalize());
}

TEST_CASE("correspondence construction validates tags") {
    const Space p1({1});
    const Space p2({2});
    const Morphism emb(p1, p2, {FactorAssignment::pulled(0)});
    // An embedding is not smooth, so it cannot be a right leg by default.
    CHECK_THROWS_AS(Correspondence(Morphism::identity(p1), emb), unsupported_leg_error);
    // It is a valid l.c.i. right leg.
    const Correspondence lci(Morphism::identity(p1), emb, MorphClass::Proper, MorphClass::Lci);
    CHECK(lci.right_class() == MorphClass::Lci);
    // Iso tags demand isomorphisms.
    CHECK_THROWS_AS(
        Correspondence(Morphism::to_point(p1), Morphism::identity(p1), MorphClass::Iso,
                       MorphClass::Smooth),
        unsupported_leg_error);
}

TEST_CASE("composition over a point is the product of apexes") {
    const Correspondence a = span_over_point(Space({1}));
    const Correspondence b = span_over_point(Space({2}));
    const Correspondence ab = corr_compose(a, b);
    CHECK(ab.apex() == Space({1, 2}));  // factors sorted by dimension
    CHECK(ab.canonicalize() == span_over_point(Space({1, 2})).canonicalize());
}

TEST_CASE("identity correspondence is neutral") {
    Rng rng(61);
    for (int i = 0; i < 30; ++i) {
        const Space x = random_space(rng, 3, 2);
        const Space y = random_space(rng, 3, 2);
        const Correspondence c = random_proper_smooth(rng, x, y, 5);
        CHECK(corr_compose(c, Correspondence::identity(y)) == c.canonicalize());
        CHECK(corr_compose(Correspondence::identity(x), c) == c.canonicalize());
    }
}

TEST_CASE("composing identity-smooth with proper-identity takes the fiber product") {
    // alpha = (X <-id X ->g Y), beta = (Y <-h N ->id N): the composite apex
    // is the fiber product of g and h.
    const Space x({2, 1});
    const Space y({2});
    const Morphism g = Morphism::projection(x, {0});
    const Morphism h(Space({1}), y, {FactorAssignment::pulled(0)});  // P1 -> P2
    const Correspondence alpha = Correspondence::identity_smooth(g);
    const Correspondence beta = Correspondence::proper_identity(h);
    const Correspondence ab = corr_compose(alpha, beta);
    const FiberSquare sq = fiber_product(g, h);
    CHECK(ab.apex() == canonicalize_apex({sq.h_tilde, sq.g_tilde})[0].source());
    CHECK(ab.source() == x);
    CHECK(ab.target() == Space({1}));
}

TEST_CASE("bilinearity of the extended composition") {
    Rng rng(67);
    const Space x({1}), y({1}), z = Space::point();
    const CorrSum a = random_corr_sum(rng, x, y, 4, 2);
    const CorrSum b = random_corr_sum(rng, x, y, 4, 2);
    const CorrSum c = random_corr_sum(rng, y, z, 4, 2);
    CHECK(corrsum_compose(a + b, c) == corrsum_compose(a, c) + corrsum_compose(b, c));
    CHECK(corrsum_compose(CorrSum(x, y), c) == CorrSum(x, z));
    CHECK(corrsum_compose(a - a, c).is_zero());
}

TEST_CASE("the Hecke ring of the point multiplies like products of spaces") {
    // Corr(pt,pt)^+ with apexes P(a) x P(b): composition takes disjoint
    // apex products.
    const Correspondence p1 = span_over_point(Space({1}));
    const Correspondence p2 = span_over_point(Space({2}));
    const Correspondence p11 = span_over_point(Space({1, 1}));
    const CorrSum s1 = CorrSum::of(p1);
    const CorrSum s2 = CorrSum::of(p2);
    CHECK(corrsum_compose(s1, s2) == CorrSum::of(span_over_point(Space({1, 2}))));
    CHECK(corrsum_compose(s1, s1) == CorrSum::of(p11));
    // Commutative and associative on these generators.
    CHECK(corrsum_compose(s1, s2) == corrsum_compose(s2, s1));
    CHECK(corrsum_compose(corrsum_compose(s1, s2), s1) ==
          corrsum_compose(s1, corrsum_compose(s2, s1)));
}

TEST_CASE("composition is associative after canonicalization") {
    Rng rng(71);
    for (int i = 0; i < 25; ++i) {
        const Space x = random_space(rng, 2, 1);
        const Space y = random_space(rng, 2, 1);
        const Space z = random_space(rng, 2, 1);
        const Space w = random_space(rng, 2, 1);
        const Correspondence a = random_proper_smooth(rng, x, y, 4);
        const Correspondence b = random_proper_smooth(rng, y, z, 4);
        const Correspondence c = random_proper_smooth(rng, z, w, 4);
        CHECK(corr_compose(corr_compose(a, b), c) == corr_compose(a, corr_compose(b, c)));
    }
}

TEST_CASE("operator examples") {
    // HTodd on (pt <- P2 -> pt): 1 -> chi(O_{P2}) = 1 by HRR.
    const LinearOperator htodd =
        corr_operator(FunctorId::HTodd, span_over_point(Space({2})));
    CHECK(htodd.matrix() == identity_matrix(1));

    // HChern on (pt <- P1 -> pt): 1 -> chi_top(P1) = 2.
    const LinearOperator hchern =
        corr_operator(FunctorId::HChern, span_over_point(Space({1})));
    CHECK(hchern.matrix() == std::vector<std::vector<YPoly>>{{YPoly(2)}});

    // G0 on the identity correspondence is the identity matrix.
    const Space p21({2, 1});
    const LinearOperator g0 = corr_operator(FunctorId::G0, Correspondence::identity(p21));
    CHECK(g0.matrix() == identity_matrix(p21.k_ring().monomial_basis().size()));

    // HHirz on (pt <- P2 -> pt): 1 -> chi_y(P2) = 1 - y + y^2.
    const LinearOperator hhirz =
        corr_operator(FunctorId::HHirz, span_over_point(Space({2})));
    const YPoly chi_y = YPoly(1) - YPoly::y() + YPoly::y(2);
    CHECK(hhirz.matrix() == std::vector<std::vector<YPoly>>{{chi_y}});
}

TEST_CASE("functoriality example: chern counts multiply") {
    const Correspondence a = span_over_point(Space({1}));
    const Correspondence b = span_over_point(Space({2}));
    CHECK(check_functoriality(FunctorId::HChern, CorrSum::of(a), CorrSum::of(b)).pass);
    // chi_top(P1 x P2) = 6.
    const LinearOperator prod =
        corr_operator(FunctorId::HChern, corrsum_compose(CorrSum::of(a), CorrSum::of(b)));
    CHECK(prod.matrix() == std::vector<std::vector<YPoly>>{{YPoly(6)}});
}

TEST_CASE("naturality examples") {
    // Trivially commutes on the identity correspondence.
    CHECK(check_naturality(TransformId::TdBfm,
                           CorrSum::of(Correspondence::identity(Space({2, 1}))))
              .pass);
    // (pt <- P1 ->id P1): td naturality reduces to GRR for P1 -> pt.
    const Space p1({1});
    const Correspondence c(Morphism::to_point(p1), Morphism::identity(p1));
    CHECK(check_naturality(TransformId::TdBfm, CorrSum::of(c)).pass);
    CHECK(check_naturality(TransformId::MacChern, CorrSum::of(c)).pass);
    CHECK(check_naturality(TransformId::HirzebruchTy, CorrSum::of(c)).pass);
}

TEST_CASE("dropping the twist breaks naturality with a witness") {
    const Space p1({1});
    const Correspondence c(Morphism::to_point(p1), Morphism::to_point(p1));
    const CheckResult r = check_naturality_without_twist(TransformId::TdBfm, CorrSum::of(c));
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.witness.empty());
    // On a proper-identity correspondence there is no fiber, so dropping
    // the twist changes nothing.
    const Correspondence pid = Correspondence::proper_identity(Morphism::to_point(p1));
    CHECK(check_naturality_without_twist(TransformId::TdBfm, CorrSum::of(pid)).pass);
}

TEST_CASE("operators are well-defined on isomorphism classes") {
    Rng rng(83);
    for (int i = 0; i < 20; ++i) {
        const Space x = random_space(rng, 2, 1);
        const Space y = random_space(rng, 2, 1);
        const Correspondence c = random_proper_smooth(rng, x, y, 5);
        std::vector<int> perm(static_cast<std::size_t>(c.apex().factor_count()));
        for (std::size_t p = 0; p < perm.size(); ++p) perm[p] = static_cast<int>(p);
        for (std::size_t p = perm.size(); p > 1; --p)
            std::swap(perm[p - 1], perm[static_cast<std::size_t>(rng.uniform(0, (int)p - 1))]);
        const Correspondence permuted = c.permuted_apex(perm);
        CHECK(permuted.canonicalize() == c.canonicalize());
        for (FunctorId fid : {FunctorId::G0, FunctorId::HTodd, FunctorId::F, FunctorId::HChern,
                              FunctorId::K0V, FunctorId::HHirz}) {
            CHECK(corr_operator(fid, CorrSum::of(c)) ==
                  corr_operator(fid, CorrSum::of(permuted)));
        }
    }
}

TEST_CASE("restriction to proper-identity correspondences is plain pushforward") {
    Rng rng(89);
    for (int i = 0; i < 20; ++i) {
        const Space y = random_space(rng, 3, 2);
        const Space x = random_space(rng, 3, 2);
        const Morphism f = random_morphism(rng, y, x);  // proper morphism Y -> X
        const Correspondence pid = Correspondence::proper_identity(f);
        // G0 and HTodd act as bare pushforwards.
        for (const auto& e : y.k_ring().monomial_basis()) {
            const KClass v = KClass::t_monomial(y, e);
            CHECK(std::get<KClass>(apply_corr(FunctorId::G0, pid, v)) == k_pushforward(f, v));
        }
        for (const auto& e : y.chow_ring().monomial_basis()) {
            std::map<std::vector<int>, YPoly> t;
            t.emplace(e, YPoly(1));
            const RingElement v = RingElement::from_terms(y.chow_ring(), std::move(t));
            CHECK(std::get<RingElement>(apply_corr(FunctorId::HTodd, pid, v)) ==
                  chow_pushforward(f, v));
        }
    }
}

TEST_CASE("restriction to identity-smooth correspondences is the twisted pullback") {
    Rng rng(97);
    for (int i = 0; i < 20; ++i) {
        const Space y = random_space(rng, 3, 2);
        const Morphism g = random_proper_smooth(rng, Space::point(), y, 5).right();
        const Correspondence ids = Correspondence::identity_smooth(g);
        for (const auto& e : y.chow_ring().monomial_basis()) {
            std::map<std::vector<int>, YPoly> t;
            t.emplace(e, YPoly(1));
            const RingElement v = RingElement::from_terms(y.chow_ring(), std::move(t));
            CHECK(std::get<RingElement>(apply_corr(FunctorId::HTodd, ids, v)) ==
                  relative_genus(GenusKind::Todd, g) * chow_pullback(g, v));
        }
        for (const auto& e : y.k_ring().monomial_basis()) {
            const KClass v = KClass::t_monomial(y, e);
            CHECK(std::get<KClass>(apply_corr(FunctorId::G0, ids, v)) == k_pullback(g, v));
        }
    }
}

TEST_CASE("covariance holds on randomized composable pairs for every functor") {
    const SuiteResult r = suite_covariance(404, 25, 6);
    CHECK(r.pass());
    CHECK(r.cases == 25 * 6);
}

TEST_CASE("naturality holds on randomized pairs for all three transforms") {
    const SuiteResult r = suite_naturality(404, 25, 6);
    CHECK(r.pass());
}

TEST_CASE("functor names round-trip") {
    for (FunctorId fid : {FunctorId::G0, FunctorId::HTodd, FunctorId::F, FunctorId::HChern,
                          FunctorId::K0V, FunctorId::HHirz})
        CHECK(functor_from_name(functor_name(fid)) == fid);
    CHECK_THROWS_AS(functor_from_name("nope"), structural_error);
}

TEST_CASE("K0V operators have no coordinate matrix") {
    const LinearOperator op =
        corr_operator(FunctorId::K0V, Correspondence::identity(Space({1})));
    CHECK_FALSE(op.has_matrix());
    CHECK_THROWS_AS((void)op.matrix(), structural_error);
}
