#pragma once

#include <cstdint>

#include "corrclass/bicycle.hpp"
#include "corrclass/rng.hpp"
#include "corrclass/zigzag.hpp"

namespace corrclass {

/// Aggregated outcome of one identity battery.
struct SuiteResult {
    std::string name;
    long cases = 0;
    long passes = 0;
    std::vector<std::string> failures;  // witness per failing case

    bool pass() const { return failures.empty(); }
    void record(bool ok, const std::string& witness);
    void record(const CheckResult& r, const std::string& context);
};

// ---- randomized model generators (deterministic in the Rng state) ----

/// A space with at most `max_factors` factors, every factor of dimension
/// >= 1 and total dimension <= max_total_dim; the point when the budget is
/// 0 or by chance.
Space random_space(Rng& rng, int max_total_dim, int max_factors);

/// Any model morphism source -> target (random mix of pulled and constant
/// factors).
Morphism random_morphism(Rng& rng, const Space& source, const Space& target);

/// A random proper-smooth correspondence X <- M -> Y whose apex is Y's
/// factors (shuffled) plus fiber factors within the dimension budget.
Correspondence random_proper_smooth(Rng& rng, const Space& x, const Space& y, int max_apex_dim);

/// A small Z-linear combination of proper-smooth correspondences.
CorrSum random_corr_sum(Rng& rng, const Space& x, const Space& y, int max_apex_dim,
                        int max_terms);

VectorBundle random_bundle(Rng& rng, const Space& base, int max_rank, int max_abs_degree);

Bicycle random_bicycle(Rng& rng, const Space& x, const Space& y, int max_apex_dim, int max_rank);
BicycleSum random_bicycle_sum(Rng& rng, const Space& x, const Space& y, int max_apex_dim,
                              int max_rank, int max_terms);

Zigzag random_zigzag(Rng& rng, ZigzagKind kind, const Space& x, const Space& y, int max_links,
                     int max_dim);

/// The composable test pairs shared by the covariance, naturality and
/// base-change suites (criterion 8 checks base change on exactly the fiber
/// squares these pairs generate).
struct ComposablePair {
    CorrSum a;  // X -> Y
    CorrSum b;  // Y -> Z
};
std::vector<ComposablePair> covariance_pairs(std::uint64_t seed, int count, int max_dim);

struct BicyclePair {
    BicycleSum a;
    BicycleSum b;
};
std::vector<BicyclePair> bicycle_pairs(std::uint64_t seed, int count, int max_dim);

struct ZigzagPair {
    Zigzag a;
    Zigzag b;
};
std::vector<ZigzagPair> zigzag_pairs(std::uint64_t seed, ZigzagKind kind, int count, int max_dim);

// ---- the batteries ----

/// Hirzebruch-Riemann-Roch desk check: integrate(P^n, ch(O(d)) td(TP^n))
/// == chi via K-pushforward == extended binomial, for 0<=n<=4, -3<=d<=5.
SuiteResult suite_hrr();

/// T_y at y = -1/0/1 equals Chern/Todd/L on random root lists.
SuiteResult suite_specializations(std::uint64_t seed, int count, int max_dim);

/// Covariance of all six functors on random composable pairs.
SuiteResult suite_covariance(std::uint64_t seed, int count, int max_dim);

/// Naturality of td_bfm, mac_chern, hirzebruch_ty on the same pairs.
SuiteResult suite_naturality(std::uint64_t seed, int count, int max_dim);

/// Base change ((h~)_* (g~)^* = g^* h_*) and the projection formula in the
/// Chow, K and constructible theories, on every fiber square the other
/// suites generate. The three counts mirror the covariance/naturality,
/// bicycle and zigzag suites so the squares are exactly theirs.
SuiteResult suite_base_change(std::uint64_t seed, int corr_count, int bicycle_count,
                              int zigzag_count, int max_dim);
inline SuiteResult suite_base_change(std::uint64_t seed, int count, int max_dim) {
    return suite_base_change(seed, count, std::max(1, count / 2), std::max(1, count / 2),
                             max_dim);
}

/// Bicycles: bilinearity, grade laws, covariance of the six bicycle
/// functors, td naturality, the double push/pull conjugation squares and
/// the three-factor decomposition.
SuiteResult suite_bicycle(std::uint64_t seed, int count, int max_dim);

/// Zigzags: covariance under juxtaposition for pro-smooth and pro-lci
/// kinds, naturality through zigzag operators, agreement with composed
/// correspondences.
SuiteResult suite_zigzag(std::uint64_t seed, int count, int max_dim);

/// Smooth category: pullback-dot contravariance and isomorphism
/// invariance of the smooth-correspondence operators.
SuiteResult suite_smooth(std::uint64_t seed, int count, int max_dim);

/// Negative controls: the twist-free naturality and the Koszul-free
/// pushforward must each FAIL with a witness. The suite passes when the
/// corrupted identities are detected as broken.
SuiteResult suite_negative_controls();

}  // namespace corrclass
