#pragma once

#include <string>
#include <vector>

#include "corrclass/series.hpp"
#include "corrclass/spaces.hpp"

namespace corrclass {

/// The four multiplicative classes the engine evaluates. Hirzebruch keeps
/// the parameter y symbolic and specializes to the other three at
/// y = -1 (Chern), y = 0 (Todd), y = 1 (L).
enum class GenusKind { Chern, Todd, Lclass, Hirzebruch };

const char* genus_kind_name(GenusKind kind);

/// The factor series Q(x) of a genus; Q(0) = 1 for all four kinds.
const UnivariateSeries& genus_factor_series(GenusKind kind);

/// A multiset of formal Chern roots: degree-1 classes in one Chow ring.
using RootList = std::vector<RingElement>;

/// prod_i Q(alpha_i), exact and truncated. Roots must be homogeneous of
/// degree 1 and live in a single ring.
RingElement genus_class(GenusKind kind, const RootList& roots);

/// As above with the ambient ring passed explicitly, so the empty product
/// (= 1) is well-formed on the point.
RingElement genus_class(GenusKind kind, const RootList& roots, const NilpotentRing& ring);

/// Chern roots of a line-bundle sum: the linear forms sum_i d_i h_i.
RootList bundle_roots(const VectorBundle& bundle);

/// Total class of a bundle: genus_class over its roots.
RingElement genus_of_bundle(GenusKind kind, const VectorBundle& bundle);

/// ch(E) = sum over line summands of e^{sum d_i h_i}; the rank is the
/// constant term.
RingElement chern_character(const VectorBundle& bundle);

/// Euler-sequence roots of the tangent bundle of prod P^{n_i}: h_i with
/// multiplicity n_i + 1 per factor. (TX plus a trivial line per factor is
/// the sum of the O_i(1)^{n_i+1}; the extra root 0 contributes the factor
/// Q(0) = 1 to every genus.)
RootList tangent_roots(const Space& x);

/// genus_class(kind, tangent_roots(x)) in x's Chow ring.
RingElement tangent_genus(GenusKind kind, const Space& x);

/// Genus of the relative tangent bundle of f. For smooth f this is the
/// genus of the fiber-factor roots; in general it is the virtual quotient
/// genus(T source) / f^* genus(T target), computed with invert_unit.
RingElement relative_genus(GenusKind kind, const Morphism& f);

}  // namespace corrclass
