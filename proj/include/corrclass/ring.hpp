#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "corrclass/ypoly.hpp"

namespace corrclass {

/// A ring Q[y][g_1..g_k] / (g_i^{d_i}) of truncated polynomials in
/// nilpotent generators. Chow rings of products of projective spaces use
/// generators h_i with d_i = n_i + 1; the K-theory model uses t_i with the
/// same truncations. k = 0 is the ring of a point.
class NilpotentRing {
  public:
    NilpotentRing() = default;
    explicit NilpotentRing(std::vector<int> truncations, std::string generator_prefix = "h");

    int generator_count() const { return static_cast<int>(truncations_.size()); }
    int truncation(int i) const { return truncations_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& truncations() const { return truncations_; }
    const std::string& generator_prefix() const { return prefix_; }

    /// Sum over generators of (d_i - 1): the largest total degree of a
    /// nonzero monomial.
    int top_degree() const;

    /// All exponent vectors e with 0 <= e_i < d_i, in lexicographic order.
    /// This is the canonical monomial basis.
    std::vector<std::vector<int>> monomial_basis() const;

    friend bool operator==(const NilpotentRing& a, const NilpotentRing& b) {
        return a.truncations_ == b.truncations_ && a.prefix_ == b.prefix_;
    }
    friend bool operator!=(const NilpotentRing& a, const NilpotentRing& b) { return !(a == b); }

  private:
    std::vector<int> truncations_;
    std::string prefix_ = "h";
};

/// An element of a NilpotentRing: a sparse map from exponent vectors to
/// YPoly coefficients. Normalized: no zero coefficients, every exponent
/// within truncation. Immutable in spirit; operators return new values.
class RingElement {
  public:
    RingElement() = default;
    explicit RingElement(NilpotentRing ring) : ring_(std::move(ring)) {}

    /// The constant c as an element of `ring`.
    static RingElement constant(const NilpotentRing& ring, const YPoly& c);
    /// The generator g_i (degree-1 hyperplane class).
    static RingElement generator(const NilpotentRing& ring, int i, int power = 1);
    /// Builds from raw terms (truncating and pruning).
    static RingElement from_terms(const NilpotentRing& ring,
                                  std::map<std::vector<int>, YPoly> terms);

    const NilpotentRing& ring() const { return ring_; }
    const std::map<std::vector<int>, YPoly>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    YPoly coeff(const std::vector<int>& exponent) const;
    YPoly constant_term() const;
    /// this - constant_term(): the nilpotent part.
    RingElement nilpotent_part() const;
    /// True when every monomial has total degree `d` (the zero element is
    /// homogeneous of every degree).
    bool is_homogeneous(int d) const;

    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a);

    RingElement scaled(const YPoly& c) const;
    RingElement pow(unsigned k) const;

    /// Substitutes a rational value for y in every coefficient.
    RingElement evaluate_y(const Rational& v) const;

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }
    /// Canonical ordering (ring, then term list); for use as map keys.
    friend bool operator<(const RingElement& a, const RingElement& b);

    /// Sorted term list "c * h1^2*h2 * y^3 + ...". Deterministic.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const RingElement& x);

  private:
    void add_term(const std::vector<int>& exponent, const YPoly& c);
    void check_same_ring(const RingElement& o, const char* op) const;

    NilpotentRing ring_;
    std::map<std::vector<int>, YPoly> terms_;
};

/// Multiplicative inverse of a unit: the constant term must be a nonzero
/// rational (degree-0 YPoly). Exact; u * invert_unit(u) == 1.
RingElement invert_unit(const RingElement& u);

}  // namespace corrclass
