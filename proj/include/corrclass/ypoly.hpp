#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "corrclass/rational.hpp"

namespace corrclass {

/// Polynomial in the Hirzebruch parameter y with exact rational
/// coefficients. The zero polynomial is the empty coefficient list; nonzero
/// polynomials never store a trailing zero coefficient.
///
/// Plain rationals embed as degree-0 polynomials, so YPoly is the single
/// coefficient type for both H_* ⊗ Q and H_* ⊗ Q[y].
class YPoly {
  public:
    YPoly() = default;
    YPoly(long c) : YPoly(Rational(c)) {}  // NOLINT: implicit by design
    YPoly(const Rational& c) {             // NOLINT: implicit by design
        if (!c.is_zero()) coeffs_.push_back(c);
    }
    explicit YPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    /// The monomial y^k.
    static YPoly y(unsigned k = 1);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Degree; -1 is the sentinel for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of y^k (zero when k exceeds the degree).
    Rational coeff(unsigned k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }

    /// Value at y = v, exactly.
    Rational evaluate(const Rational& v) const;

    YPoly& operator+=(const YPoly& o);
    YPoly& operator-=(const YPoly& o);
    YPoly& operator*=(const YPoly& o) { return *this = *this * o; }

    friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
    friend YPoly operator-(YPoly a, const YPoly& b) { return a -= b; }
    friend YPoly operator*(const YPoly& a, const YPoly& b);
    friend YPoly operator-(const YPoly& a);

    /// Division by a nonzero rational constant.
    YPoly operator/(const Rational& c) const;

    YPoly pow(unsigned k) const;

    friend bool operator==(const YPoly& a, const YPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const YPoly& a, const YPoly& b) { return !(a == b); }
    /// Lexicographic on coefficient lists; used only for canonical ordering.
    friend bool operator<(const YPoly& a, const YPoly& b);

    /// "3", "-1/2", "1 - y", "1/12*y^2", ... Deterministic.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const YPoly& p);

  private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;  // coeffs_[k] multiplies y^k
};

}  // namespace corrclass
