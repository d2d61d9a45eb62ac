#include "corrclass/ypoly.hpp"

#include <ostream>
#include <sstream>

namespace corrclass {

YPoly YPoly::y(unsigned k) {
    std::vector<Rational> c(k + 1, Rational(0));
    c[k] = Rational(1);
    return YPoly(std::move(c));
}

Rational YPoly::evaluate(const Rational& v) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

YPoly& YPoly::operator+=(const YPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

YPoly& YPoly::operator-=(const YPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

YPoly operator*(const YPoly& a, const YPoly& b) {
    if (a.is_zero() || b.is_zero()) return YPoly();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return YPoly(std::move(out));
}

YPoly operator-(const YPoly& a) {
    std::vector<Rational> out(a.coeffs_);
    for (auto& c : out) c = -c;
    return YPoly(std::move(out));
}

YPoly YPoly::operator/(const Rational& c) const {
    if (c.is_zero()) throw domain_error("YPoly: division by zero");
    std::vector<Rational> out(coeffs_);
    for (auto& x : out) x /= c;
    return YPoly(std::move(out));
}

YPoly YPoly::pow(unsigned k) const {
    YPoly acc(1), base(*this);
    while (k > 0) {
        if (k & 1u) acc *= base;
        base *= base;
        k >>= 1u;
    }
    return acc;
}

bool operator<(const YPoly& a, const YPoly& b) {
    const std::size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
    }
    return a.coeffs_.size() < b.coeffs_.size();
}

std::string YPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << mag.str();
        } else {
            if (!mag.is_one()) os << mag.str() << "*";
            os << "y";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const YPoly& p) { return os << p.str(); }

}  // namespace corrclass
