#include "corrclass/ring.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

#include "corrclass/errors.hpp"

namespace corrclass {

NilpotentRing::NilpotentRing(std::vector<int> truncations, std::string generator_prefix)
    : truncations_(std::move(truncations)), prefix_(std::move(generator_prefix)) {
    for (int d : truncations_)
        if (d < 1) throw structural_error("NilpotentRing: truncation orders must be >= 1");
}

int NilpotentRing::top_degree() const {
    int total = 0;
    for (int d : truncations_) total += d - 1;
    return total;
}

std::vector<std::vector<int>> NilpotentRing::monomial_basis() const {
    std::vector<std::vector<int>> basis;
    std::vector<int> e(truncations_.size(), 0);
    while (true) {
        basis.push_back(e);
        int i = static_cast<int>(e.size()) - 1;
        while (i >= 0) {
            if (++e[static_cast<std::size_t>(i)] < truncations_[static_cast<std::size_t>(i)]) break;
            e[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return basis;  // odometer order == lexicographic
}

RingElement RingElement::constant(const NilpotentRing& ring, const YPoly& c) {
    RingElement x(ring);
    x.add_term(std::vector<int>(static_cast<std::size_t>(ring.generator_count()), 0), c);
    return x;
}

RingElement RingElement::generator(const NilpotentRing& ring, int i, int power) {
    if (i < 0 || i >= ring.generator_count())
        throw structural_error("RingElement::generator: index out of range");
    RingElement x(ring);
    std::vector<int> e(static_cast<std::size_t>(ring.generator_count()), 0);
    e[static_cast<std::size_t>(i)] = power;
    x.add_term(e, YPoly(1));
    return x;
}

RingElement RingElement::from_terms(const NilpotentRing& ring,
                                    std::map<std::vector<int>, YPoly> terms) {
    RingElement x(ring);
    for (auto& [e, c] : terms) x.add_term(e, c);
    return x;
}

void RingElement::add_term(const std::vector<int>& exponent, const YPoly& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(exponent.size()) != ring_.generator_count())
        throw structural_error("RingElement: exponent arity mismatch");
    for (int i = 0; i < ring_.generator_count(); ++i) {
        int e = exponent[static_cast<std::size_t>(i)];
        if (e < 0) throw structural_error("RingElement: negative exponent");
        if (e >= ring_.truncation(i)) return;  // truncated away
    }
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(exponent, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void RingElement::check_same_ring(const RingElement& o, const char* op) const {
    if (ring_ != o.ring_)
        throw structural_error(std::string("RingElement: ring mismatch in ") + op);
}

YPoly RingElement::coeff(const std::vector<int>& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? YPoly() : it->second;
}

YPoly RingElement::constant_term() const {
    return coeff(std::vector<int>(static_cast<std::size_t>(ring_.generator_count()), 0));
}

RingElement RingElement::nilpotent_part() const {
    RingElement x(*this);
    x.terms_.erase(std::vector<int>(static_cast<std::size_t>(ring_.generator_count()), 0));
    return x;
}

bool RingElement::is_homogeneous(int d) const {
    for (const auto& [e, c] : terms_) {
        if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
    }
    return true;
}

RingElement& RingElement::operator+=(const RingElement& o) {
    check_same_ring(o, "add");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
    check_same_ring(o, "sub");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    a.check_same_ring(b, "mul");
    RingElement out(a.ring_);
    const int k = a.ring_.generator_count();
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e(static_cast<std::size_t>(k));
            bool alive = true;
            for (int i = 0; i < k; ++i) {
                e[static_cast<std::size_t>(i)] =
                    ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)];
                if (e[static_cast<std::size_t>(i)] >= a.ring_.truncation(i)) {
                    alive = false;
                    break;
                }
            }
            if (alive) out.add_term(e, ca * cb);
        }
    }
    return out;
}

RingElement operator-(const RingElement& a) {
    RingElement out(a.ring_);
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
}

RingElement RingElement::scaled(const YPoly& c) const {
    RingElement out(ring_);
    if (c.is_zero()) return out;
    for (const auto& [e, t] : terms_) {
        YPoly p = t * c;
        if (!p.is_zero()) out.terms_.emplace(e, std::move(p));
    }
    return out;
}

RingElement RingElement::pow(unsigned k) const {
    RingElement acc = RingElement::constant(ring_, YPoly(1));
    RingElement base(*this);
    while (k > 0) {
        if (k & 1u) acc = acc * base;
        if (k >>= 1u) base = base * base;
    }
    return acc;
}

RingElement RingElement::evaluate_y(const Rational& v) const {
    RingElement out(ring_);
    for (const auto& [e, c] : terms_) {
        Rational r = c.evaluate(v);
        if (!r.is_zero()) out.terms_.emplace(e, YPoly(r));
    }
    return out;
}

bool operator<(const RingElement& a, const RingElement& b) {
    if (a.ring_.truncations() != b.ring_.truncations())
        return a.ring_.truncations() < b.ring_.truncations();
    if (a.ring_.generator_prefix() != b.ring_.generator_prefix())
        return a.ring_.generator_prefix() < b.ring_.generator_prefix();
    return a.terms_ < b.terms_;
}

RingElement invert_unit(const RingElement& u) {
    const YPoly c0 = u.constant_term();
    if (c0.is_zero() || !c0.is_constant())
        throw domain_error("invert_unit: constant term must be a nonzero rational");
    const Rational c = c0.coeff(0);
    // u = c(1 + n/c); inverse = (1/c) * sum_j (-n/c)^j, finite by nilpotency.
    const RingElement n = u.nilpotent_part().scaled(YPoly(Rational(-1) / c));
    RingElement acc = RingElement::constant(u.ring(), YPoly(Rational(1) / c));
    RingElement power = RingElement::constant(u.ring(), YPoly(Rational(1) / c));
    const int bound = u.ring().top_degree();
    for (int j = 1; j <= bound; ++j) {
        power = power * n;
        if (power.is_zero()) break;
        acc += power;
    }
    return acc;
}

std::string RingElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        // Each stored term is split into y-monomials so the printed list is
        // "coeff * h1^e1*... * y^j" throughout.
        for (int j = 0; j <= c.degree(); ++j) {
            Rational r = c.coeff(static_cast<unsigned>(j));
            if (r.is_zero()) continue;
            Rational mag = r.sign() < 0 ? -r : r;
            if (first) {
                if (r.sign() < 0) os << "-";
                first = false;
            } else {
                os << (r.sign() < 0 ? " - " : " + ");
            }
            std::ostringstream mono;
            bool any = false;
            for (int i = 0; i < ring_.generator_count(); ++i) {
                int p = e[static_cast<std::size_t>(i)];
                if (p == 0) continue;
                if (any) mono << "*";
                mono << ring_.generator_prefix() << (i + 1);
                if (p > 1) mono << "^" << p;
                any = true;
            }
            if (j > 0) {
                if (any) mono << "*";
                mono << "y";
                if (j > 1) mono << "^" << j;
                any = true;
            }
            if (!any) {
                os << mag.str();
            } else if (mag.is_one()) {
                os << mono.str();
            } else {
                os << mag.str() << "*" << mono.str();
            }
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RingElement& x) { return os << x.str(); }

}  // namespace corrclass
