#include "corrclass/rational.hpp"

#include <ostream>

namespace corrclass {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw domain_error("Rational: empty string");
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw domain_error("Rational: malformed '" + text + "'");
    if (q.get_den() == 0) throw domain_error("Rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(long n, unsigned k) {
    // Extended binomial: n*(n-1)*...*(n-k+1) / k!, valid for negative n.
    Rational num(1);
    for (unsigned i = 0; i < k; ++i) num *= Rational(n - static_cast<long>(i));
    return num / factorial(k);
}

}  // namespace corrclass
