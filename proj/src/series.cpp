#include "corrclass/series.hpp"

#include "corrclass/errors.hpp"

namespace corrclass {

UnivariateSeries::UnivariateSeries(Generator gen) : state_(std::make_shared<State>()) {
    state_->gen = std::move(gen);
}

UnivariateSeries UnivariateSeries::from_rule(std::function<YPoly(unsigned)> rule) {
    return UnivariateSeries(
        [rule = std::move(rule)](unsigned j, const std::vector<YPoly>&) { return rule(j); });
}

YPoly UnivariateSeries::coeff(unsigned j) const {
    std::lock_guard<std::mutex> lock(state_->mu);
    while (state_->memo.size() <= j) {
        const unsigned n = static_cast<unsigned>(state_->memo.size());
        state_->memo.push_back(state_->gen(n, state_->memo));
    }
    return state_->memo[j];
}

UnivariateSeries operator*(const UnivariateSeries& a, const UnivariateSeries& b) {
    return UnivariateSeries([a, b](unsigned n, const std::vector<YPoly>&) {
        YPoly acc;
        for (unsigned j = 0; j <= n; ++j) acc += a.coeff(j) * b.coeff(n - j);
        return acc;
    });
}

UnivariateSeries UnivariateSeries::reciprocal() const {
    const UnivariateSeries self(*this);
    const YPoly a0 = coeff(0);
    if (a0.is_zero() || !a0.is_constant())
        throw domain_error("UnivariateSeries::reciprocal: constant coefficient not a unit");
    const Rational c0 = a0.coeff(0);
    // b_0 = 1/a_0; b_n = -(1/a_0) sum_{j=1..n} a_j b_{n-j}, with b_{n-j}
    // read from the prefix of this series' own memo.
    return UnivariateSeries([self, c0](unsigned n, const std::vector<YPoly>& prefix) -> YPoly {
        if (n == 0) return YPoly(Rational(1) / c0);
        YPoly acc;
        for (unsigned j = 1; j <= n; ++j) acc += self.coeff(j) * prefix[n - j];
        return (-acc) * YPoly(Rational(1) / c0);
    });
}

UnivariateSeries UnivariateSeries::scale_argument(const YPoly& s) const {
    const UnivariateSeries self(*this);
    return UnivariateSeries(
        [self, s](unsigned j, const std::vector<YPoly>&) { return self.coeff(j) * s.pow(j); });
}

const UnivariateSeries& exp_series() {
    static const UnivariateSeries s =
        UnivariateSeries::from_rule([](unsigned j) { return YPoly(Rational(1) / factorial(j)); });
    return s;
}

const UnivariateSeries& todd_series() {
    // (1 - e^{-x})/x has coefficients (-1)^j/(j+1)!.
    static const UnivariateSeries s = UnivariateSeries::from_rule([](unsigned j) {
                                          Rational c = Rational(1) / factorial(j + 1);
                                          return YPoly(j % 2 == 0 ? c : -c);
                                      }).reciprocal();
    return s;
}

const UnivariateSeries& l_series() {
    // x/tanh x = cosh(x) / (sinh(x)/x); both factors are even series.
    static const UnivariateSeries cosh_s = UnivariateSeries::from_rule([](unsigned j) {
        return j % 2 == 0 ? YPoly(Rational(1) / factorial(j)) : YPoly();
    });
    static const UnivariateSeries sinh_over_x = UnivariateSeries::from_rule([](unsigned j) {
        return j % 2 == 0 ? YPoly(Rational(1) / factorial(j + 1)) : YPoly();
    });
    static const UnivariateSeries s = cosh_s * sinh_over_x.reciprocal();
    return s;
}

const UnivariateSeries& chern_factor_series() {
    static const UnivariateSeries s =
        UnivariateSeries::from_rule([](unsigned j) { return j <= 1 ? YPoly(1) : YPoly(); });
    return s;
}

const UnivariateSeries& hirzebruch_series() {
    // td(x(1+y)) - xy, with td the Todd factor.
    static const UnivariateSeries s = UnivariateSeries::from_rule([](unsigned j) {
        YPoly one_plus_y = YPoly(1) + YPoly::y();
        YPoly c = todd_series().coeff(j) * one_plus_y.pow(j);
        if (j == 1) c -= YPoly::y();
        return c;
    });
    return s;
}

RingElement series_substitute(const UnivariateSeries& s, const RingElement& x) {
    if (!x.constant_term().is_zero())
        throw domain_error("series_substitute: substitution point must be nilpotent");
    RingElement acc = RingElement::constant(x.ring(), s.coeff(0));
    RingElement power = RingElement::constant(x.ring(), YPoly(1));
    const int bound = x.ring().top_degree();
    for (int j = 1; j <= bound; ++j) {
        power = power * x;
        if (power.is_zero()) break;
        acc += power.scaled(s.coeff(static_cast<unsigned>(j)));
    }
    return acc;
}

}  // namespace corrclass
