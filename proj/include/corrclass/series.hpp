#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <vector>

#include "corrclass/ring.hpp"

namespace corrclass {

/// A univariate formal power series with YPoly coefficients, produced on
/// demand and memoized. Querying coefficient j twice yields identical
/// values; the memo is internally synchronized so shared series are safe
/// to use from several threads.
///
/// The generator is invoked in index order and receives the prefix of
/// already-computed coefficients, which lets recurrences (division) read
/// their own earlier terms without re-entering the lock.
class UnivariateSeries {
  public:
    using Generator = std::function<YPoly(unsigned, const std::vector<YPoly>&)>;

    explicit UnivariateSeries(Generator gen);
    /// Convenience for closed-form coefficient rules.
    static UnivariateSeries from_rule(std::function<YPoly(unsigned)> rule);

    YPoly coeff(unsigned j) const;

    /// Cauchy product.
    friend UnivariateSeries operator*(const UnivariateSeries& a, const UnivariateSeries& b);

    /// Multiplicative inverse; the constant coefficient must be a nonzero
    /// rational. Computed by the division recurrence, exactly.
    UnivariateSeries reciprocal() const;

    /// The series c_j -> c_j * s^j (substitution x -> s*x for a scalar s).
    UnivariateSeries scale_argument(const YPoly& s) const;

  private:
    struct State {
        Generator gen;
        mutable std::mutex mu;
        mutable std::vector<YPoly> memo;
    };
    std::shared_ptr<State> state_;
};

/// e^x.
const UnivariateSeries& exp_series();
/// x / (1 - e^{-x}): the Todd factor. Coefficients are the Bernoulli
/// numbers (B_1 = +1/2 convention) over factorials.
const UnivariateSeries& todd_series();
/// x / tanh x: the L-class factor.
const UnivariateSeries& l_series();
/// 1 + x: the Chern factor.
const UnivariateSeries& chern_factor_series();
/// x(1+y)/(1 - e^{-x(1+y)}) - xy: the Hirzebruch factor, y kept symbolic.
/// Specializes to the Chern factor at y = -1, Todd at y = 0, L at y = 1.
const UnivariateSeries& hirzebruch_series();

/// Sum_j c_j x^j for nilpotent x (zero constant term), a finite sum.
/// Throws domain_error when x has a nonzero constant term.
RingElement series_substitute(const UnivariateSeries& s, const RingElement& x);

}  // namespace corrclass
