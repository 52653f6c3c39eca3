#pragma once

#include "peis/rational.hpp"

#include <vector>

namespace peis {

/// Polynomial over Q; coefficients[i] multiplies X^i. Trailing zeros are
/// trimmed, so the zero polynomial has no coefficients.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coefficients);

    const std::vector<Rational>& coefficients() const { return coefficients_; }
    long degree() const { return static_cast<long>(coefficients_.size()) - 1; }
    bool is_zero() const { return coefficients_.empty(); }
    Rational coefficient(std::size_t i) const {
        return i < coefficients_.size() ? coefficients_[i] : Rational(0);
    }

    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

private:
    std::vector<Rational> coefficients_;
};

/// B_n with the convention B_n = B_n(0), so B_1 = -1/2. Memoized; safe to
/// call from several threads.
Rational bernoulli_number(unsigned long n);

/// B_n(X) = sum_i C(n, i) B_i X^(n-i).
RationalPolynomial bernoulli_polynomial(unsigned long n);

/// Horner evaluation.
Rational eval_poly(const RationalPolynomial& poly, const Rational& x);

/// sum_{d | n} d^k.
Integer sigma_power(unsigned long n, unsigned long k);

/// prod of primes l with (l - 1) | n; the denominator of B_n for even n >= 2.
Integer von_staudt_clausen_denominator(unsigned long n);

/// zeta(1 - k) = (-1)^(k+1) B_k / k for k >= 1.
Rational zeta_at_one_minus(unsigned long k);

}  // namespace peis
