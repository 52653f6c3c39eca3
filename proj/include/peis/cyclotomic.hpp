#pragma once

#include "peis/padic.hpp"
#include "peis/rational.hpp"

#include <vector>

namespace peis {

/// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(unsigned long m);

/// Element of Q(zeta_m) stored as a polynomial in zeta_m of degree < phi(m),
/// reduced modulo Phi_m. Character values sit in Z[zeta_m]; generalized
/// Bernoulli numbers need the rational coefficients.
class CyclotomicValue {
public:
    CyclotomicValue() : CyclotomicValue(1) {}
    explicit CyclotomicValue(unsigned long order, const Rational& constant = 0);
    CyclotomicValue(unsigned long order, std::vector<Rational> coefficients);

    /// zeta_m^e.
    static CyclotomicValue root_of_unity(unsigned long order, long long exponent);

    unsigned long order() const { return order_; }
    /// Length phi(m); entry i multiplies zeta_m^i.
    const std::vector<Rational>& coefficients() const { return coefficients_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Valid only when is_rational().
    Rational rational_value() const;

    /// Same element re-expressed in Q(zeta_m') for a multiple m' of m.
    CyclotomicValue lift_to(unsigned long order) const;

    CyclotomicValue& operator+=(const CyclotomicValue& rhs);
    CyclotomicValue& operator-=(const CyclotomicValue& rhs);
    CyclotomicValue& operator*=(const CyclotomicValue& rhs);
    CyclotomicValue& operator*=(const Rational& rhs);
    friend CyclotomicValue operator+(CyclotomicValue a, const CyclotomicValue& b) { return a += b; }
    friend CyclotomicValue operator-(CyclotomicValue a, const CyclotomicValue& b) { return a -= b; }
    friend CyclotomicValue operator*(CyclotomicValue a, const CyclotomicValue& b) { return a *= b; }
    friend CyclotomicValue operator*(CyclotomicValue a, const Rational& b) { return a *= b; }
    friend CyclotomicValue operator*(const Rational& b, CyclotomicValue a) { return a *= b; }
    friend bool operator==(const CyclotomicValue& a, const CyclotomicValue& b);

    /// Image in Z_p under the fixed embedding zeta_m -> omega(g)^((p-1)/m),
    /// g = tame_embedding_root(p). Requires m | p-1 and p-integral coefficients.
    PadicInt to_padic(unsigned long p, long precision) const;

private:
    void reduce(std::vector<Rational> full);

    unsigned long order_;
    std::vector<Rational> coefficients_;
};

/// The primitive root g mod p^2 used both as the generator of (Z/p)^x in
/// character tables and to embed roots of unity of order dividing p-1 in Z_p.
unsigned long tame_embedding_root(unsigned long p);

}  // namespace peis
