#pragma once

#include "peis/rational.hpp"

#include <compare>
#include <string>

namespace peis {

/// Element of Z_p known modulo p^N (absolute precision N), p an odd prime.
///
/// Ring operations land at the smaller of the two precisions. Division by a
/// unit keeps that precision; dividing out p^v costs v digits. Nothing ever
/// raises the precision of a value it did not compute exactly.
class PadicInt {
public:
    PadicInt() = default;
    PadicInt(unsigned long p, long precision, const Integer& value);

    static PadicInt zero(unsigned long p, long precision) { return {p, precision, 0}; }
    static PadicInt one(unsigned long p, long precision) { return {p, precision, 1}; }
    /// Embeds a p-integral rational; throws otherwise.
    static PadicInt from_rational(const Rational& x, unsigned long p, long precision);

    unsigned long prime() const { return p_; }
    long precision() const { return precision_; }
    /// Canonical representative in [0, p^N).
    const Integer& residue() const { return residue_; }
    Integer modulus() const;
    /// Representative in (-p^N/2, p^N/2].
    Integer balanced_residue() const;

    bool is_zero() const { return residue_ == 0; }
    bool is_unit() const;

    /// Exact valuation when it is below N; otherwise returns N, meaning
    /// "at least N" (is_zero() is then true).
    long valuation() const;

    PadicInt with_precision(long precision) const;  // only lowers
    PadicInt inverse() const;                       // units only
    /// x / p^v for v <= valuation(x); precision drops by v.
    PadicInt divide_by_p_power(long v) const;
    PadicInt pow(const Integer& exponent) const;    // exponent >= 0, or any sign for units

    PadicInt operator-() const;
    PadicInt& operator+=(const PadicInt& rhs);
    PadicInt& operator-=(const PadicInt& rhs);
    PadicInt& operator*=(const PadicInt& rhs);
    PadicInt& operator/=(const PadicInt& rhs);  // rhs must be a unit

    friend PadicInt operator+(PadicInt a, const PadicInt& b) { return a += b; }
    friend PadicInt operator-(PadicInt a, const PadicInt& b) { return a -= b; }
    friend PadicInt operator*(PadicInt a, const PadicInt& b) { return a *= b; }
    friend PadicInt operator/(PadicInt a, const PadicInt& b) { return a /= b; }

    /// Equality of the values as far as both are known.
    bool congruent(const PadicInt& other) const;
    /// True when the two agree modulo p^k (k capped by both precisions).
    bool congruent_mod(const PadicInt& other, long k) const;
    /// Number of leading digits on which the two agree, capped by precision.
    long agreement(const PadicInt& other) const;
    bool congruent_to(const Rational& x) const;

    /// Exact structural equality (prime, precision, residue).
    friend bool operator==(const PadicInt&, const PadicInt&) = default;

    /// Digits "d0 + d1*p + ..." up to precision, followed by "O(p^N)".
    std::string digit_string() const;

private:
    void check_compatible(const PadicInt& other) const;

    unsigned long p_ = 3;
    long precision_ = 0;
    Integer residue_ = 0;
};

/// Teichmuller lift omega(a): the (p-1)-th root of unity congruent to a mod p.
PadicInt teichmuller(const Integer& a, unsigned long p, long precision);
PadicInt teichmuller(const PadicInt& a);

/// <a> = a / omega(a), the projection of a unit onto 1 + pZ_p.
PadicInt angle(const PadicInt& a);

/// p-adic logarithm on 1 + pZ_p. Isometric for odd p: the output precision
/// equals the input precision and v(log x) = v(x - 1).
PadicInt padic_log(const PadicInt& x);

/// p-adic exponential on pZ_p; inverse of padic_log, same precision rule.
PadicInt padic_exp(const PadicInt& y);

/// <c>^s = exp(s log <c>). Known modulo p^min(N_c, N_s + 1).
PadicInt angle_power(const PadicInt& c, const PadicInt& s);

/// A point (s, u) of weight space Z_p x Z/(p-1), acting on units by
/// a -> omega(a)^u <a>^s.
struct WeightCharacter {
    PadicInt s;
    unsigned long u = 0;

    unsigned long prime() const { return s.prime(); }
    /// The integer weight k viewed as (k, k mod p-1).
    static WeightCharacter integer(long k, unsigned long p, long precision);
    bool is_even() const { return u % 2 == 0; }
};

PadicInt weight_eval(const WeightCharacter& k, const PadicInt& a);

}  // namespace peis
