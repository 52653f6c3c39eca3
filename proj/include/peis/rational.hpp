#pragma once

// Exact integers and rationals (GMP-backed) plus the handful of
// number-theoretic helpers shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace peis {

using Integer = mpz_class;

/// Exact rational in lowest terms with positive denominator; zero is 0/1.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Canonical "num/den" form, "0/1" for zero.
std::string to_string(const Rational& x);
Rational parse_rational(std::string_view text);

/// {x} in [0, 1).
Rational fractional_part(const Rational& x);
Integer floor(const Rational& x);

/// Sentinel for v_p(0).
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

long valuation(const Integer& x, unsigned long p);
long valuation(const Rational& x, unsigned long p);

/// True when the rational lies in Z_(p).
inline bool is_p_integral(const Rational& x, unsigned long p) {
    return mpz_divisible_ui_p(x.get_den_mpz_t(), p) == 0;
}

Integer pow(const Integer& base, unsigned long exponent);
Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

/// Inverse of a modulo m; a must be a unit.
Integer inverse_mod(const Integer& a, const Integer& m);
/// Non-negative representative of a mod m.
Integer mod(const Integer& a, const Integer& m);

bool is_prime(unsigned long n);
std::vector<unsigned long> prime_factors(unsigned long n);  // distinct, ascending
std::vector<unsigned long> divisors(unsigned long n);       // ascending
unsigned long euler_phi(unsigned long n);
unsigned long gcd(unsigned long a, unsigned long b);
unsigned long lcm(unsigned long a, unsigned long b);
long long mod_ll(long long a, long long m);
unsigned long powmod_ul(unsigned long base, unsigned long exponent, unsigned long modulus);

/// Smallest primitive root modulo p^2 (hence modulo every p^k), p an odd prime.
unsigned long smallest_primitive_root_mod_p2(unsigned long p);
/// Smallest primitive root modulo the odd prime p.
unsigned long smallest_primitive_root(unsigned long p);

}  // namespace peis
