#pragma once

// Independent reference computations for the unit tests. Nothing here calls
// into the library's algorithms; only the Integer/Rational types are shared.

#include "peis/rational.hpp"

#include <vector>

namespace oracle {

using peis::Integer;
using peis::Rational;

inline Rational q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Akiyama-Tanigawa; yields B_1 = +1/2, so the sign of index 1 is flipped.
inline Rational bernoulli(unsigned long n) {
    std::vector<Rational> a(n + 1);
    for (unsigned long m = 0; m <= n; ++m) {
        a[m] = Rational(1, m + 1);
        for (unsigned long j = m; j >= 1; --j) {
            a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
            a[j - 1].canonicalize();
        }
    }
    return n == 1 ? Rational(-a[0]) : a[0];
}

inline Integer binom(unsigned long n, unsigned long k) {
    Integer r = 1;
    for (unsigned long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

inline Rational bernoulli_poly(unsigned long n, const Rational& x) {
    Rational total = 0;
    Rational xp = 1;
    for (unsigned long i = 0; i <= n; ++i) {
        total += Rational(binom(n, i)) * bernoulli(n - i) * xp;
        xp *= x;
    }
    total.canonicalize();
    return total;
}

inline Integer ipow(const Integer& b, unsigned long e) {
    Integer r = 1;
    for (unsigned long i = 0; i < e; ++i) r *= b;
    return r;
}

inline Integer divisor_power_sum(unsigned long n, unsigned long k, unsigned long skip_multiples_of = 0) {
    Integer total = 0;
    for (unsigned long d = 1; d <= n; ++d)
        if (n % d == 0 && (skip_multiples_of == 0 || d % skip_multiples_of != 0)) total += ipow(Integer(d), k);
    return total;
}

inline long valuation(Integer x, unsigned long p) {
    if (x == 0) return 1000000;
    long v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

inline long valuation(const Rational& x, unsigned long p) {
    if (x == 0) return 1000000;
    return valuation(Integer(x.get_num()), p) - valuation(Integer(x.get_den()), p);
}

inline Integer mod(Integer a, const Integer& m) {
    a %= m;
    if (a < 0) a += m;
    return a;
}

inline Integer invert(const Integer& a, const Integer& m) {
    Integer r;
    mpz_invert(r.get_mpz_t(), mod(a, m).get_mpz_t(), m.get_mpz_t());
    return r;
}

// Residue of a p-integral rational modulo p^n.
inline Integer residue(const Rational& x, unsigned long p, long n) {
    const Integer m = ipow(Integer(p), static_cast<unsigned long>(n));
    return mod(Integer(x.get_num()) * invert(Integer(x.get_den()), m), m);
}

// x -> x^p iterated n times fixes the Teichmuller lift modulo p^n.
inline Integer teichmuller(long a, unsigned long p, long n) {
    const Integer m = ipow(Integer(p), static_cast<unsigned long>(n));
    Integer x = mod(Integer(a), m);
    for (long i = 0; i < n + 1; ++i) mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), p, m.get_mpz_t());
    return x;
}

// log(x) for x = 1 mod p by the raw series with exact rational terms.
inline Integer log_series(const Integer& x, unsigned long p, long n) {
    Rational total = 0;
    const Integer y = x - 1;
    Integer yi = 1;
    for (long i = 1; i <= 4 * n + 8; ++i) {
        yi *= y;
        Rational term(yi, Integer(i));
        term.canonicalize();
        total += (i % 2 == 1) ? term : Rational(-term);
    }
    return residue(total, p, n);
}

// B_{n,chi} for a real character given by its table chi[0..f-1].
inline Rational generalized_bernoulli(unsigned long n, const std::vector<int>& chi, unsigned long big_f) {
    const unsigned long f = chi.size();
    Rational total = 0;
    for (unsigned long a = 1; a <= big_f; ++a)
        if (chi[a % f] != 0) total += Rational(chi[a % f]) * bernoulli_poly(n, q(static_cast<long>(a), static_cast<long>(big_f)));
    return total * Rational(ipow(Integer(big_f), n - 1));
}

inline Rational zeta_one_minus(unsigned long k) {
    Rational r = bernoulli(k) / Rational(k);
    if (k % 2 == 0) r = -r;
    r.canonicalize();
    return r;
}

inline Rational zeta_star(unsigned long k, unsigned long p) {
    return (1 - Rational(ipow(Integer(p), k - 1))) * zeta_one_minus(k);
}

}  // namespace oracle
