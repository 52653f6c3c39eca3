#include "peis/rational.hpp"

#include "peis/error.hpp"

#include <numeric>

namespace peis {

std::string to_string(const Rational& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return make_rational(Integer(s));
        Integer den(s.substr(slash + 1));
        if (den == 0) fail(ErrorCode::usage, "zero denominator in '" + s + "'");
        return make_rational(Integer(s.substr(0, slash)), den);
    } catch (const std::invalid_argument&) {
        fail(ErrorCode::usage, "not a rational number: '" + s + "'");
    }
}

Integer floor(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Rational fractional_part(const Rational& x) { return x - Rational(floor(x)); }

long valuation(const Integer& x, unsigned long p) {
    if (x == 0) return kInfiniteValuation;
    Integer p_z(p);
    Integer rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p_z.get_mpz_t()));
}

long valuation(const Rational& x, unsigned long p) {
    if (x == 0) return kInfiniteValuation;
    return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

Integer pow(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
        if (m == 1) return 0;
        fail(ErrorCode::precondition, "element is not invertible modulo " + m.get_str());
    }
    return r;
}

Integer mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<unsigned long> prime_factors(unsigned long n) {
    std::vector<unsigned long> out;
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> small, large;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (auto q : prime_factors(n)) result = result / q * (q - 1);
    return result;
}

unsigned long gcd(unsigned long a, unsigned long b) { return std::gcd(a, b); }
unsigned long lcm(unsigned long a, unsigned long b) { return std::lcm(a, b); }

long long mod_ll(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

unsigned long powmod_ul(unsigned long base, unsigned long exponent, unsigned long modulus) {
    unsigned __int128 result = 1 % modulus;
    unsigned __int128 b = base % modulus;
    while (exponent) {
        if (exponent & 1) result = result * b % modulus;
        b = b * b % modulus;
        exponent >>= 1;
    }
    return static_cast<unsigned long>(result);
}

namespace {

bool is_generator(unsigned long g, unsigned long modulus, unsigned long order) {
    if (gcd(g, modulus) != 1) return false;
    for (auto q : prime_factors(order))
        if (powmod_ul(g, order / q, modulus) == 1) return false;
    return true;
}

}  // namespace

unsigned long smallest_primitive_root(unsigned long p) {
    require(p > 2 && is_prime(p), "primitive root requires an odd prime");
    for (unsigned long g = 2;; ++g)
        if (is_generator(g, p, p - 1)) return g;
}

unsigned long smallest_primitive_root_mod_p2(unsigned long p) {
    require(p > 2 && is_prime(p), "primitive root requires an odd prime");
    for (unsigned long g = 2;; ++g)
        if (is_generator(g, p * p, p * (p - 1))) return g;
}

}  // namespace peis
