#include "peis/bernoulli.hpp"

#include "peis/error.hpp"

#include <mutex>

namespace peis {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

namespace {

// Shared memo table. Entries are appended under the lock and never mutated
// afterwards; readers copy the value out while holding it.
struct BernoulliTable {
    std::mutex lock;
    std::vector<Rational> values{Rational(1), Rational(-1, 2)};
};

BernoulliTable& table() {
    static BernoulliTable instance;
    return instance;
}

}  // namespace

Rational bernoulli_number(unsigned long n) {
    if (n >= 3 && n % 2 == 1) return 0;
    auto& t = table();
    std::lock_guard<std::mutex> guard(t.lock);
    // sum_{j=0}^{m} C(m+1, j) B_j = 0, solved for B_m. Odd B_j vanish past j = 1.
    for (unsigned long m = t.values.size(); m <= n; ++m) {
        if (m % 2 == 1) {
            t.values.emplace_back(0);
            continue;
        }
        Rational sum = t.values[0] + Rational(binomial(m + 1, 1)) * t.values[1];
        for (unsigned long j = 2; j < m; j += 2) sum += Rational(binomial(m + 1, j)) * t.values[j];
        Rational b = -sum / Rational(Integer(m + 1));
        b.canonicalize();
        t.values.push_back(b);
    }
    return t.values[n];
}

RationalPolynomial bernoulli_polynomial(unsigned long n) {
    std::vector<Rational> coefficients(n + 1);
    for (unsigned long i = 0; i <= n; ++i)
        coefficients[n - i] = Rational(binomial(n, i)) * bernoulli_number(i);
    return RationalPolynomial(std::move(coefficients));
}

Rational eval_poly(const RationalPolynomial& poly, const Rational& x) {
    Rational acc = 0;
    const auto& c = poly.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    acc.canonicalize();
    return acc;
}

Integer sigma_power(unsigned long n, unsigned long k) {
    require(n >= 1, "sigma_power requires n >= 1");
    Integer total = 0;
    for (auto d : divisors(n)) total += pow(Integer(d), k);
    return total;
}

Integer von_staudt_clausen_denominator(unsigned long n) {
    require(n >= 2 && n % 2 == 0, "von Staudt-Clausen denominator requires even n >= 2");
    Integer product = 1;
    for (auto d : divisors(n))
        if (is_prime(d + 1)) product *= d + 1;
    return product;
}

Rational zeta_at_one_minus(unsigned long k) {
    require(k >= 1, "zeta(1-k) requires k >= 1");
    Rational value = bernoulli_number(k) / Rational(Integer(k));
    if (k % 2 == 0) value = -value;
    value.canonicalize();
    return value;
}

}  // namespace peis
