#include "oracles.hpp"

#include "peis/bernoulli.hpp"
#include "peis/error.hpp"

#include <doctest.h>

using namespace peis;
using oracle::q;

TEST_SUITE("exact-arith") {
    TEST_CASE("oracle agrees with the memoized recurrence") {
        for (unsigned long n = 0; n <= 60; ++n) CHECK(bernoulli_number(n) == oracle::bernoulli(n));
    }

    TEST_CASE("bernoulli numbers") {
        CHECK(bernoulli_number(0) == 1);
        CHECK(bernoulli_number(1) == q(-1, 2));
        CHECK(bernoulli_number(2) == q(1, 6));
        CHECK(bernoulli_number(12) == q(-691, 2730));
        for (unsigned long n = 3; n <= 61; n += 2) CHECK(bernoulli_number(n) == 0);
    }

    TEST_CASE("rational serialization is canonical") {
        CHECK(to_string(bernoulli_number(12)) == "-691/2730");
        CHECK(to_string(Rational(0)) == "0/1");
        CHECK(to_string(bernoulli_number(0)) == "1/1");
        CHECK(parse_rational("6/-4") == q(-3, 2));
        CHECK(parse_rational("-2") == -2);
        CHECK_THROWS_AS(parse_rational("1/0"), Error);
        CHECK_THROWS_AS(parse_rational("x"), Error);
    }

    TEST_CASE("bernoulli polynomials") {
        CHECK(bernoulli_polynomial(0).coefficients() == std::vector<Rational>{1});
        CHECK(bernoulli_polynomial(1).coefficients() == std::vector<Rational>{q(-1, 2), 1});
        CHECK(bernoulli_polynomial(2).coefficients() == std::vector<Rational>{q(1, 6), -1, 1});
        for (unsigned long n = 0; n <= 12; ++n)
            for (Rational x : {q(0), q(1, 3), q(3, 7), q(5, 2)}) CHECK(eval_poly(bernoulli_polynomial(n), x) == oracle::bernoulli_poly(n, x));
    }

    TEST_CASE("eval_poly") {
        const auto b1 = bernoulli_polynomial(1);
        CHECK(eval_poly(b1, q(1, 4)) == q(-1, 4));
        CHECK(eval_poly(b1, 1) == q(1, 2));
        CHECK(eval_poly(b1, 1) == bernoulli_number(1) + 1);
        for (unsigned long n = 0; n <= 8; ++n) {
            const auto poly = bernoulli_polynomial(n);
            CHECK(eval_poly(poly, 0) == poly.coefficient(0));
        }
        CHECK(eval_poly(RationalPolynomial{}, q(3, 2)) == 0);
    }

    TEST_CASE("fractional part and floor") {
        CHECK(fractional_part(q(7, 5)) == q(2, 5));
        CHECK(fractional_part(q(-1, 5)) == q(4, 5));
        CHECK(fractional_part(q(3)) == 0);
        CHECK(floor(q(-1, 5)) == -1);
    }

    TEST_CASE("sigma_power") {
        CHECK(sigma_power(6, 1) == 12);
        CHECK(sigma_power(1, 7) == 1);
        CHECK(sigma_power(4, 3) == 73);
        for (unsigned long n = 1; n <= 60; ++n)
            for (unsigned long k : {0ul, 1ul, 3ul, 11ul}) CHECK(sigma_power(n, k) == oracle::divisor_power_sum(n, k));
    }

    TEST_CASE("von Staudt-Clausen") {
        CHECK(von_staudt_clausen_denominator(2) == 6);
        CHECK(von_staudt_clausen_denominator(12) == 2730);
        CHECK(von_staudt_clausen_denominator(4) == 30);
        CHECK_THROWS_AS(von_staudt_clausen_denominator(3), Error);
        CHECK_THROWS_AS(von_staudt_clausen_denominator(0), Error);
        for (unsigned long n = 2; n <= 60; n += 2)
            CHECK(Integer(bernoulli_number(n).get_den()) == von_staudt_clausen_denominator(n));
    }

    TEST_CASE("reflection B_n(1 - x) = (-1)^n B_n(x)") {
        for (unsigned long n = 0; n <= 60; ++n) {
            const auto poly = bernoulli_polynomial(n);
            for (Rational x : {q(0), q(1, 4), q(1, 3), q(1, 2), q(2, 3), q(1)}) {
                const Rational lhs = eval_poly(poly, 1 - x);
                const Rational rhs = eval_poly(poly, x);
                CHECK(lhs == (n % 2 == 0 ? rhs : Rational(-rhs)));
            }
            CHECK(eval_poly(poly, 0) == bernoulli_number(n));
        }
    }

    TEST_CASE("multiplication theorem") {
        for (unsigned long k = 0; k <= 10; ++k) {
            const auto poly = bernoulli_polynomial(k);
            for (long m = 1; m <= 6; ++m) {
                for (Rational x : {q(0), q(1, 2), q(1, 3)}) {
                    Rational sum = 0;
                    for (long t = 0; t < m; ++t) sum += eval_poly(poly, (x + t) / m);
                    Rational scale(1);
                    for (unsigned long i = 1; i < k; ++i) scale /= m;
                    if (k == 0) scale = m;
                    CHECK(sum == scale * eval_poly(poly, x));
                }
            }
        }
    }

    TEST_CASE("zeta at negative odd integers") {
        CHECK(zeta_at_one_minus(2) == q(-1, 12));
        CHECK(zeta_at_one_minus(4) == q(1, 120));
        CHECK(zeta_at_one_minus(1) == q(-1, 2));
        for (unsigned long k = 1; k <= 40; ++k) CHECK(zeta_at_one_minus(k) == oracle::zeta_one_minus(k));
    }

    TEST_CASE("number-theoretic helpers") {
        CHECK(valuation(Rational(q(75, 2)), 5) == 2);
        CHECK(valuation(Rational(q(3, 50)), 5) == -2);
        CHECK(valuation(Integer(0), 5) == kInfiniteValuation);
        CHECK(euler_phi(25) == 20);
        CHECK(prime_factors(360) == std::vector<unsigned long>{2, 3, 5});
        CHECK(smallest_primitive_root_mod_p2(5) == 2);
        CHECK(is_prime(691));
        CHECK_FALSE(is_prime(1));
    }
}
