#include "oracles.hpp"

#include "peis/error.hpp"
#include "peis/padic.hpp"
#include "peis/serialize.hpp"

#include <doctest.h>

#include <random>

using namespace peis;

namespace {

PadicInt z(unsigned long p, long n, long v) { return PadicInt(p, n, Integer(v)); }

}  // namespace

TEST_SUITE("padic") {
    TEST_CASE("valuation") {
        CHECK(z(5, 10, 75).valuation() == 2);
        CHECK(z(5, 10, 3).valuation() == 0);
        CHECK(z(5, 10, 0).valuation() == 10);
        CHECK(z(5, 10, 0).is_zero());
        CHECK(z(5, 3, 250).is_zero());
    }

    TEST_CASE("precision bookkeeping") {
        const PadicInt a = z(5, 10, 7), b = z(5, 4, 3);
        CHECK((a + b).precision() == 4);
        CHECK((a * b).precision() == 4);
        CHECK((a / b).precision() == 4);
        CHECK(z(5, 10, 50).divide_by_p_power(2).precision() == 8);
        CHECK(z(5, 10, 50).divide_by_p_power(2).residue() == 2);
        CHECK_THROWS_AS(a / z(5, 10, 10), Error);
        CHECK_THROWS_AS(PadicInt(2, 5, 1), Error);
        CHECK(PadicInt::from_rational(oracle::q(1, 3), 5, 4).residue() == oracle::residue(oracle::q(1, 3), 5, 4));
        CHECK_THROWS_AS(PadicInt::from_rational(oracle::q(1, 5), 5, 4), Error);
        CHECK(z(5, 4, 7).with_precision(9).precision() == 4);
    }

    TEST_CASE("digits") {
        CHECK(PadicInt::from_rational(oracle::q(1, 3), 5, 3).digit_string() == "2 + 3*5 + 1*5^2 + O(5^3)");
    }

    TEST_CASE("teichmuller") {
        CHECK(teichmuller(1, 5, 10).residue() == 1);
        CHECK(teichmuller(2, 5, 2).residue() == 7);
        CHECK(teichmuller(4, 5, 1).residue() == 4);
        CHECK_THROWS_AS(teichmuller(10, 5, 3), Error);
        for (unsigned long p : {5ul, 7ul, 11ul}) {
            const long n = 12;
            for (long a = 1; a <= static_cast<long>(p * p); ++a) {
                if (a % static_cast<long>(p) == 0) continue;
                const PadicInt w = teichmuller(Integer(a), p, n);
                CHECK(w.residue() == oracle::teichmuller(a, p, n));
                CHECK(w.pow(Integer(p - 1)).residue() == 1);
                for (long b = 1; b < static_cast<long>(p); ++b)
                    CHECK((w * teichmuller(Integer(b), p, n)).congruent(teichmuller(Integer(a * b), p, n)));
            }
        }
    }

    TEST_CASE("angle") {
        CHECK(angle(z(5, 6, 1)).residue() == 1);
        CHECK(angle(z(5, 2, 2)).residue() == 11);
        CHECK(angle(z(5, 6, 16)).residue() == 16);
        CHECK_THROWS_AS(angle(z(5, 6, 10)), Error);
    }

    TEST_CASE("log and exp") {
        CHECK(padic_log(z(5, 10, 1)).is_zero());
        const PadicInt l6 = padic_log(z(5, 10, 6));
        CHECK(l6.valuation() == 1);
        CHECK(l6.residue() == oracle::log_series(6, 5, 10));
        CHECK(padic_exp(z(5, 10, 0)).residue() == 1);
        CHECK(padic_exp(z(5, 2, 5)).residue() == 6);
        CHECK(padic_exp(padic_log(z(5, 10, 6))).residue() == 6);
        CHECK_THROWS_AS(padic_log(z(5, 10, 2)), Error);
        CHECK_THROWS_AS(padic_exp(z(5, 10, 3)), Error);
        std::mt19937_64 rng(11);
        for (unsigned long p : {5ul, 7ul, 11ul}) {
            const long n = 15;
            const Integer m = oracle::ipow(Integer(p), n);
            for (int i = 0; i < 30; ++i) {
                const Integer x = oracle::mod(Integer(1) + Integer(p) * Integer(static_cast<unsigned long>(rng() % 100000)), m);
                const PadicInt px(p, n, x);
                CHECK(padic_log(px).residue() == oracle::log_series(x, p, n));
                CHECK(padic_log(px * px).congruent(padic_log(px) + padic_log(px)));
                CHECK(padic_exp(padic_log(px)).congruent(px));
                const PadicInt y(p, n, oracle::mod(Integer(p) * Integer(static_cast<unsigned long>(rng() % 100000)), m));
                CHECK(padic_log(padic_exp(y)).congruent(y));
            }
        }
        CHECK(padic_exp(padic_log(z(5, 12, 6))).congruent(z(5, 12, 6)));
    }

    TEST_CASE("angle_power") {
        const PadicInt c = z(5, 8, 2);
        CHECK(angle_power(c, z(5, 8, 0)).residue() == 1);
        CHECK(angle_power(c, z(5, 8, 1)).congruent(angle(c)));
        // <2> = 11 mod 25 and 11^4 = 16 mod 25.
        CHECK(angle_power(z(5, 2, 2), z(5, 2, 4)).residue() == 16);
        std::mt19937_64 rng(3);
        for (int i = 0; i < 20; ++i) {
            const PadicInt s = z(5, 10, static_cast<long>(rng() % 100000));
            const PadicInt t = z(5, 10, static_cast<long>(rng() % 100000));
            CHECK(angle_power(c, s + t).congruent(angle_power(c, s) * angle_power(c, t)));
        }
        for (long k = 0; k <= 12; ++k) CHECK(angle_power(c, z(5, 8, k)).congruent(angle(c).pow(Integer(k))));
    }

    TEST_CASE("weight characters") {
        const PadicInt a = z(5, 6, 2);
        CHECK(weight_eval({z(5, 6, 0), 0}, a).residue() == 1);
        CHECK(weight_eval({z(5, 6, 1234), 2}, z(5, 6, 1)).residue() == 1);
        CHECK(weight_eval(WeightCharacter::integer(3, 5, 2), z(5, 2, 2)).residue() == 8);
        for (unsigned long p : {5ul, 7ul}) {
            const long n = 10;
            const Integer m = oracle::ipow(Integer(p), n);
            for (long k = 0; k <= 20; ++k)
                for (long b = 1; b <= 30; ++b) {
                    if (b % static_cast<long>(p) == 0) continue;
                    Integer expected;
                    mpz_powm_ui(expected.get_mpz_t(), Integer(b).get_mpz_t(), static_cast<unsigned long>(k), m.get_mpz_t());
                    CHECK(weight_eval(WeightCharacter::integer(k, p, n), z(p, n, b)).residue() == expected);
                }
        }
    }

    TEST_CASE("JSON") {
        const PadicInt x = z(5, 20, 63578287760417);
        const Json j = to_json(x);
        CHECK(j["p"] == 5);
        CHECK(j["N"] == 20);
        CHECK(j["residue"] == "63578287760417");
        CHECK(padic_from_json(j) == x);
    }
}
