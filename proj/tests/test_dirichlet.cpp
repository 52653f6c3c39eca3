#include "oracles.hpp"

#include "peis/bernoulli.hpp"
#include "peis/dirichlet.hpp"
#include "peis/error.hpp"
#include "peis/serialize.hpp"

#include <doctest.h>

#include <random>

using namespace peis;
using oracle::q;

namespace {

DirichletCharacter chi_minus4() {
    for (const auto& chi : enumerate_characters(4))
        if (!chi.is_trivial()) return chi;
    return DirichletCharacter::trivial(4);
}

Rational rational(const CyclotomicValue& v) {
    REQUIRE(v.is_rational());
    return v.rational_value();
}

// Legendre symbol mod an odd prime by Euler's criterion.
std::vector<int> legendre_table(unsigned long p) {
    std::vector<int> t(p, 0);
    for (unsigned long a = 1; a < p; ++a) t[a] = powmod_ul(a, (p - 1) / 2, p) == 1 ? 1 : -1;
    return t;
}

}  // namespace

TEST_SUITE("dirichlet") {
    TEST_CASE("enumeration") {
        CHECK(enumerate_characters(1).size() == 1);
        CHECK(enumerate_characters(1)[0].is_trivial());
        const auto four = enumerate_characters(4);
        REQUIRE(four.size() == 2);
        CHECK(chi_minus4().order() == 2);
        CHECK_FALSE(chi_minus4().is_even());
        std::vector<unsigned long> orders;
        for (const auto& chi : enumerate_characters(5)) orders.push_back(chi.order());
        std::sort(orders.begin(), orders.end());
        CHECK(orders == std::vector<unsigned long>{1, 2, 4, 4});
        for (unsigned long f = 1; f <= 40; ++f) CHECK(enumerate_characters(f).size() == euler_phi(f));
    }

    TEST_CASE("conductor") {
        CHECK(DirichletCharacter::trivial(12).conductor() == 1);
        CHECK(conductor(chi_minus4()) == 4);
        for (const auto& chi : enumerate_characters(5))
            if (chi.order() == 2) CHECK(chi.conductor() == 5);
        // chi_{-4} inflated to modulus 12 still has conductor 4.
        int found = 0;
        for (const auto& chi : enumerate_characters(12)) {
            if (chi.conductor() != 4) continue;
            ++found;
            CHECK(chi.primitive() == chi_minus4());
        }
        CHECK(found == 1);
    }

    TEST_CASE("values and multiplicativity") {
        const auto chi = chi_minus4();
        CHECK(chi.value(1) == CyclotomicValue(chi.order(), 1));
        CHECK(chi.value(3) == CyclotomicValue(chi.order(), -1));
        CHECK(chi.value(2).is_zero());
        std::mt19937 rng(7);
        for (unsigned long f : {5ul, 7ul, 12ul, 13ul, 15ul, 16ul, 21ul}) {
            for (const auto& c : enumerate_characters(f)) {
                for (int trial = 0; trial < 200; ++trial) {
                    long long a = rng() % 1000, b = rng() % 1000;
                    if (gcd(static_cast<unsigned long>(a), f) != 1 || gcd(static_cast<unsigned long>(b), f) != 1) continue;
                    CHECK(c.value(a * b) == c.value(a) * c.value(b));
                }
            }
        }
    }

    TEST_CASE("generalized Bernoulli numbers") {
        const auto triv = DirichletCharacter::trivial();
        for (unsigned long n = 2; n <= 10; ++n) CHECK(rational(generalized_bernoulli(n, triv, 1)) == bernoulli_number(n));
        // B_{1, trivial} = B_1(1) = +1/2 so that L(0, 1) = -1/2.
        CHECK(rational(generalized_bernoulli(1, triv, 1)) == q(1, 2));
        CHECK(rational(generalized_bernoulli(1, chi_minus4(), 4)) == q(-1, 2));
        CHECK(rational(generalized_bernoulli(1, chi_minus4(), 8)) == q(-1, 2));
        CHECK_THROWS_AS(generalized_bernoulli(1, chi_minus4(), 6), Error);
        const std::vector<int> table{0, 1, 0, -1};
        for (unsigned long n = 1; n <= 9; ++n)
            CHECK(rational(generalized_bernoulli(n, chi_minus4())) == oracle::generalized_bernoulli(n, table, 4));
        for (unsigned long p : {5ul, 7ul, 11ul}) {
            const auto leg = legendre_table(p);
            for (const auto& chi : enumerate_characters(p)) {
                if (chi.order() != 2) continue;
                for (unsigned long n = 1; n <= 6; ++n)
                    CHECK(rational(generalized_bernoulli(n, chi)) == oracle::generalized_bernoulli(n, leg, p));
            }
        }
    }

    TEST_CASE("F-independence") {
        for (unsigned long f = 1; f <= 12; ++f) {
            for (const auto& chi : enumerate_characters(f)) {
                const unsigned long c = chi.conductor();
                for (unsigned long n = 1; n <= 12; ++n) {
                    const CyclotomicValue base = generalized_bernoulli(n, chi, c);
                    for (unsigned long m = 2; m <= 4; ++m) CHECK(generalized_bernoulli(n, chi, m * c) == base);
                }
            }
        }
    }

    TEST_CASE("L-values") {
        CHECK(rational(dirichlet_L_at_negative(1, DirichletCharacter::trivial())) == q(-1, 2));
        CHECK(rational(dirichlet_L_at_negative(2, DirichletCharacter::trivial())) == q(-1, 12));
        CHECK(rational(dirichlet_L_at_negative(1, chi_minus4())) == q(1, 2));
        CHECK(rational(euler_modified_L(2, DirichletCharacter::trivial(), 5)) == q(1, 3));
        CHECK(rational(euler_modified_L(6, DirichletCharacter::trivial(), 5)) == q(781, 63));
        for (const auto& chi : enumerate_characters(5)) {
            if (chi.order() != 2) continue;
            CHECK(euler_modified_L(2, chi, 5) == dirichlet_L_at_negative(2, chi));
        }
    }

    TEST_CASE("parity vanishing") {
        CHECK(generalized_bernoulli(2, chi_minus4()).is_zero());
        CHECK(parity_vanishing_check(2, chi_minus4()));
        CHECK_FALSE(generalized_bernoulli(1, DirichletCharacter::trivial()).is_zero());
        CHECK_FALSE(generalized_bernoulli(2, DirichletCharacter::trivial()).is_zero());
        for (unsigned long f = 1; f <= 12; ++f)
            for (const auto& chi : enumerate_characters(f))
                for (unsigned long n = 1; n <= 10; ++n) CHECK(parity_vanishing_check(n, chi));
    }

    TEST_CASE("tame p-adic values are Teichmuller powers") {
        for (unsigned long p : {5ul, 7ul, 11ul}) {
            for (long j = 0; j < static_cast<long>(p - 1); ++j) {
                const auto chi = DirichletCharacter::teichmuller_power(p, j);
                for (long a = 1; a < static_cast<long>(p); ++a) {
                    Integer expected = 1;
                    const Integer m = oracle::ipow(Integer(p), 10);
                    for (long i = 0; i < j; ++i) expected = expected * oracle::teichmuller(a, p, 10) % m;
                    CHECK(chi.to_padic(a, p, 10).residue() == expected);
                }
            }
        }
    }

    TEST_CASE("character JSON round trip") {
        for (const auto& chi : enumerate_characters(15)) {
            const Json j = to_json(chi);
            CHECK(j.contains("modulus"));
            CHECK(j.contains("generator_images"));
            CHECK(character_from_json(j) == chi);
        }
    }
}
