#include "oracles.hpp"

#include "peis/error.hpp"
#include "peis/iwasawa.hpp"
#include "peis/serialize.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace peis;

namespace {

LambdaElement poly(unsigned long p, long n, std::size_t m, std::vector<long> c) {
    std::vector<Integer> big;
    const Integer mod = oracle::ipow(Integer(p), static_cast<unsigned long>(n));
    for (long v : c) big.push_back(oracle::mod(Integer(v), mod));
    return LambdaElement(p, n, m, big);
}

// Naive product of two truncated series with plain Integers.
std::vector<Integer> naive_product(const std::vector<Integer>& a, const std::vector<Integer>& b, std::size_t m,
                                   const Integer& mod) {
    std::vector<Integer> out(m, 0);
    for (std::size_t i = 0; i < a.size() && i < m; ++i)
        for (std::size_t j = 0; j < b.size() && i + j < m; ++j) out[i + j] += a[i] * b[j];
    for (auto& x : out) x = oracle::mod(x, mod);
    return out;
}

}  // namespace

TEST_SUITE("iwasawa") {
    TEST_CASE("ring operations against a naive product") {
        std::mt19937_64 rng(5);
        const Integer mod = oracle::ipow(Integer(7), 9);
        for (int t = 0; t < 20; ++t) {
            std::vector<Integer> a(10), b(10);
            for (auto& x : a) x = Integer(static_cast<unsigned long>(rng() % 40353607));
            for (auto& x : b) x = Integer(static_cast<unsigned long>(rng() % 40353607));
            const LambdaElement fa(7, 9, 10, a), fb(7, 9, 10, b);
            CHECK((fa * fb).residues() == naive_product(a, b, 10, mod));
        }
        const LambdaElement u = poly(5, 10, 8, {1, 3, 5});
        CHECK((u * u.inverse()).congruent(poly(5, 10, 8, {1})));
        CHECK_THROWS_AS(poly(5, 10, 8, {5, 1}).inverse(), Error);
        const LambdaElement mixed = poly(5, 10, 8, {1, 1}) + poly(5, 6, 4, {1});
        CHECK(mixed.precision() == 6);
        CHECK(mixed.truncation() == 4);
    }

    TEST_CASE("group ring dictionary") {
        GroupRingElement g(5, 10, 1);
        g.coefficients[0] = 1;
        CHECK(from_group_ring(g, 6).congruent(poly(5, 10, 6, {1})));
        g.coefficients[0] = 0;
        g.coefficients[1] = 1;
        CHECK(from_group_ring(g, 6).congruent(poly(5, 10, 6, {1, 1})));
        g.coefficients[0] = 1;
        CHECK(from_group_ring(g, 6).congruent(poly(5, 10, 6, {2, 1})));
        std::mt19937_64 rng(9);
        for (unsigned level = 0; level <= 3; ++level) {
            GroupRingElement h(5, 12, level);
            for (auto& c : h.coefficients) c = Integer(static_cast<unsigned long>(rng() % 244140625));
            const std::size_t m = static_cast<std::size_t>(std::pow(5, level));
            const LambdaElement f = from_group_ring(h, m);
            CHECK(to_group_ring(f, level).coefficients == h.coefficients);
            if (level > 0) CHECK(h.reduce_to(level - 1).augmentation() == h.augmentation());
        }
    }

    TEST_CASE("dirac") {
        CHECK(dirac(Integer(0), 5, 10, 6).congruent(poly(5, 10, 6, {1})));
        CHECK(dirac(Integer(1), 5, 10, 6).congruent(poly(5, 10, 6, {1, 1})));
        CHECK(dirac(Integer(-1), 5, 10, 6).congruent(poly(5, 10, 6, {1, -1, 1, -1, 1, -1})));
        for (long i = -3; i <= 4; ++i)
            for (long j = -3; j <= 4; ++j)
                CHECK(dirac(Integer(i + j), 5, 10, 8).congruent(dirac(Integer(i), 5, 10, 8) * dirac(Integer(j), 5, 10, 8)));
        const PadicInt e(5, 12, Integer(1234567));
        const PadicInt f(5, 12, Integer(7654321));
        CHECK(dirac(e + f, 6).congruent(dirac(e, 6) * dirac(f, 6)));
        CHECK(dirac(PadicInt(5, 12, Integer(3)), 6).congruent(dirac(Integer(3), 5, 12, 6)));
    }

    TEST_CASE("evaluation at characters") {
        CHECK(evaluate_at_character(poly(5, 10, 6, {1, 1}), PadicInt(5, 10, 5)).residue() == 6);
        CHECK(evaluate_at_character(poly(5, 10, 6, {0, 1}), PadicInt(5, 10, 0)).is_zero());
        CHECK_THROWS_AS(evaluate_at_character(poly(5, 10, 6, {0, 1}), PadicInt(5, 10, 2)), Error);
        // dirac(2) at z = 6^3 - 1 is 6^6, and the value matches <x>^3 on gamma^2.
        const PadicInt zz = weight_point(3, 5, 10);
        CHECK(zz.residue() == oracle::mod(Integer(215), oracle::ipow(Integer(5), 10)));
        const PadicInt v = evaluate_at_character(dirac(Integer(2), 5, 10, 12), zz);
        CHECK(v.congruent(PadicInt(5, 10, Integer(46656))));
        CHECK(v.precision() == 10);
    }

    TEST_CASE("Weierstrass preparation") {
        const auto w1 = weierstrass_prepare(poly(5, 20, 12, {5}));
        CHECK(w1.mu == 1);
        CHECK(w1.lambda == 0);
        CHECK(w1.distinguished.congruent(poly(5, 20, 12, {1})));
        CHECK(w1.unit.congruent(poly(5, 20, 12, {1})));
        const auto w2 = weierstrass_prepare(poly(5, 20, 12, {0, 0, 0, 1}));
        CHECK(w2.mu == 0);
        CHECK(w2.lambda == 3);
        CHECK(w2.distinguished.congruent(poly(5, 20, 12, {0, 0, 0, 1})));
        CHECK(w2.unit.congruent(poly(5, 20, 12, {1})));
        // (T + 5)(T + 1): P = T + 5 is fixed only modulo about 5^M since f is
        // known modulo T^M; the product is exact.
        const LambdaElement f3 = poly(5, 20, 12, {5, 6, 1});
        const auto w3 = weierstrass_prepare(f3);
        CHECK(w3.mu == 0);
        CHECK(w3.lambda == 1);
        CHECK(w3.distinguished.congruent_mod(poly(5, 20, 12, {5, 1}), 12));
        CHECK((w3.distinguished * w3.unit).congruent(f3));
        CHECK(w3.unit.coefficient(0).is_unit());

        CHECK(lambda_mu_invariants(poly(5, 20, 12, {5, 5})) == IwasawaInvariants{1, 0});
        // (T - 5)(T - 25) = T^2 - 30T + 125
        CHECK(lambda_mu_invariants(poly(5, 20, 12, {125, -30, 1})) == IwasawaInvariants{0, 2});
        CHECK(lambda_mu_invariants(poly(5, 20, 12, {1, 7, 3})) == IwasawaInvariants{0, 0});
        CHECK_THROWS_AS(weierstrass_prepare(poly(5, 20, 12, {0})), Error);
    }

    TEST_CASE("Weierstrass reconstruction on random inputs") {
        std::mt19937_64 rng(17);
        for (unsigned long p : {5ul, 7ul}) {
            const long n = 20;
            const Integer mod = oracle::ipow(Integer(p), n);
            for (int t = 0; t < 100; ++t) {
                const long mu = static_cast<long>(rng() % 3);
                const std::size_t lambda = rng() % 8;
                std::vector<Integer> c(12);
                for (std::size_t i = 0; i < c.size(); ++i) {
                    c[i] = Integer(static_cast<unsigned long>(rng())) * Integer(static_cast<unsigned long>(rng()));
                    if (i < lambda) c[i] *= p;
                    if (i == lambda && c[i] % p == 0) c[i] += 1;
                    c[i] = oracle::mod(c[i] * oracle::ipow(Integer(p), mu), mod);
                }
                const LambdaElement f(p, n, 12, c);
                const auto w = weierstrass_prepare(f);
                CHECK(w.mu == mu);
                CHECK(w.lambda == static_cast<long>(lambda));
                const LambdaElement rebuilt = w.distinguished * w.unit * PadicInt(p, n, oracle::ipow(Integer(p), mu));
                CHECK(rebuilt.congruent_mod(f, n - 2));
                CHECK(w.distinguished.coefficient(lambda).residue() == 1);
                for (std::size_t i = 0; i < static_cast<std::size_t>(lambda); ++i)
                    CHECK(w.distinguished.coefficient(i).valuation() >= 1);
                for (std::size_t i = lambda + 1; i < 12; ++i) CHECK(w.distinguished.coefficient(i).is_zero());
            }
        }
    }

    TEST_CASE("uniqueness by weights") {
        const LambdaElement f = poly(5, 10, 6, {3, 1, 4, 1, 5, 9});
        CHECK(uniqueness_by_weights(f, f, 8).indistinguishable);
        CHECK(uniqueness_by_weights(f, f + poly(5, 10, 6, {0, 0}), 8).indistinguishable);
        const LambdaElement g = f + LambdaElement(5, 10, 6, {0, oracle::ipow(Integer(5), 10)});
        CHECK(uniqueness_by_weights(f, g, 8).indistinguishable);
        const auto r = uniqueness_by_weights(dirac(Integer(1), 5, 10, 6), dirac(Integer(2), 5, 10, 6), 8);
        CHECK_FALSE(r.indistinguishable);
        REQUIRE(r.first_failing_weight.has_value());
        CHECK(*r.first_failing_weight == 1);
        CHECK_THROWS_AS(uniqueness_by_weights(f, f, 3), Error);
    }

    TEST_CASE("restricted determination by character values") {
        // Two elements whose values agree on the weight grid k = 0..M+2 agree
        // as elements, up to the documented Vandermonde loss.
        const std::size_t m = 6;
        std::mt19937_64 rng(23);
        std::vector<Integer> c(m);
        for (auto& x : c) x = Integer(static_cast<unsigned long>(rng() % 1000000));
        const LambdaElement f(7, 14, m, c);
        const auto same = uniqueness_by_weights(f, f, static_cast<long>(m) + 2);
        CHECK(same.indistinguishable);
        CHECK(same.coefficient_precision >= 1);
        auto c2 = c;
        c2[m - 1] += 1;
        const auto diff = uniqueness_by_weights(f, LambdaElement(7, 14, m, c2), static_cast<long>(m) + 2);
        CHECK_FALSE(diff.indistinguishable);
    }

    TEST_CASE("abstract Kummer congruences") {
        const unsigned long p = 5;
        const long n = 8;
        auto pz = [&](long v) { return PadicInt(p, n, oracle::mod(Integer(v), oracle::ipow(Integer(p), n))); };
        std::vector<std::vector<PadicInt>> indicator(3, std::vector<PadicInt>(3, pz(0)));
        for (int i = 0; i < 3; ++i) indicator[i][i] = pz(1);
        const auto sol = abstract_kummer_solve(indicator, {pz(4), pz(-7), pz(11)});
        REQUIRE(sol.exists);
        CHECK(sol.measure[0].congruent(pz(4)));
        CHECK(sol.measure[1].congruent(pz(-7)));
        CHECK(sol.measure[2].congruent(pz(11)));

        // Moments x^i of a measure on four points are fed back.
        const std::vector<long> points{1, 2, 3, 4};
        const std::vector<long> mu{3, -1, 2, 7};
        std::vector<std::vector<PadicInt>> monomials;
        std::vector<PadicInt> moments;
        for (int i = 0; i < 4; ++i) {
            std::vector<PadicInt> row;
            long total = 0;
            for (std::size_t y = 0; y < 4; ++y) {
                long v = 1;
                for (int e = 0; e < i; ++e) v *= points[y];
                row.push_back(pz(v));
                total += v * mu[y];
            }
            monomials.push_back(row);
            moments.push_back(pz(total));
        }
        const auto back = abstract_kummer_solve(monomials, moments);
        REQUIRE(back.exists);
        for (std::size_t y = 0; y < 4; ++y) CHECK(back.measure[y].congruent_mod(pz(mu[y]), back.precision));

        // Row 1 forces 5 mu(y0) = 1, so mu(y0) = 1/5 is not integral.
        std::vector<std::vector<PadicInt>> dependent{{pz(1), pz(0)}, {pz(5), pz(0)}, {pz(0), pz(1)}};
        const auto cert = abstract_kummer_solve(dependent, {pz(1), pz(1), pz(0)});
        CHECK_FALSE(cert.exists);
        REQUIRE(cert.certificate.has_value());
        // sum b_i f_i(y) is divisible by p^n at every y while sum b_i a_i is not.
        const auto& b = cert.certificate->coefficients;
        for (std::size_t y = 0; y < 2; ++y) {
            Rational s = 0;
            for (std::size_t i = 0; i < 3; ++i) s += b[i] * Rational(dependent[i][y].residue());
            CHECK(oracle::valuation(s, p) >= cert.certificate->n);
        }
        CHECK(oracle::valuation(cert.certificate->combined_moment, p) < cert.certificate->n);
    }

    TEST_CASE("JSON") {
        const LambdaElement f = poly(5, 20, 4, {5, 6, 1});
        const Json j = to_json(f);
        CHECK(j["M"] == 4);
        CHECK(j["coeffs"][1] == "6");
        CHECK(lambda_from_json(j) == f);
        const Json w = to_json(weierstrass_prepare(f));
        CHECK(w["mu"] == 0);
        CHECK(w["lambda"] == 1);
    }
}
