#include "peis/verify.hpp"

#include "peis/bernoulli.hpp"
#include "peis/eisenstein.hpp"
#include "peis/error.hpp"
#include "peis/lfunctions.hpp"

#include <algorithm>
#include <random>

namespace peis::verify {

namespace {

std::vector<unsigned long> primes_or(const Config& config, std::vector<unsigned long> defaults) {
    if (config.p) return {*config.p};
    return defaults;
}

Check make_check(std::string name, long observed, long required, std::string detail) {
    return {std::move(name), observed >= required, observed, required, std::move(detail)};
}

Check failed(std::string name, long required, std::string detail) {
    return {std::move(name), false, -1, required, std::move(detail)};
}

long digits(const PadicInt& a, const PadicInt& b) { return a.agreement(b); }

}  // namespace

bool Report::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Check kummer_grid(const Config& config) {
    long pairs = 0;
    long margin = kInfiniteValuation;
    std::string worst;
    for (unsigned long p : primes_or(config, {5, 7, 11, 13})) {
        for (unsigned long d = 1; d <= 3; ++d) {
            const unsigned long phi = euler_phi(static_cast<unsigned long>(pow(Integer(p), d).get_ui()));
            for (unsigned long k = 2; k <= 60; k += 2) {
                if (k % (p - 1) == 0) continue;
                for (unsigned long k2 = k + phi; k2 <= 60; k2 += phi) {
                    const KummerCheck c = kummer_classical_check(p, d, k, k2);
                    ++pairs;
                    const long excess = c.valuation == kInfiniteValuation ? kInfiniteValuation : c.valuation - c.required;
                    if (excess < margin) {
                        margin = excess;
                        worst = "p=" + std::to_string(p) + " d=" + std::to_string(d) + " k=" + std::to_string(k) +
                                " k'=" + std::to_string(k2);
                    }
                }
            }
        }
    }
    return make_check("kummer-grid", margin, 0, std::to_string(pairs) + " pairs; tightest " + worst);
}

Check dual_route(const Config& config) {
    const long required = 6;
    long worst = kInfiniteValuation;
    long cases = 0;
    std::string where;
    for (unsigned long p : primes_or(config, {5, 7})) {
        for (unsigned long j = 2; j + 1 < p - 1; j += 2) {
            const auto chi = DirichletCharacter::teichmuller_power(p, static_cast<long>(j));
            MeasureRouteOptions options;
            options.level = config.level;
            options.formula = config.formula;
            for (long n = 1; n <= 8; ++n) {
                const PadicInt exact = lp_interpolation(static_cast<unsigned long>(n), chi, p, config.precision);
                const LpResult measured =
                    lp_measure_route(PadicInt(p, config.precision, Integer(1 - n)), chi, options);
                const long agree = digits(exact, measured.value);
                ++cases;
                if (agree < worst) {
                    worst = agree;
                    where = "p=" + std::to_string(p) + " chi=w^" + std::to_string(j) + " n=" + std::to_string(n);
                }
            }
        }
    }
    return make_check("dual-route", worst, required, std::to_string(cases) + " values; weakest " + where);
}

Check zeta_star_values(const Config& config) {
    const unsigned long p = config.p.value_or(5);
    const unsigned long u = 2;
    const long n = config.precision;
    long exact_agreement = kInfiniteValuation;
    std::string detail;
    bool increasing = true;
    for (unsigned long j = 0; j < 3; ++j) {
        const unsigned long k = u + (p - 1) * j;
        const Rational target = zeta_star_exact(k, p);
        const LpResult value = zeta_star(1 - static_cast<long>(k), u, p, n);
        const PadicInt embedded = PadicInt::from_rational(target, p, n);
        const long agree = value.value == embedded ? n : std::min(digits(value.value, embedded), n - 1);
        exact_agreement = std::min(exact_agreement, agree);
        detail += "k=" + std::to_string(k) + " [";
        long previous = -1;
        unsigned long power = 1;
        for (int i = 0; i <= 4; ++i, power *= p) {
            const unsigned long kk = k + (p - 1) * power;
            if (kk > 2600) break;
            const long v = valuation(Rational(zeta_at_one_minus(kk) - target), p);
            if (v <= previous) increasing = false;
            previous = v;
            detail += (i ? " " : "") + std::to_string(v);
        }
        detail += "] ";
    }
    if (!detail.empty() && detail.back() == ' ') detail.pop_back();
    if (!increasing) return failed("zeta-star-values", n, "limit valuations not strictly increasing: " + detail);
    return make_check("zeta-star-values", exact_agreement, n, "limit valuations " + detail);
}

Check family_specialization(const Config& config) {
    const unsigned long p = config.p.value_or(5);
    const long required = config.precision - 2;
    FamilyOptions options{config.q_truncation, config.precision, config.t_truncation};
    const LambdaQExpansion family = serre_eisenstein_measure(p, 2, options);
    long worst = kInfiniteValuation;
    std::string where;
    for (long s : {1L, 2L, 3L, 7L}) {
        const PadicQExpansion special = specialize(family, PadicInt(p, config.precision, Integer(s)));
        const PadicQExpansion direct = padic_G_star(s, 2ul, p, config.q_truncation, config.precision);
        for (std::size_t i = 0; i < direct.size(); ++i) {
            const long agree = digits(special[i], direct[i]);
            if (agree < worst) {
                worst = agree;
                where = "s=" + std::to_string(s) + " n=" + std::to_string(i);
            }
        }
    }
    return make_check("family-specialization", worst, required,
                      "M_T=" + std::to_string(config.t_truncation) + "; weakest " + where);
}

Check stabilization(const Config& config) {
    const unsigned long p = config.p.value_or(5);
    const long n = config.precision;
    long worst = kInfiniteValuation;
    std::string where;
    for (long k = 4; k <= 12; k += 2) {
        const RationalQExpansion g = stabilized_G(k, p, config.q_truncation);
        std::vector<PadicInt> ours;
        long a0 = n;
        if (k % static_cast<long>(p - 1) == 0) {
            if (Rational(zeta_star_exact(static_cast<unsigned long>(k), p) / 2) != g[0]) a0 = -1;
            const WeightCharacter w = WeightCharacter::integer(k, p, n);
            for (std::size_t i = 1; i < g.size(); ++i) ours.push_back(sigma_star(w, i));
        } else {
            const PadicQExpansion star = padic_G_star(k, p, config.q_truncation, n);
            a0 = digits(star[0], PadicInt::from_rational(g[0], p, n));
            ours.assign(star.coefficients.begin() + 1, star.coefficients.end());
        }
        if (a0 < worst) {
            worst = a0;
            where = "k=" + std::to_string(k) + " n=0";
        }
        for (std::size_t i = 0; i < ours.size(); ++i) {
            const long agree = digits(ours[i], PadicInt::from_rational(g[i + 1], p, n));
            if (agree < worst) {
                worst = agree;
                where = "k=" + std::to_string(k) + " n=" + std::to_string(i + 1);
            }
        }
    }
    return make_check("stabilization", worst, n, "weakest " + where);
}

Check distribution_laws(const Config& config) {
    for (unsigned long k = 1; k <= 6; ++k) {
        std::vector<long> levels;
        for (long i = 1; i <= 12; ++i) levels.push_back(i);
        const CompatibilityReport r = check_compatibility(bernoulli_distribution(k, levels));
        if (!r.compatible) return failed("distribution-laws", 0, "Bernoulli fiber sum fails at k=" + std::to_string(k));
    }
    long min_valuation = kInfiniteValuation;
    std::string detail = "E_c(" + to_string(config.formula) + ")";
    for (unsigned long p : primes_or(config, {5, 7, 11})) {
        for (unsigned long d : {1ul, 2ul}) {
            for (long long c : {static_cast<long long>(default_regularizer(p, d)), static_cast<long long>(p + 2)}) {
                if (gcd(static_cast<unsigned long>(c), d * p) != 1) continue;
                const long top = 5;
                for (long level = 0; level < top; ++level) {
                    const Distribution mu = ec_measure(d, p, c, {level, level + 1}, config.formula);
                    const CompatibilityReport r = check_compatibility(mu);
                    if (!r.compatible)
                        return failed("distribution-laws", 0,
                                      detail + " fiber sum fails p=" + std::to_string(p) + " d=" + std::to_string(d) +
                                          " c=" + std::to_string(c) + " level " + std::to_string(level));
                    min_valuation = std::min(min_valuation, certify_boundedness(mu, p).min_valuation);
                }
            }
        }
    }
    detail += " min valuation " + std::to_string(min_valuation);
    const unsigned long p = config.p.value_or(5);
    const long depth = 8;
    std::vector<long> levels;
    for (long n = 0; n <= depth; ++n) levels.push_back(n);
    const Distribution haar = haar_distribution(p, levels);
    if (!check_compatibility(haar).compatible) return failed("distribution-laws", 0, "Haar fiber sums fail");
    for (long n = 0; n <= depth; ++n)
        if (valuation(haar.value(n, 0), p) != -n) return failed("distribution-laws", 0, "Haar valuation is not -n");
    if (certify_boundedness(haar, p).is_measure()) return failed("distribution-laws", 0, "Haar certified bounded");
    std::vector<long> powers;
    for (long n = 1, q = 1; n <= 4; ++n) powers.push_back(q *= static_cast<long>(p));
    const BoundednessCertificate b1 = certify_boundedness(bernoulli_distribution(1, powers), p);
    if (b1.is_measure()) return failed("distribution-laws", 0, "B_1 distribution certified bounded on p-power levels");
    detail += "; Haar valuation -" + std::to_string(depth) + " at level " + std::to_string(depth) +
              "; B_1 witness valuation " + std::to_string(b1.min_valuation);
    return make_check("distribution-laws", min_valuation, 0, detail);
}

Check weierstrass_reconstruction(const Config& config) {
    const long n = config.precision;
    const std::size_t m = 12;
    const long required = n - 2;
    long worst = kInfiniteValuation;
    long samples = 0;
    std::mt19937_64 rng(20240601);
    for (unsigned long p : primes_or(config, {5, 7})) {
        const Integer modulus = pow(Integer(p), static_cast<unsigned long>(n));
        for (int trial = 0; trial < 100; ++trial) {
            const long mu = static_cast<long>(rng() % 3);
            const std::size_t lambda = rng() % 7;
            std::vector<Integer> coeffs(m);
            for (std::size_t i = 0; i < m; ++i) {
                Integer c = Integer(static_cast<unsigned long>(rng() % p)) + Integer(static_cast<unsigned long>(p)) *
                                                                                Integer(static_cast<unsigned long>(rng()));
                if (i < lambda) c *= p;
                if (i == lambda && c % p == 0) c += 1;
                coeffs[i] = mod(c * pow(Integer(p), static_cast<unsigned long>(mu)), modulus);
            }
            const LambdaElement f(p, n, m, coeffs);
            const WeierstrassData w = weierstrass_prepare(f);
            if (w.mu != mu || w.lambda != static_cast<long>(lambda))
                return failed("weierstrass", required, "invariants differ at p=" + std::to_string(p));
            const LambdaElement rebuilt =
                w.distinguished * w.unit * PadicInt(p, n, pow(Integer(p), static_cast<unsigned long>(mu)));
            worst = std::min(worst, std::min((rebuilt - f).min_valuation(), n));
            ++samples;
        }
    }
    const unsigned long p0 = config.p.value_or(5);
    const auto lam = [&](unsigned long p, std::vector<Integer> c) { return LambdaElement(p, n, m, std::move(c)); };
    const WeierstrassData a = weierstrass_prepare(lam(p0, {Integer(p0)}));
    const WeierstrassData b = weierstrass_prepare(lam(p0, {0, 0, 0, 1}));
    const WeierstrassData c = weierstrass_prepare(lam(5, {5, 6, 1}));
    const bool examples = a.mu == 1 && a.lambda == 0 && a.distinguished.congruent(lam(p0, {1})) &&
                          a.unit.congruent(lam(p0, {1})) && b.mu == 0 && b.lambda == 3 &&
                          b.distinguished.congruent(lam(p0, {0, 0, 0, 1})) && b.unit.congruent(lam(p0, {1})) &&
                          c.mu == 0 && c.lambda == 1 && c.distinguished.congruent_mod(lam(5, {5, 1}), static_cast<long>(m)) &&
                          (c.distinguished * c.unit).congruent(lam(5, {5, 6, 1}));
    if (!examples) return failed("weierstrass", required, "worked examples differ");
    return make_check("weierstrass", worst, required,
                      std::to_string(samples) + " random inputs, M=12; worked examples exact");
}

Check regularity(const Config&) {
    std::string detail;
    bool ok = true;
    for (unsigned long p : {5ul, 7ul, 11ul, 13ul}) {
        const RegularityVerdict v = regularity_scan(p);
        ok = ok && v.regular;
    }
    const RegularityVerdict v37 = regularity_scan(37);
    const RegularityVerdict v691 = regularity_scan(691);
    const auto has = [](const RegularityVerdict& v, unsigned long k) {
        return std::find(v.irregular_indices.begin(), v.irregular_indices.end(), k) != v.irregular_indices.end();
    };
    ok = ok && !v37.regular && has(v37, 32) && !v691.regular && has(v691, 12);
    detail = "5 7 11 13 regular; 37 irregular at B_32; 691 irregular at B_12";
    return {"regularity", ok, ok ? 1 : 0, 1, ok ? detail : "regularity verdicts differ"};
}

Check weight_congruences(const Config& config) {
    long pairs = 0;
    long inconsistent = 0;
    std::string first;
    std::vector<RationalQExpansion> forms;
    for (long k = 4; k <= 40; k += 2) forms.push_back(classical_G(k, config.q_truncation));
    for (unsigned long p : primes_or(config, {5, 7})) {
        for (std::size_t i = 0; i < forms.size(); ++i) {
            for (std::size_t j = 0; j < forms.size(); ++j) {
                if (i == j) continue;
                ++pairs;
                if (!weight_congruence_audit(forms[i], forms[j], p).consistent) {
                    if (inconsistent++ == 0)
                        first = " first p=" + std::to_string(p) + " k=" + std::to_string(4 + 2 * i) +
                                " k'=" + std::to_string(4 + 2 * j);
                }
            }
        }
    }
    return make_check("weight-congruences", -inconsistent, 0,
                      std::to_string(pairs) + " pairs, " + std::to_string(inconsistent) + " inconsistent" + first);
}

Check constant_term_certificate(const Config& config) {
    const unsigned long p = config.p.value_or(5);
    FamilyOptions options{config.q_truncation, config.precision, config.t_truncation};
    const LambdaQExpansion family = serre_eisenstein_measure(p, 2, options);
    const FsAudit audit = fs_constant_term_audit(family, constant_term_samples(p, 2, 40));
    if (!audit.certified) {
        std::string why = audit.bound_checks_passed ? "non-integral divided difference" : "constant-term bound fails";
        return failed("constant-term", audit.reconstruction_precision, why);
    }
    return make_check("constant-term", audit.agreement, audit.reconstruction_precision,
                      "40 samples, Newton coefficients p-integral");
}

std::vector<Check> acceptance(const Config& config) {
    return {kummer_grid(config),           dual_route(config),    zeta_star_values(config),
            family_specialization(config), stabilization(config), distribution_laws(config),
            weierstrass_reconstruction(config), regularity(config), weight_congruences(config)};
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"kummer", "dualroute", "specialization", "distributions", "weierstrass",
                                                "all"};
    return names;
}

namespace {

Check guarded(Check (*fn)(const Config&), const Config& config, const char* name) {
    try {
        return fn(config);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::usage) throw;
        return failed(name, 0, std::string(to_string(e.code())) + ": " + e.what());
    }
}

}  // namespace

Report run_suite(const std::string& name, const Config& config) {
    using Fn = Check (*)(const Config&);
    struct Entry {
        const char* suite;
        const char* check;
        Fn fn;
    };
    static const Entry entries[] = {
        {"kummer", "kummer-grid", kummer_grid},
        {"kummer", "regularity", regularity},
        {"kummer", "weight-congruences", weight_congruences},
        {"dualroute", "dual-route", dual_route},
        {"specialization", "zeta-star-values", zeta_star_values},
        {"specialization", "family-specialization", family_specialization},
        {"specialization", "stabilization", stabilization},
        {"specialization", "constant-term", constant_term_certificate},
        {"distributions", "distribution-laws", distribution_laws},
        {"weierstrass", "weierstrass", weierstrass_reconstruction},
    };
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        fail(ErrorCode::usage, "unknown suite '" + name + "'");
    Report report{name, {}};
    for (const auto& e : entries)
        if (name == "all" || name == e.suite) report.checks.push_back(guarded(e.fn, config, e.check));
    return report;
}

Json to_json(const Check& check) {
    return Json{{"name", check.name},
                {"passed", check.passed},
                {"observed", check.observed},
                {"required", check.required},
                {"detail", check.detail}};
}

Json to_json(const Report& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks) checks.push_back(to_json(c));
    return Json{{"suite", report.suite}, {"passed", report.passed()}, {"checks", checks}};
}

}  // namespace peis::verify
