#include "peis/eisenstein.hpp"

#include "peis/bernoulli.hpp"
#include "peis/error.hpp"

#include <algorithm>

namespace peis {

namespace {

long factorial_valuation(unsigned long i, unsigned long p) {
    long v = 0;
    for (unsigned long q = p; q <= i; q *= p) v += static_cast<long>(i / q);
    return v;
}

PadicInt half(unsigned long p, long precision) { return PadicInt(p, precision, 2).inverse(); }

WeightCharacter shift_down(const WeightCharacter& k) {
    const unsigned long p = k.prime();
    return {k.s - PadicInt::one(p, k.s.precision()), (k.u + p - 2) % (p - 1)};
}

long rational_valuation(const Rational& x, unsigned long p) { return x == 0 ? kInfiniteValuation : valuation(x, p); }

PadicQExpansion assemble_G_star(const WeightCharacter& k, std::size_t m, const PadicInt& constant) {
    PadicQExpansion out;
    out.weight = WeightLabel::point(k);
    out.coefficients.push_back(constant);
    for (std::size_t n = 1; n <= m; ++n) out.coefficients.push_back(sigma_star(k, n));
    return out;
}

void check_branch(unsigned long p, unsigned long u) {
    const unsigned long u0 = u % (p - 1);
    if (u0 % 2 == 1) fail(ErrorCode::precondition, "Eisenstein families live on even branches u");
    if (u0 == 0) fail(ErrorCode::pole, "the u = 0 branch has a non-integral constant term; use the normalized family");
}

}  // namespace

RationalQExpansion classical_G(long k, std::size_t m) {
    require(k >= 4 && k % 2 == 0, "G_k needs an even weight k >= 4");
    RationalQExpansion out;
    out.weight = WeightLabel::integer(k);
    out.coefficients.push_back(zeta_at_one_minus(static_cast<unsigned long>(k)) / 2);
    for (std::size_t n = 1; n <= m; ++n)
        out.coefficients.emplace_back(sigma_power(n, static_cast<unsigned long>(k - 1)));
    return out;
}

RationalQExpansion stabilized_G(long k, unsigned long p, std::size_t m) {
    require(k >= 2 && k % 2 == 0, "stabilization needs an even weight k >= 2");
    require(p > 2 && is_prime(p), "p must be an odd prime");
    const Rational pk(pow(Integer(p), static_cast<unsigned long>(k - 1)));
    RationalQExpansion out;
    out.weight = WeightLabel::integer(k);
    out.coefficients.push_back(zeta_star_exact(static_cast<unsigned long>(k), p) / 2);
    for (std::size_t n = 1; n <= m; ++n) {
        Rational a(sigma_power(n, static_cast<unsigned long>(k - 1)));
        if (n % p == 0) a -= pk * Rational(sigma_power(n / p, static_cast<unsigned long>(k - 1)));
        out.coefficients.push_back(a);
    }
    return out;
}

PadicInt sigma_star(const WeightCharacter& k, unsigned long n) {
    require(n >= 1, "sigma* is defined for n >= 1");
    const unsigned long p = k.prime();
    const long precision = k.s.precision();
    const WeightCharacter lowered = shift_down(k);
    PadicInt total = PadicInt::zero(p, precision);
    for (auto d : divisors(n)) {
        if (d % p == 0) continue;
        total += weight_eval(lowered, PadicInt(p, precision, Integer(d)));
    }
    return total;
}

PadicQExpansion padic_G_star(const WeightCharacter& k, std::size_t m) {
    check_branch(k.prime(), k.u);
    const PadicInt s1 = PadicInt::one(k.prime(), k.s.precision()) - k.s;
    const LpResult zeta = zeta_star(s1, k.u);
    return assemble_G_star(k, m, zeta.value * half(k.prime(), zeta.value.precision()));
}

PadicQExpansion padic_G_star(long s, unsigned long u, unsigned long p, std::size_t m, long precision) {
    check_branch(p, u);
    const WeightCharacter w{PadicInt(p, precision, Integer(s)), u % (p - 1)};
    const LpResult zeta = zeta_star(1 - s, w.u, p, precision);
    return assemble_G_star(w, m, zeta.value * half(p, precision));
}

PadicQExpansion padic_G_star(long k, unsigned long p, std::size_t m, long precision) {
    PadicQExpansion out = padic_G_star(k, static_cast<unsigned long>(mod_ll(k, static_cast<long long>(p - 1))), p, m, precision);
    out.weight = WeightLabel::integer(k);
    return out;
}

ValuationReport valuation_report(const RationalQExpansion& f, unsigned long p) {
    ValuationReport report;
    report.p = p;
    for (std::size_t n = 0; n < f.size(); ++n) {
        const long v = rational_valuation(f[n], p);
        report.per_coefficient.push_back(v);
        if (v < report.valuation) {
            report.valuation = v;
            report.index = n;
        }
    }
    return report;
}

ValuationReport valuation_report(const PadicQExpansion& f) {
    ValuationReport report;
    if (f.size() == 0) return report;
    report.p = f[0].prime();
    for (const auto& c : f.coefficients) report.cap = std::min(report.cap, c.precision());
    for (std::size_t n = 0; n < f.size(); ++n) {
        const long v = std::min(f[n].valuation(), report.cap);
        report.per_coefficient.push_back(v);
        if (v < report.valuation) {
            report.valuation = v;
            report.index = n;
        }
    }
    report.at_cap = report.valuation >= report.cap;
    return report;
}

WeightAudit weight_congruence_audit(const RationalQExpansion& f, const RationalQExpansion& g, unsigned long p) {
    require(f.size() == g.size(), "expansions must share the truncation");
    require(f.weight.kind == WeightLabel::Kind::integer && g.weight.kind == WeightLabel::Kind::integer,
            "the audit compares integer weights");
    RationalQExpansion diff = f;
    for (std::size_t n = 0; n < f.size(); ++n) diff[n] -= g[n];
    const long vf = valuation_report(f, p).valuation;
    require(vf != kInfiniteValuation, "f must be nonzero");
    const long vd = valuation_report(diff, p).valuation;
    WeightAudit audit;
    if (vd == kInfiniteValuation) return audit;
    audit.m_observed = vd - vf;
    if (*audit.m_observed >= 1) {
        Integer modulus = Integer(p - 1) * pow(Integer(p), static_cast<unsigned long>(*audit.m_observed - 1));
        audit.modulus = modulus.fits_slong_p() ? modulus.get_si() : -1;
        audit.consistent = mpz_divisible_p(Integer(f.weight.k - g.weight.k).get_mpz_t(), modulus.get_mpz_t()) != 0;
    }
    return audit;
}

namespace {

bool image_nonzero(const WeightCharacter& k, long m) {
    if (k.u % (k.prime() - 1) != 0) return true;
    if (m == 0) return false;
    // s mod p^m must be provably nonzero.
    return !k.s.is_zero() && k.s.valuation() < m;
}

ConstantTermAudit finish_audit(bool hypothesis, long v0, long vh, long m) {
    ConstantTermAudit audit;
    audit.hypothesis_met = hypothesis;
    audit.constant_valuation = v0;
    audit.higher_valuation = vh;
    audit.holds = hypothesis && (v0 == kInfiniteValuation || v0 + m >= vh);
    return audit;
}

}  // namespace

ConstantTermAudit constant_term_bound_audit(const RationalQExpansion& f, const WeightCharacter& k, long m) {
    require(f.size() >= 2 && m >= 0, "need a_0, some a_n and m >= 0");
    const auto report = valuation_report(f, k.prime());
    const long vh = *std::min_element(report.per_coefficient.begin() + 1, report.per_coefficient.end());
    return finish_audit(image_nonzero(k, m), report.per_coefficient[0], vh, m);
}

ConstantTermAudit constant_term_bound_audit(const PadicQExpansion& f, const WeightCharacter& k, long m) {
    require(f.size() >= 2 && m >= 0, "need a_0, some a_n and m >= 0");
    const auto report = valuation_report(f);
    const long vh = *std::min_element(report.per_coefficient.begin() + 1, report.per_coefficient.end());
    return finish_audit(image_nonzero(k, m), report.per_coefficient[0], vh, m);
}

LambdaElement angle_power_series(unsigned long d, unsigned long p, long precision, std::size_t truncation) {
    require(d % p != 0, "d must be prime to p");
    const long boosted = precision + 1 + (truncation > 1 ? factorial_valuation(truncation - 1, p) : 0);
    const PadicInt ang = angle(PadicInt(p, boosted, Integer(d)));
    const PadicInt e = padic_log(ang).divide_by_p_power(1) / padic_log(PadicInt(p, boosted, 1 + p)).divide_by_p_power(1);
    return dirac(e, truncation).with_precision(precision);
}

namespace {

// sum_{d | n, p not | d} w(d)^u d^-1 (1+T)^(e_d) for n = 1..m.
std::vector<LambdaElement> sigma_star_series(unsigned long p, unsigned long u, const FamilyOptions& options) {
    const long n_prec = options.precision;
    std::vector<LambdaElement> terms(options.m + 1);
    for (unsigned long d = 1; d <= options.m; ++d) {
        if (d % p == 0) continue;
        const PadicInt dd(p, n_prec, Integer(d));
        const PadicInt scale = teichmuller(dd).pow(Integer(u)) * dd.inverse();
        terms[d] = angle_power_series(d, p, n_prec, options.t_truncation) * scale;
    }
    std::vector<LambdaElement> out(options.m + 1);
    for (unsigned long n = 1; n <= options.m; ++n) {
        LambdaElement total(p, n_prec, options.t_truncation);
        for (auto d : divisors(n))
            if (d % p != 0) total += terms[d];
        out[n] = std::move(total);
    }
    return out;
}

}  // namespace

LambdaQExpansion serre_eisenstein_measure(unsigned long p, unsigned long u, const FamilyOptions& options) {
    require(p > 2 && is_prime(p), "p must be an odd prime");
    require(options.m >= 1 && options.precision >= 1 && options.t_truncation >= 1, "truncations must be positive");
    check_branch(p, u);
    const unsigned long u0 = u % (p - 1);
    LambdaQExpansion out;
    out.weight = WeightLabel::branch(u0);
    out.coefficients = sigma_star_series(p, u0, options);
    out.coefficients[0] = interpolated_branch(p, u0, options.precision, options.t_truncation) *
                          half(p, options.precision);
    return out;
}

LambdaElement inverse_zeta_branch(unsigned long p, long precision, std::size_t truncation) {
    const LambdaElement phi = interpolated_branch(p, 0, precision, truncation);
    return LambdaElement::variable(p, precision, truncation) * phi.inverse();
}

LambdaQExpansion normalized_family_u0(unsigned long p, const FamilyOptions& options) {
    require(p > 2 && is_prime(p), "p must be an odd prime");
    if (options.t_truncation < 2) fail(ErrorCode::precision, "need T-truncation >= 2 to see the factor T");
    const LambdaElement twice_h = inverse_zeta_branch(p, options.precision, options.t_truncation) *
                                  PadicInt(p, options.precision, 2);
    LambdaQExpansion out;
    out.weight = WeightLabel::branch(0);
    out.coefficients = sigma_star_series(p, 0, options);
    out.coefficients[0] = LambdaElement::constant(PadicInt::one(p, options.precision), options.t_truncation);
    for (std::size_t n = 1; n < out.size(); ++n) out.coefficients[n] = out.coefficients[n] * twice_h;
    return out;
}

PadicQExpansion specialize(const LambdaQExpansion& family, const PadicInt& s) {
    const PadicInt z = weight_point(s);
    PadicQExpansion out;
    out.weight = WeightLabel::point({s, family.weight.u});
    for (const auto& a : family.coefficients) out.coefficients.push_back(evaluate_at_character(a, z));
    return out;
}

std::vector<ConstantSample> constant_term_samples(unsigned long p, unsigned long u, std::size_t count) {
    const unsigned long u0 = u % (p - 1);
    const unsigned long first = u0 == 0 ? p - 1 : u0;
    std::vector<ConstantSample> out;
    for (std::size_t j = 0; j < count; ++j) {
        const unsigned long k = first + (p - 1) * j;
        out.push_back({static_cast<long>(k), zeta_star_exact(k, p) / 2});
    }
    return out;
}

FsAudit fs_constant_term_audit(const LambdaQExpansion& family, const std::vector<ConstantSample>& samples) {
    require(family.size() >= 2, "family needs a_0 and some a_n");
    require(!samples.empty(), "need at least one constant-term sample");
    const LambdaElement& a0 = family[0];
    const unsigned long p = a0.prime();
    const std::size_t truncation = a0.truncation();
    FsAudit audit;

    if (family.weight.u % (p - 1) != 0) {
        for (const auto& sample : samples) {
            const PadicInt z = weight_point(sample.weight, p, a0.precision() + 1);
            long higher = kInfiniteValuation;
            for (std::size_t n = 1; n < family.size(); ++n) {
                const PadicInt value = evaluate_at_character(family[n], z);
                higher = std::min(higher, value.valuation());
            }
            const long v0 = rational_valuation(sample.value, p);
            if (v0 != kInfiniteValuation && v0 < higher) {
                audit.bound_checks_passed = false;
                audit.bound_failure_weight = sample.weight;
                break;
            }
        }
    }

    const std::size_t count = samples.size();
    std::vector<Rational> z(count), dd(count);
    for (std::size_t j = 0; j < count; ++j) {
        require(samples[j].weight >= 0, "sample weights must be non-negative");
        z[j] = Rational(pow(Integer(1 + p), static_cast<unsigned long>(samples[j].weight)) - 1);
        dd[j] = samples[j].value;
    }
    for (std::size_t level = 1; level < count; ++level)
        for (std::size_t i = count - 1; i >= level; --i) {
            require(z[i] != z[i - level], "sample weights must be distinct");
            dd[i] = (dd[i] - dd[i - 1]) / (z[i] - z[i - level]);
        }
    for (std::size_t i = 0; i < count; ++i) {
        if (is_p_integral(dd[i], p)) continue;
        audit.failing_index = i;
        audit.witness_value = dd[i];
        for (std::size_t j = 0; j <= i; ++j) {
            Rational b = 1;
            for (std::size_t l = 0; l <= i; ++l)
                if (l != j) b /= z[j] - z[l];
            audit.witness.push_back(b);
        }
        return audit;
    }

    std::vector<Rational> poly(truncation, Rational(0));
    for (std::size_t i = count; i-- > 0;) {
        for (std::size_t m = truncation; m-- > 0;) poly[m] = (m > 0 ? poly[m - 1] : Rational(0)) - z[i] * poly[m];
        poly[0] += dd[i];
    }
    audit.reconstruction_precision =
        std::min(a0.precision(), static_cast<long>(count) - static_cast<long>(truncation) + 1);
    if (audit.reconstruction_precision <= 0) return audit;
    std::vector<Integer> coeffs;
    for (const auto& c : poly) coeffs.push_back(PadicInt::from_rational(c, p, audit.reconstruction_precision).residue());
    const LambdaElement rebuilt(p, audit.reconstruction_precision, truncation, std::move(coeffs));
    audit.agreement = (rebuilt - a0).min_valuation();
    audit.certified = audit.bound_checks_passed && audit.agreement >= audit.reconstruction_precision;
    return audit;
}

}  // namespace peis
