#include "peis/measures.hpp"

#include "peis/bernoulli.hpp"
#include "peis/error.hpp"

#include <algorithm>

namespace peis {

namespace {

unsigned long long ipow(unsigned long long base, long e) {
    unsigned long long r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

// The unique x mod d*q with x = b mod d and x = y mod q, gcd(d, q) = 1.
unsigned long long crt(unsigned long long b, unsigned long long d, unsigned long long y, unsigned long long q) {
    if (d == 1) return y % q;
    const unsigned long long q_inv = inverse_mod(Integer(static_cast<unsigned long>(q % d)), Integer(static_cast<unsigned long>(d))).get_ui();
    const unsigned long long t = static_cast<unsigned long long>(
        static_cast<unsigned __int128>((b + d - y % d) % d) * q_inv % d);
    return y + q * t;
}

}  // namespace

ProfiniteSpace ProfiniteSpace::x_system(unsigned long d, unsigned long p) {
    require(p > 2 && is_prime(p), "the X-system needs an odd prime p");
    require(d >= 1 && d % p != 0, "d must be positive and prime to p");
    return {SpaceKind::X, d, p};
}

ProfiniteSpace ProfiniteSpace::gamma_system(unsigned long p) {
    require(p > 2 && is_prime(p), "Gamma needs an odd prime p");
    return {SpaceKind::Gamma, 1, p};
}

bool ProfiniteSpace::refines(long fine, long coarse) const {
    if (kind == SpaceKind::Y) return coarse >= 1 && fine % coarse == 0;
    return coarse >= 0 && fine >= coarse;
}

unsigned long long ProfiniteSpace::level_size(long level) const {
    switch (kind) {
        case SpaceKind::Y: return static_cast<unsigned long long>(level);
        case SpaceKind::X: return d * ipow(p, level + 1);
        case SpaceKind::Gamma: return ipow(p, level);
    }
    return 0;
}

std::vector<long long> ProfiniteSpace::points(long level) const {
    require(kind == SpaceKind::Y ? level >= 1 : level >= 0, "invalid level");
    const unsigned long long size = level_size(level);
    std::vector<long long> out;
    for (unsigned long long x = 0; x < size; ++x) {
        if (kind == SpaceKind::X && gcd(static_cast<unsigned long>(x), static_cast<unsigned long>(size)) != 1) continue;
        out.push_back(static_cast<long long>(x));
    }
    return out;
}

long long ProfiniteSpace::project(long long point, long fine, long coarse) const {
    require(refines(fine, coarse), "levels are not related by a transition map");
    return static_cast<long long>(static_cast<unsigned long long>(point) % level_size(coarse));
}

std::string ProfiniteSpace::name() const {
    switch (kind) {
        case SpaceKind::Y: return "Y";
        case SpaceKind::X: return "X";
        case SpaceKind::Gamma: return "Gamma";
    }
    return "?";
}

Distribution::Distribution(ProfiniteSpace space, std::vector<long> levels, Evaluator evaluator)
    : space_(space), levels_(std::move(levels)), evaluator_(std::move(evaluator)) {
    std::sort(levels_.begin(), levels_.end());
    levels_.erase(std::unique(levels_.begin(), levels_.end()), levels_.end());
}

bool Distribution::has_level(long level) const {
    return std::binary_search(levels_.begin(), levels_.end(), level);
}

Rational Distribution::value(long level, long long point) const {
    if (!has_level(level)) fail(ErrorCode::precondition, "level " + std::to_string(level) + " is not available");
    return evaluator_(level, point);
}

Rational Distribution::total_mass(long level) const {
    Rational total = 0;
    for (auto x : space_.points(level)) total += value(level, x);
    return total;
}

CompatibilityReport check_compatibility(const Distribution& mu) {
    CompatibilityReport report;
    const auto& space = mu.space();
    for (long fine : mu.levels()) {
        for (long coarse : mu.levels()) {
            if (coarse == fine || !space.refines(fine, coarse)) continue;
            ++report.pairs_checked;
            std::vector<Rational> sums(space.level_size(coarse), Rational(0));
            for (auto y : space.points(fine)) sums[space.project(y, fine, coarse)] += mu.value(fine, y);
            for (auto x : space.points(coarse)) {
                const Rational v = mu.value(coarse, x);
                if (sums[x] != v) {
                    report.compatible = false;
                    report.witness = CompatibilityWitness{fine, coarse, x, sums[x], v};
                    return report;
                }
            }
        }
    }
    return report;
}

BoundednessCertificate certify_boundedness(const Distribution& mu, unsigned long p) {
    BoundednessCertificate cert;
    cert.p = p;
    if (mu.levels().empty()) return cert;
    cert.first_level = mu.levels().front();
    cert.last_level = mu.levels().back();
    for (long level : mu.levels()) {
        for (auto x : mu.space().points(level)) {
            const Rational v = mu.value(level, x);
            if (v == 0) continue;
            const long val = valuation(v, p);
            if (val < cert.min_valuation) {
                cert.min_valuation = val;
                cert.witness_level = level;
                cert.witness_point = x;
            }
        }
    }
    return cert;
}

Distribution bernoulli_distribution(unsigned long k, std::vector<long> levels) {
    require(k >= 1, "Bernoulli distributions are indexed from k = 1");
    for (long i : levels) require(i >= 1, "Y-system levels are positive integers");
    auto poly = std::make_shared<RationalPolynomial>(bernoulli_polynomial(k));
    return Distribution(ProfiniteSpace::y_system(), std::move(levels), [poly, k](long i, long long a) -> Rational {
        const Rational x = fractional_part(make_rational(Integer(static_cast<long>(a)), Integer(i)));
        return eval_poly(*poly, x) * Rational(pow(Integer(i), k - 1));
    });
}

std::string to_string(EcFormula formula) {
    switch (formula) {
        case EcFormula::regularized: return "regularized";
        case EcFormula::verbatim: return "verbatim";
        case EcFormula::shifted: return "shifted";
    }
    return "?";
}

EcFormula parse_ec_formula(const std::string& text) {
    if (text == "regularized") return EcFormula::regularized;
    if (text == "verbatim") return EcFormula::verbatim;
    if (text == "shifted") return EcFormula::shifted;
    fail(ErrorCode::usage, "unknown E_c formula '" + text + "' (regularized, verbatim, shifted)");
}

Distribution ec_measure(unsigned long d, unsigned long p, long long c, std::vector<long> levels, EcFormula formula) {
    const auto space = ProfiniteSpace::x_system(d, p);
    require(gcd(static_cast<unsigned long>(mod_ll(c, static_cast<long long>(d * p))), d * p) == 1,
            "c must be prime to dp");
    for (long n : levels) require(n >= 0, "X-system levels are non-negative");
    return Distribution(space, std::move(levels), [space, c, formula](long n, long long x) -> Rational {
        const Integer big_d(static_cast<unsigned long>(space.level_size(n)));
        const Integer xi(static_cast<long>(x));
        const Integer x_prime = mod(inverse_mod(mod(Integer(static_cast<long>(c)), big_d), big_d) * xi, big_d);
        const Rational half(1, 2);
        const Rational first = make_rational(xi, big_d) - half;
        const Rational second = make_rational(x_prime, big_d) - half;
        const Rational cr(Integer(static_cast<long>(c)));
        switch (formula) {
            case EcFormula::regularized: return Rational(first - cr * second);
            case EcFormula::verbatim: return Rational(first - second + (cr - 1) / 2);
            case EcFormula::shifted: return Rational(first - cr * second + (cr - 1) / 2);
        }
        return Rational(0);
    });
}

Distribution haar_distribution(unsigned long p, std::vector<long> levels) {
    const auto space = ProfiniteSpace::gamma_system(p);
    return Distribution(space, std::move(levels), [p](long n, long long) -> Rational {
        return make_rational(1, pow(Integer(p), static_cast<unsigned long>(n)));
    });
}

Rational integrate_locally_constant(const Distribution& mu, long level, const std::function<Rational(long long)>& f) {
    Rational total = 0;
    for (auto x : mu.space().points(level)) {
        const Rational fx = f(x);
        if (fx != 0) total += fx * mu.value(level, x);
    }
    return total;
}

PadicInt integrate_locally_constant(const Distribution& mu, long level, const std::function<PadicInt(long long)>& f,
                                    unsigned long p, long precision) {
    Rational total = 0;
    for (auto x : mu.space().points(level)) {
        const PadicInt fx = f(x);
        precision = std::min(precision, fx.precision());
        if (!fx.is_zero()) total += Rational(fx.residue()) * mu.value(level, x);
    }
    if (!is_p_integral(total, p))
        fail(ErrorCode::precondition, "integral is not p-integral; the distribution is not bounded at this level");
    return PadicInt::from_rational(total, p, precision);
}

IntegralEstimate integrate_continuous(const Distribution& mu, long level, const std::function<PadicInt(long long)>& f,
                                      const std::function<long(long)>& modulus, long precision) {
    const unsigned long p = mu.space().p;
    require(p != 0, "continuous integration needs a p-adic space");
    std::vector<long> checked;
    for (long n : mu.levels())
        if (n <= level) checked.push_back(n);
    const Distribution through(mu.space(), checked, [&mu](long n, long long x) { return mu.value(n, x); });
    if (!mu.has_level(level) || !certify_boundedness(through, p).is_measure())
        fail(ErrorCode::precondition, "integrate_continuous needs a distribution bounded through the level");
    const long bound = std::min(precision, modulus(level));
    IntegralEstimate out;
    out.value = integrate_locally_constant(mu, level, f, p, std::max(0L, bound));
    out.error_bound_exponent = out.value.precision();
    return out;
}

GroupRingElement project_branch(const Distribution& mu, const DirichletCharacter& psi, long level, long precision) {
    const auto& space = mu.space();
    require(space.kind == SpaceKind::X, "branches are projected from the X-system");
    const unsigned long p = space.p;
    const unsigned long d = space.d;
    if ((d * p) % psi.modulus() != 0 || !psi.is_tame(p))
        fail(ErrorCode::precondition, "psi must be a tame character of modulus dividing dp");
    require(level >= 0, "level must be non-negative");
    GroupRingElement out(p, precision, static_cast<unsigned>(level));
    const unsigned long long q = ipow(p, level + 1);
    const unsigned long long gamma_size = ipow(p, level);
    std::vector<Rational> sums(gamma_size, Rational(0));
    for (unsigned long b = 0; b < d; ++b) {
        if (gcd(b, d) != 1 && d != 1) continue;
        for (unsigned long a = 1; a < p; ++a) {
            const unsigned long long omega = teichmuller(Integer(a), p, level + 1).residue().get_ui();
            const unsigned long long x0 = crt(b, d, a, p);
            const PadicInt weight = psi.to_padic(static_cast<long long>(x0), p, precision);
            if (weight.is_zero()) continue;
            const Rational w(weight.residue());
            unsigned long long y = omega;
            for (unsigned long long j = 0; j < gamma_size; ++j) {
                const unsigned long long x = crt(b, d, y, q);
                sums[j] += w * mu.value(level, static_cast<long long>(x));
                y = static_cast<unsigned long long>(static_cast<unsigned __int128>(y) * (1 + p) % q);
            }
        }
    }
    for (unsigned long long j = 0; j < gamma_size; ++j) {
        if (!is_p_integral(sums[j], p)) fail(ErrorCode::precondition, "projection of an unbounded distribution");
        out.coefficients[j] = PadicInt::from_rational(sums[j], p, precision).residue();
    }
    return out;
}

}  // namespace peis
