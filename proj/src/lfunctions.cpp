#include "peis/lfunctions.hpp"

#include "peis/bernoulli.hpp"
#include "peis/error.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace peis {

namespace {

// Sign relating the E_c integral to L_p, fixed by agreement at
// (n = 2, chi = w^2, p = 5) and never re-fitted.
constexpr int kMeasureSign = -1;

using u64 = unsigned long long;
using u128 = unsigned __int128;

u64 ipow(u64 base, long e) {
    u64 r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

// Largest K with p^K < 2^62, the range of the machine-integer loops.
long machine_precision(unsigned long p) {
    long k = 0;
    u128 q = 1;
    while (q * p < (static_cast<u128>(1) << 62)) {
        q *= p;
        ++k;
    }
    return k;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 to_u64(const Integer& x) { return static_cast<u64>(x.get_ui()); }

bool is_primitive_root_mod_p2(unsigned long g, unsigned long p) {
    if (g % p == 0) return false;
    for (auto q : prime_factors(p - 1))
        if (powmod_ul(g, (p - 1) / q, p) == 1) return false;
    return powmod_ul(g, p - 1, p * p) != 1;
}

long floor_log(unsigned long p, unsigned long x) {
    long e = 0;
    for (u64 q = p; q <= x; q *= p) ++e;
    return e;
}

struct PushforwardKey {
    unsigned long p, d;
    long long c;
    long level;
    int formula;
    unsigned long modulus, order;
    std::vector<unsigned long> images;
    auto tie() const { return std::tie(p, d, c, level, formula, modulus, order, images); }
    bool operator<(const PushforwardKey& o) const { return tie() < o.tie(); }
};

std::shared_ptr<const std::vector<u64>> pushforward_residues(unsigned long p, unsigned long d, long long c,
                                                             const DirichletCharacter& psi, long level,
                                                             EcFormula formula) {
    static std::mutex lock;
    static std::map<PushforwardKey, std::shared_ptr<const std::vector<u64>>> cache;
    const PushforwardKey key{p, d, c, level, static_cast<int>(formula), psi.modulus(), psi.order(),
                             psi.generator_images()};
    {
        std::lock_guard<std::mutex> guard(lock);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const long precision = machine_precision(p);
    const u64 big_q = ipow(p, precision);
    const u64 q = ipow(p, level + 1);
    const u64 big_d = d * q;
    require(big_d < (1ULL << 40), "level too deep for the machine-integer pushforward");
    const long long c_mod = mod_ll(c, static_cast<long long>(big_d));
    const u64 c_inv = to_u64(inverse_mod(Integer(static_cast<unsigned long>(c_mod)), Integer(static_cast<unsigned long>(big_d))));
    const u64 q_inv_d = d == 1 ? 0 : to_u64(inverse_mod(Integer(static_cast<unsigned long>(q % d)), Integer(d)));
    const u64 gamma_size = ipow(p, level);
    const long long shift = (formula == EcFormula::shifted ? 2 : 1) * (c - 1);
    auto values = std::make_shared<std::vector<u64>>(gamma_size, 0);
    auto& nu = *values;
    for (unsigned long b = 0; b < d; ++b) {
        if (d != 1 && gcd(b, d) != 1) continue;
        for (unsigned long a = 1; a < p; ++a) {
            u64 x0 = a;
            if (d != 1) x0 = a + p * mulmod((b + d - a % d) % d, to_u64(inverse_mod(Integer(p % d), Integer(d))), d);
            const u64 w = to_u64(psi.to_padic(static_cast<long long>(x0), p, precision).residue());
            if (w == 0) continue;
            u64 y = to_u64(teichmuller(Integer(a), p, level + 1).residue());
            for (u64 j = 0; j < gamma_size; ++j) {
                u64 x = y;
                if (d != 1) x = y + q * mulmod((b + d - y % d) % d, q_inv_d, d);
                const u64 xp = mulmod(c_inv, x, big_d);
                const long long numer = static_cast<long long>(x) - c * static_cast<long long>(xp);
                const long long twice = 2 * (numer / static_cast<long long>(big_d)) + shift;
                const u64 term = static_cast<u64>(mod_ll(twice, static_cast<long long>(big_q)));
                nu[j] = (nu[j] + mulmod(w, term, big_q)) % big_q;
                y = mulmod(y, 1 + p, q);
            }
        }
    }
    const u64 half = (big_q + 1) / 2;
    for (auto& v : nu) v = mulmod(v, half, big_q);
    std::lock_guard<std::mutex> guard(lock);
    cache.emplace(key, values);
    return values;
}

}  // namespace

int measure_route_sign() { return kMeasureSign; }

CyclotomicValue lp_interpolation_exact(unsigned long n, const DirichletCharacter& chi, unsigned long p) {
    require(n >= 1, "L_p(1 - n) needs n >= 1");
    require(p > 2 && is_prime(p), "p must be an odd prime");
    const DirichletCharacter twisted = chi * DirichletCharacter::teichmuller_power(p, -static_cast<long>(n));
    return euler_modified_L(n, twisted, p);
}

PadicInt lp_interpolation(unsigned long n, const DirichletCharacter& chi, unsigned long p, long precision) {
    const CyclotomicValue value = lp_interpolation_exact(n, chi, p);
    if ((p - 1) % value.order() != 0)
        fail(ErrorCode::precondition, "chi w^-n is not tame at p; its values do not lie in Z_p");
    // Clear p from the zeta_m-basis denominators first.
    long e = 0;
    for (const auto& coeff : value.coefficients())
        if (coeff != 0) e = std::max(e, -valuation(coeff, p));
    const PadicInt scaled = (value * Rational(pow(Integer(p), static_cast<unsigned long>(e)))).to_padic(p, precision + e);
    if (!scaled.is_zero() && scaled.valuation() < e)
        fail(ErrorCode::pole, "L_p(1 - " + std::to_string(n) + ", chi) is not p-integral (trivial branch)");
    return scaled.divide_by_p_power(e);
}

long long default_regularizer(unsigned long p, unsigned long d) {
    require(p > 2 && is_prime(p), "p must be an odd prime");
    for (unsigned long g = 2;; ++g)
        if (gcd(g, d) == 1 && is_primitive_root_mod_p2(g, p)) return static_cast<long long>(g);
}

GroupRingElement ec_pushforward(unsigned long p, unsigned long d, long long c, const DirichletCharacter& psi,
                                long level, long precision, EcFormula formula) {
    require(level >= 0, "level must be non-negative");
    if ((d * p) % psi.modulus() != 0 || !psi.is_tame(p))
        fail(ErrorCode::precondition, "psi must be a tame character of modulus dividing dp");
    if (formula == EcFormula::verbatim)
        return project_branch(ec_measure(d, p, c, {level}, formula), psi, level, precision);
    ProfiniteSpace::x_system(d, p);
    require(gcd(static_cast<unsigned long>(mod_ll(c, static_cast<long long>(d * p))), d * p) == 1,
            "c must be prime to dp");
    const auto residues = pushforward_residues(p, d, c, psi, level, formula);
    const long k = std::min(precision, machine_precision(p));
    GroupRingElement out(p, k, static_cast<unsigned>(level));
    const u64 q = ipow(p, k);
    for (std::size_t j = 0; j < residues->size(); ++j) out.coefficients[j] = static_cast<unsigned long>((*residues)[j] % q);
    return out;
}

LpResult lp_measure_route(const PadicInt& s, const DirichletCharacter& chi, const MeasureRouteOptions& options) {
    const unsigned long p = s.prime();
    const unsigned long d = options.d;
    const long long c = options.c != 0 ? options.c : default_regularizer(p, d);
    if ((d * p) % chi.modulus() != 0 || !chi.is_tame(p))
        fail(ErrorCode::precondition, "the measure route needs a tame character of modulus dividing dp");
    const DirichletCharacter psi = chi * DirichletCharacter::teichmuller_power(p, -1);
    const PadicInt t = -s;
    // <x>^t is constant to p^(n+1+v(t)) on level-n classes.
    long riemann = t.is_zero() ? s.precision() + 1 : options.level + 1 + t.valuation();
    long k = std::min({riemann, s.precision() + 1, machine_precision(p)});
    const GroupRingElement nu = ec_pushforward(p, d, c, psi, options.level, k, options.formula);
    k = nu.precision;
    const u64 q = ipow(p, k);
    const u64 g = to_u64(angle_power(PadicInt(p, k, 1 + p), t).residue()) % q;
    u64 acc = 0;
    u64 power = 1 % q;
    for (const auto& coeff : nu.coefficients) {
        acc = (acc + mulmod(to_u64(coeff), power, q)) % q;
        power = mulmod(power, g, q);
    }
    const PadicInt integral(p, k, Integer(static_cast<unsigned long>(acc)));
    const PadicInt cp(p, k, Integer(static_cast<long>(c)));
    const PadicInt one = PadicInt::one(p, s.precision());
    PadicInt regularizer = PadicInt::one(p, k) - chi.to_padic(c, p, k) * angle_power(cp, one - s);
    if (regularizer.is_zero())
        fail(chi.is_trivial() ? ErrorCode::pole : ErrorCode::precision,
             "regularizer 1 - chi(c)<c>^(1-s) vanishes at this precision");
    const long v = regularizer.valuation();
    if (!integral.is_zero() && integral.valuation() < v)
        fail(ErrorCode::pole, "L_p(s, chi) is not p-integral here (pseudo-measure branch)");
    if (integral.precision() - v <= 0)
        fail(ErrorCode::precision, "no digits left after dividing by the regularizer");
    PadicInt value = integral.divide_by_p_power(v) / regularizer.divide_by_p_power(v);
    if (kMeasureSign < 0) value = -value;
    return {value, value.precision(), "measure"};
}

PadicInt BranchElement::evaluate(const PadicInt& s) const {
    const PadicInt z = weight_point(-s);
    if (quotient) return evaluate_at_character(*quotient, z);
    const PadicInt g = evaluate_at_character(numerator, z);
    const PadicInt h = evaluate_at_character(regularizer, z);
    if (h.is_zero()) fail(ErrorCode::pole, "the branch has a pole at this point");
    const long v = h.valuation();
    if (!g.is_zero() && g.valuation() < v) fail(ErrorCode::pole, "value is not p-integral on the pseudo-measure branch");
    PadicInt value = g.divide_by_p_power(v) / h.divide_by_p_power(v);
    return kMeasureSign < 0 ? -value : value;
}

BranchElement branch_element(unsigned long p, const DirichletCharacter& psi, long long c, unsigned long d, long level,
                             std::size_t truncation, long precision) {
    require(truncation >= 1, "truncation must be positive");
    if ((d * p) % psi.modulus() != 0 || !psi.is_tame(p))
        fail(ErrorCode::precondition, "branch elements need a tame character of modulus dividing dp");
    BranchElement out;
    out.psi = psi;
    out.c = c != 0 ? c : default_regularizer(p, d);
    out.d = d;
    out.level = level;

    const DirichletCharacter twist = psi * DirichletCharacter::teichmuller_power(p, -1);
    const GroupRingElement nu = ec_pushforward(p, d, out.c, twist, level, precision);
    const long k = nu.precision;
    const u64 q = ipow(p, k);
    // sum nu_j (1+T)^j by Horner in X = 1 + T.
    std::vector<u64> acc(truncation, 0);
    for (std::size_t j = nu.size(); j-- > 0;) {
        for (std::size_t i = truncation - 1; i >= 1; --i) acc[i] = (acc[i] + acc[i - 1]) % q;
        acc[0] = (acc[0] + to_u64(nu.coefficients[j])) % q;
    }
    std::vector<Integer> coeffs(truncation);
    for (std::size_t i = 0; i < truncation; ++i) coeffs[i] = Integer(static_cast<unsigned long>(acc[i]));
    const long ambiguity = level - (truncation > 1 ? floor_log(p, truncation - 1) : 0);
    const long numerator_precision = std::max(0L, std::min(k, ambiguity));
    out.numerator = LambdaElement(p, numerator_precision, truncation, std::move(coeffs));

    long loss = 0;
    for (u64 m = p; m <= truncation - 1 && truncation > 1; m *= p) loss += static_cast<long>((truncation - 1) / m);
    const long boosted = precision + 2 + loss;
    const PadicInt cp(p, boosted, Integer(static_cast<long>(out.c)));
    const PadicInt ang = angle(cp);
    const PadicInt e_c =
        padic_log(ang).divide_by_p_power(1) / padic_log(PadicInt(p, boosted, 1 + p)).divide_by_p_power(1);
    const PadicInt psi_c = psi.to_padic(out.c, p, boosted);
    LambdaElement h = LambdaElement::constant(PadicInt::one(p, boosted), truncation) - dirac(e_c, truncation) * (psi_c * ang);
    out.regularizer = h.with_precision(precision);
    if (out.regularizer.precision() > 0 && out.regularizer.coefficient(0).is_unit()) {
        LambdaElement quotient = out.numerator * out.regularizer.inverse();
        out.quotient = kMeasureSign < 0 ? -quotient : quotient;
    }
    return out;
}

Rational zeta_star_exact(unsigned long k, unsigned long p) {
    require(k >= 1, "weight must be positive");
    return (Rational(1) - Rational(pow(Integer(p), k - 1))) * zeta_at_one_minus(k);
}

LambdaElement interpolated_branch(unsigned long p, unsigned long u, long precision, std::size_t truncation) {
    require(p > 2 && is_prime(p), "p must be an odd prime");
    const unsigned long u0 = u % (p - 1);
    require(u0 % 2 == 0, "branches with values are indexed by even u");
    require(precision >= 1 && truncation >= 1, "precision and truncation must be positive");
    static std::mutex lock;
    static std::map<std::tuple<unsigned long, unsigned long, long, std::size_t>, LambdaElement> cache;
    const auto key = std::make_tuple(p, u0, precision, truncation);
    {
        std::lock_guard<std::mutex> guard(lock);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const std::size_t nodes = static_cast<std::size_t>(precision) + truncation;
    const unsigned long first = u0 == 0 ? p - 1 : u0;
    std::vector<Rational> z(nodes), dd(nodes);
    for (std::size_t j = 0; j < nodes; ++j) {
        const unsigned long k = first + (p - 1) * j;
        z[j] = Rational(pow(Integer(1 + p), k) - 1);
        dd[j] = zeta_star_exact(k, p);
        if (u0 == 0) dd[j] *= z[j];
    }
    for (std::size_t level = 1; level < nodes; ++level)
        for (std::size_t i = nodes - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (z[i] - z[i - level]);
    // Newton form to monomials, keeping T^0..T^(M-1).
    std::vector<Rational> poly(truncation, Rational(0));
    for (std::size_t i = nodes; i-- > 0;) {
        for (std::size_t m = truncation; m-- > 0;) poly[m] = (m > 0 ? poly[m - 1] : Rational(0)) - z[i] * poly[m];
        poly[0] += dd[i];
    }
    std::vector<Integer> coeffs;
    for (const auto& x : poly) {
        if (!is_p_integral(x, p)) fail(ErrorCode::precision, "interpolated branch is not integral; raise the node count");
        coeffs.push_back(PadicInt::from_rational(x, p, precision).residue());
    }
    LambdaElement out(p, precision, truncation, std::move(coeffs));
    std::lock_guard<std::mutex> guard(lock);
    cache.emplace(key, out);
    return out;
}

LpResult zeta_star(const PadicInt& s, unsigned long u) {
    const unsigned long p = s.prime();
    const long n = s.precision();
    require(n >= 1, "s must carry at least one digit");
    const unsigned long u0 = u % (p - 1);
    if (u0 % 2 == 1) fail(ErrorCode::precondition, "zeta* is taken on even branches u");
    if (u0 != 0) {
        const PadicInt z = weight_point(PadicInt::one(p, n) - s);
        const LambdaElement f = interpolated_branch(p, u0, n, static_cast<std::size_t>(n));
        const PadicInt value = evaluate_at_character(f, z).with_precision(n);
        return {value, value.precision(), "branch"};
    }
    // v(zeta*(s, 0)) = -v(z) < 0
    fail(ErrorCode::pole, "zeta*(s, 0) is not p-integral (pole of the trivial branch at s = 1)");
}

LpResult zeta_star(long s, unsigned long u, unsigned long p, long precision) {
    if (s <= 0) {
        const unsigned long k = static_cast<unsigned long>(1 - s);
        const unsigned long u0 = u % (p - 1);
        if (u0 % 2 == 1) fail(ErrorCode::precondition, "zeta* is taken on even branches u");
        const PadicInt value =
            lp_interpolation(k, DirichletCharacter::teichmuller_power(p, static_cast<long>(u0)), p, precision);
        return {value, value.precision(), "exact"};
    }
    return zeta_star(PadicInt(p, precision, Integer(s)), u);
}

KummerCheck kummer_classical_check(unsigned long p, unsigned long d, unsigned long k, unsigned long k2) {
    require(p > 2 && is_prime(p), "p must be an odd prime");
    require(d >= 1, "d must be positive");
    require(k >= 2 && k2 >= 2 && k % 2 == 0 && k2 % 2 == 0, "weights must be positive and even");
    require(k % (p - 1) != 0 && k2 % (p - 1) != 0, "p - 1 must not divide the weights");
    const unsigned long phi = ipow(p, static_cast<long>(d) - 1) * (p - 1);
    require((k > k2 ? k - k2 : k2 - k) % phi == 0, "weights must agree modulo phi(p^d)");
    KummerCheck out;
    out.required = static_cast<long>(d);
    out.difference = zeta_star_exact(k, p) - zeta_star_exact(k2, p);
    out.valuation = valuation(out.difference, p);
    out.holds = out.valuation >= out.required;
    return out;
}

RegularityVerdict regularity_scan(unsigned long p) {
    require(p > 2 && is_prime(p), "p must be an odd prime");
    RegularityVerdict out;
    out.p = p;
    for (unsigned long k = 2; k + 3 <= p; k += 2) {
        const Rational b = bernoulli_number(k);
        if (mpz_divisible_ui_p(b.get_num_mpz_t(), p)) out.irregular_indices.push_back(k);
    }
    out.regular = out.irregular_indices.empty();
    return out;
}

}  // namespace peis
