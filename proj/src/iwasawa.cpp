#include "peis/iwasawa.hpp"

#include "peis/error.hpp"

#include <algorithm>

namespace peis {

namespace {

Integer prime_power(unsigned long p, long n) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(std::max(n, 0L)));
    return r;
}

long factorial_valuation(unsigned long i, unsigned long p) {
    long v = 0;
    for (unsigned long q = p; q <= i; q *= p) {
        v += static_cast<long>(i / q);
        if (q > i / p) break;
    }
    return v;
}

// Product of truncated series, keeping `length` coefficients.
std::vector<Integer> multiply(const std::vector<Integer>& a, const std::vector<Integer>& b, std::size_t length,
                              const Integer& m) {
    std::vector<Integer> out(length, 0);
    for (std::size_t i = 0; i < a.size() && i < length; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < length; ++j) out[i + j] += a[i] * b[j];
    }
    for (auto& c : out) c = mod(c, m);
    return out;
}

std::vector<Integer> series_inverse(const std::vector<Integer>& a, std::size_t length, const Integer& m) {
    std::vector<Integer> inv(length, 0);
    const Integer c0 = inverse_mod(a[0], m);
    inv[0] = c0;
    for (std::size_t n = 1; n < length; ++n) {
        Integer s = 0;
        for (std::size_t k = 1; k <= n && k < a.size(); ++k) s += a[k] * inv[n - k];
        inv[n] = mod(-s * c0, m);
    }
    return inv;
}

}  // namespace

LambdaElement::LambdaElement(unsigned long p, long precision, std::size_t truncation, std::vector<Integer> coefficients)
    : p_(p), precision_(precision), coefficients_(std::move(coefficients)) {
    require(p % 2 == 1 && p > 2, "Iwasawa algebra requires an odd prime");
    require(precision >= 0, "precision must be non-negative");
    coefficients_.resize(truncation, 0);
    const Integer m = modulus();
    for (auto& c : coefficients_) c = mod(c, m);
}

LambdaElement::LambdaElement(std::size_t truncation, const std::vector<PadicInt>& coefficients) {
    require(!coefficients.empty(), "need at least one coefficient to infer p and N");
    p_ = coefficients.front().prime();
    precision_ = coefficients.front().precision();
    for (const auto& c : coefficients) {
        require(c.prime() == p_, "coefficients for different primes");
        precision_ = std::min(precision_, c.precision());
    }
    *this = LambdaElement(p_, precision_, truncation, {});
    const Integer m = modulus();
    for (std::size_t i = 0; i < coefficients.size() && i < truncation; ++i)
        coefficients_[i] = mod(coefficients[i].residue(), m);
}

LambdaElement LambdaElement::constant(const PadicInt& c, std::size_t truncation) {
    return {c.prime(), c.precision(), truncation, {c.residue()}};
}

LambdaElement LambdaElement::variable(unsigned long p, long precision, std::size_t truncation) {
    return {p, precision, truncation, {0, 1}};
}

PadicInt LambdaElement::coefficient(std::size_t i) const {
    return {p_, precision_, i < coefficients_.size() ? coefficients_[i] : Integer(0)};
}

Integer LambdaElement::modulus() const { return prime_power(p_, precision_); }

bool LambdaElement::is_zero() const {
    return std::all_of(coefficients_.begin(), coefficients_.end(), [](const Integer& c) { return c == 0; });
}

long LambdaElement::min_valuation() const {
    long v = precision_;
    for (const auto& c : coefficients_)
        if (c != 0) v = std::min(v, valuation(c, p_));
    return v;
}

LambdaElement LambdaElement::with_precision(long precision) const {
    return {p_, std::min(precision, precision_), coefficients_.size(), coefficients_};
}

LambdaElement LambdaElement::truncated(std::size_t truncation) const {
    return {p_, precision_, std::min(truncation, coefficients_.size()), coefficients_};
}

LambdaElement LambdaElement::divide_by_p_power(long v) const {
    require(v >= 0 && v <= min_valuation(), "cannot divide out more powers of p than the valuation");
    const Integer q = prime_power(p_, v);
    std::vector<Integer> c(coefficients_.size());
    for (std::size_t i = 0; i < c.size(); ++i) mpz_divexact(c[i].get_mpz_t(), coefficients_[i].get_mpz_t(), q.get_mpz_t());
    return {p_, precision_ - v, c.size(), std::move(c)};
}

LambdaElement LambdaElement::inverse() const {
    if (coefficients_.empty() || precision_ == 0 || mpz_divisible_ui_p(coefficients_[0].get_mpz_t(), p_))
        fail(ErrorCode::precondition, "only elements with a unit constant term are invertible in Lambda");
    return {p_, precision_, coefficients_.size(), series_inverse(coefficients_, coefficients_.size(), modulus())};
}

void LambdaElement::check_compatible(const LambdaElement& other) const {
    if (p_ != other.p_) fail(ErrorCode::precondition, "mixing Lambda elements for different primes");
}

LambdaElement LambdaElement::operator-() const {
    std::vector<Integer> c(coefficients_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coefficients_[i];
    return {p_, precision_, c.size(), std::move(c)};
}

LambdaElement& LambdaElement::operator+=(const LambdaElement& rhs) {
    check_compatible(rhs);
    const std::size_t m = std::min(truncation(), rhs.truncation());
    std::vector<Integer> c(m);
    for (std::size_t i = 0; i < m; ++i) c[i] = coefficients_[i] + rhs.coefficients_[i];
    return *this = LambdaElement(p_, std::min(precision_, rhs.precision_), m, std::move(c));
}

LambdaElement& LambdaElement::operator-=(const LambdaElement& rhs) { return *this += -rhs; }

LambdaElement& LambdaElement::operator*=(const LambdaElement& rhs) {
    check_compatible(rhs);
    const std::size_t m = std::min(truncation(), rhs.truncation());
    const long n = std::min(precision_, rhs.precision_);
    return *this = LambdaElement(p_, n, m, multiply(coefficients_, rhs.coefficients_, m, prime_power(p_, n)));
}

LambdaElement& LambdaElement::operator*=(const PadicInt& rhs) {
    require(rhs.prime() == p_, "mixing primes");
    std::vector<Integer> c(coefficients_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coefficients_[i] * rhs.residue();
    return *this = LambdaElement(p_, std::min(precision_, rhs.precision()), coefficients_.size(), std::move(c));
}

bool LambdaElement::congruent(const LambdaElement& other) const {
    return congruent_mod(other, std::min(precision_, other.precision_));
}

bool LambdaElement::congruent_mod(const LambdaElement& other, long k) const {
    check_compatible(other);
    k = std::min({k, precision_, other.precision_});
    const Integer m = prime_power(p_, k);
    const std::size_t n = std::min(truncation(), other.truncation());
    for (std::size_t i = 0; i < n; ++i)
        if (mpz_divisible_p(Integer(coefficients_[i] - other.coefficients_[i]).get_mpz_t(), m.get_mpz_t()) == 0) return false;
    return true;
}

GroupRingElement::GroupRingElement(unsigned long p_, long precision_, unsigned level_)
    : p(p_), precision(precision_), level(level_) {
    coefficients.assign(prime_power(p_, level_).get_ui(), 0);
}

GroupRingElement GroupRingElement::reduce_to(unsigned lower) const {
    require(lower <= level, "can only reduce to a lower level");
    GroupRingElement out(p, precision, lower);
    const std::size_t size = out.size();
    for (std::size_t j = 0; j < coefficients.size(); ++j) out.coefficients[j % size] += coefficients[j];
    const Integer m = prime_power(p, precision);
    for (auto& c : out.coefficients) c = mod(c, m);
    return out;
}

PadicInt GroupRingElement::augmentation() const { return reduce_to(0).coefficient(0); }

LambdaElement from_group_ring(const GroupRingElement& g, std::size_t truncation) {
    const Integer m = prime_power(g.p, g.precision);
    std::vector<Integer> c(truncation, 0);
    for (std::size_t j = 0; j < g.coefficients.size(); ++j) {
        if (g.coefficients[j] == 0) continue;
        for (std::size_t i = 0; i < truncation && i <= j; ++i) c[i] += g.coefficients[j] * binomial(j, i);
    }
    return {g.p, g.precision, truncation, std::move(c)};
}

GroupRingElement to_group_ring(const LambdaElement& f, unsigned level) {
    GroupRingElement out(f.prime(), f.precision(), level);
    require(f.truncation() >= out.size(), "truncation must be at least p^level to read group-ring coefficients");
    // Rewrite sum c_i T^i in powers of X = 1 + T, then fold X^(p^n) = 1.
    const auto& c = f.residues();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (std::size_t j = 0; j <= i; ++j) {
            Integer term = c[i] * binomial(i, j);
            if ((i - j) % 2 == 1) term = -term;
            out.coefficients[j % out.size()] += term;
        }
    }
    const Integer m = f.modulus();
    for (auto& x : out.coefficients) x = mod(x, m);
    return out;
}

namespace {

// C(j, i) for an integer j of any sign.
Integer generalized_binomial(const Integer& j, unsigned long i) {
    Integer num = 1;
    for (unsigned long r = 0; r < i; ++r) num *= j - r;
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), factorial(i).get_mpz_t());
    return q;
}

}  // namespace

LambdaElement dirac(const Integer& exponent, unsigned long p, long precision, std::size_t truncation) {
    std::vector<Integer> c(truncation);
    for (std::size_t i = 0; i < truncation; ++i) c[i] = generalized_binomial(exponent, i);
    return {p, precision, truncation, std::move(c)};
}

LambdaElement dirac(const PadicInt& exponent, std::size_t truncation) {
    const long loss = truncation > 1 ? factorial_valuation(truncation - 1, exponent.prime()) : 0;
    const long precision = std::max(0L, exponent.precision() - loss);
    return dirac(exponent.residue(), exponent.prime(), precision, truncation);
}

PadicInt evaluate_at_character(const LambdaElement& f, const PadicInt& z) {
    require(z.prime() == f.prime(), "mixing primes");
    if (!z.is_zero() && z.valuation() < 1)
        fail(ErrorCode::precondition, "evaluation point must have positive valuation");
    const long tail = static_cast<long>(f.truncation()) * std::max(1L, z.valuation());
    const long precision = std::min({f.precision(), z.precision(), tail});
    const Integer m = prime_power(f.prime(), precision);
    Integer acc = 0;
    const auto& c = f.residues();
    for (std::size_t i = c.size(); i-- > 0;) acc = mod(acc * z.residue() + c[i], m);
    return {f.prime(), precision, acc};
}

PadicInt weight_point(const PadicInt& s) {
    const unsigned long p = s.prime();
    const PadicInt gamma(p, s.precision() + 1, 1 + p);
    return angle_power(gamma, s) - PadicInt::one(p, s.precision() + 1);
}

PadicInt weight_point(long s, unsigned long p, long precision) {
    const PadicInt gamma(p, precision, 1 + p);
    return gamma.pow(Integer(s)) - PadicInt::one(p, precision);
}

WeierstrassData weierstrass_prepare(const LambdaElement& f) {
    const unsigned long p = f.prime();
    const long mu = f.min_valuation();
    if (f.is_zero() || mu >= f.precision())
        fail(ErrorCode::precision, "element is indistinguishable from 0 at the working precision");
    const LambdaElement g = f.divide_by_p_power(mu);
    const std::size_t m = g.truncation();
    const auto& gc = g.residues();
    std::size_t lambda = 0;
    while (lambda < m && mpz_divisible_ui_p(gc[lambda].get_mpz_t(), p)) ++lambda;
    if (lambda >= m) fail(ErrorCode::precision, "no unit coefficient below T^M; truncation too short for lambda");

    const Integer modulus = g.modulus();
    // g = B + T^lambda C with B = 0 mod p and C a unit. The series q with
    // q g = T^lambda - r, deg r < lambda, solves q = C^-1 (1 - shift(q B)).
    std::vector<Integer> low(gc.begin(), gc.begin() + static_cast<long>(lambda));
    std::vector<Integer> high(gc.begin() + static_cast<long>(lambda), gc.end());
    high.resize(m, 0);
    const std::vector<Integer> c_inv = series_inverse(high, m, modulus);
    std::vector<Integer> q = c_inv;
    for (long iter = 0; iter <= g.precision(); ++iter) {
        std::vector<Integer> qb = multiply(q, low, m + lambda, modulus);
        std::vector<Integer> rhs(m, 0);
        rhs[0] = 1;
        for (std::size_t i = 0; i < m; ++i) rhs[i] = mod(rhs[i] - qb[i + lambda], modulus);
        std::vector<Integer> next = multiply(c_inv, rhs, m, modulus);
        if (next == q) break;
        q = std::move(next);
    }
    const std::vector<Integer> product = multiply(q, gc, m, modulus);
    std::vector<Integer> poly(product.begin(), product.begin() + static_cast<long>(lambda) + 1);
    for (std::size_t i = lambda + 1; i < m; ++i)
        if (product[i] != 0) fail(ErrorCode::precision, "Weierstrass iteration did not converge");
    WeierstrassData out;
    out.mu = mu;
    out.lambda = static_cast<long>(lambda);
    out.distinguished = LambdaElement(p, g.precision(), m, std::move(poly));
    out.unit = LambdaElement(p, g.precision(), m, series_inverse(q, m, modulus));
    return out;
}

IwasawaInvariants lambda_mu_invariants(const LambdaElement& f) {
    const auto data = weierstrass_prepare(f);
    return {data.mu, data.lambda};
}

UniquenessReport uniqueness_by_weights(const LambdaElement& f, const LambdaElement& g, long max_weight) {
    require(f.prime() == g.prime(), "mixing primes");
    const std::size_t m = std::min(f.truncation(), g.truncation());
    require(max_weight >= static_cast<long>(m), "need at least M + 1 weights (max_weight >= M)");
    const LambdaElement diff = f - g;
    UniquenessReport report;
    report.checked_precision = std::min(diff.precision(), static_cast<long>(m));
    for (long k = 0; k <= max_weight; ++k) {
        const PadicInt value = evaluate_at_character(diff, weight_point(k, f.prime(), diff.precision()));
        if (!value.with_precision(report.checked_precision).is_zero()) {
            report.indistinguishable = false;
            report.first_failing_weight = k;
            break;
        }
    }
    const long loss = static_cast<long>(m) - 1 + (m > 1 ? factorial_valuation(m - 1, f.prime()) : 0);
    report.coefficient_precision = std::max(0L, report.checked_precision - loss);
    return report;
}

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Inverse of a square matrix over Q together with its determinant.
std::pair<RationalMatrix, Rational> invert(RationalMatrix a) {
    const std::size_t n = a.size();
    RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return {{}, Rational(0)};
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(inv[pivot], inv[col]);
            det = -det;
        }
        const Rational piv = a[col][col];
        det *= piv;
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= piv;
            inv[col][j] /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational factor = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= factor * a[col][j];
                inv[r][j] -= factor * inv[col][j];
            }
        }
    }
    return {inv, det};
}

}  // namespace

KummerSolution abstract_kummer_solve(const std::vector<std::vector<PadicInt>>& functions,
                                     const std::vector<PadicInt>& moments) {
    require(!functions.empty() && functions.size() == moments.size(), "one moment per function is required");
    const std::size_t points = functions.front().size();
    const unsigned long p = moments.front().prime();
    long precision = moments.front().precision();
    for (std::size_t i = 0; i < functions.size(); ++i) {
        require(functions[i].size() == points, "all functions must live on the same level");
        precision = std::min(precision, moments[i].precision());
        for (const auto& v : functions[i]) precision = std::min(precision, v.precision());
    }
    auto as_rational = [](const PadicInt& x) { return Rational(x.residue()); };

    // Greedy independent subset; each dependent row must reproduce its moment.
    struct Reduced {
        std::vector<Rational> row;
        std::vector<Rational> combination;  // over original rows
        std::size_t pivot;
    };
    std::vector<Reduced> basis;
    std::vector<std::size_t> selected;
    KummerSolution solution;
    for (std::size_t i = 0; i < functions.size(); ++i) {
        Reduced current{{}, std::vector<Rational>(functions.size(), Rational(0)), 0};
        for (const auto& v : functions[i]) current.row.push_back(as_rational(v));
        current.combination[i] = 1;
        for (const auto& b : basis) {
            if (current.row[b.pivot] == 0) continue;
            const Rational factor = current.row[b.pivot] / b.row[b.pivot];
            for (std::size_t y = 0; y < points; ++y) current.row[y] -= factor * b.row[y];
            for (std::size_t r = 0; r < functions.size(); ++r) current.combination[r] -= factor * b.combination[r];
        }
        auto nz = std::find_if(current.row.begin(), current.row.end(), [](const Rational& x) { return x != 0; });
        if (nz != current.row.end()) {
            current.pivot = static_cast<std::size_t>(nz - current.row.begin());
            basis.push_back(std::move(current));
            selected.push_back(i);
            continue;
        }
        Rational combined = 0;
        long reliable = precision;
        for (std::size_t r = 0; r < functions.size(); ++r) {
            if (current.combination[r] == 0) continue;
            combined += current.combination[r] * as_rational(moments[r]);
            reliable = std::min(reliable, precision + valuation(current.combination[r], p));
        }
        const long v = valuation(combined, p);
        if (combined != 0 && v < reliable && !solution.certificate) {
            solution.certificate = KummerCertificate{current.combination, std::max(0L, v + 1), combined};
        }
    }
    if (basis.size() < points) fail(ErrorCode::precondition, "the functions do not span the functions on Y_n");
    if (solution.certificate) return solution;

    RationalMatrix square;
    for (auto i : selected) {
        std::vector<Rational> row;
        for (const auto& v : functions[i]) row.push_back(as_rational(v));
        square.push_back(std::move(row));
    }
    auto [inv, det] = invert(square);
    // mu = F_S^-1 a_S; row y of the inverse gives mu(y).
    const long loss = valuation(det, p);
    solution.precision = std::max(0L, precision - loss);
    std::vector<Rational> mu(points, Rational(0));
    for (std::size_t y = 0; y < points; ++y)
        for (std::size_t j = 0; j < selected.size(); ++j) mu[y] += inv[y][j] * as_rational(moments[selected[j]]);

    for (std::size_t y = 0; y < points; ++y) {
        const long v = valuation(mu[y], p);
        if (mu[y] != 0 && v < 0) {
            KummerCertificate cert;
            cert.n = -v;
            const Rational scale(pow(Integer(p), static_cast<unsigned long>(-v)));
            cert.coefficients.assign(functions.size(), Rational(0));
            for (std::size_t j = 0; j < selected.size(); ++j) cert.coefficients[selected[j]] = scale * inv[y][j];
            cert.combined_moment = scale * mu[y];
            solution.certificate = std::move(cert);
            return solution;
        }
    }
    solution.exists = true;
    for (const auto& value : mu) solution.measure.push_back(PadicInt::from_rational(value, p, solution.precision));
    return solution;
}

}  // namespace peis
