#include "peis/padic.hpp"

#include "peis/error.hpp"

#include <algorithm>

namespace peis {

namespace {

Integer prime_power(unsigned long p, long n) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(std::max(n, 0L)));
    return r;
}

// floor(log_p(i)) for i >= 1
long floor_log(unsigned long i, unsigned long p) {
    long e = 0;
    for (unsigned long q = p; q <= i; q *= p) {
        ++e;
        if (q > i / p) break;
    }
    return e;
}

long factorial_valuation(unsigned long i, unsigned long p) {
    long v = 0;
    for (unsigned long q = p; q <= i; q *= p) {
        v += static_cast<long>(i / q);
        if (q > i / p) break;
    }
    return v;
}

}  // namespace

PadicInt::PadicInt(unsigned long p, long precision, const Integer& value)
    : p_(p), precision_(precision) {
    require(p % 2 == 1 && p > 2, "p-adic arithmetic requires an odd prime");
    require(precision >= 0, "precision must be non-negative");
    residue_ = mod(value, modulus());
}

PadicInt PadicInt::from_rational(const Rational& x, unsigned long p, long precision) {
    if (!is_p_integral(x, p))
        fail(ErrorCode::precondition, to_string(x) + " is not " + std::to_string(p) + "-integral");
    const Integer m = prime_power(p, precision);
    return {p, precision, x.get_num() * inverse_mod(x.get_den(), m)};
}

Integer PadicInt::modulus() const { return prime_power(p_, precision_); }

Integer PadicInt::balanced_residue() const {
    Integer m = modulus();
    return 2 * residue_ > m ? Integer(residue_ - m) : residue_;
}

bool PadicInt::is_unit() const { return precision_ > 0 && mpz_divisible_ui_p(residue_.get_mpz_t(), p_) == 0; }

long PadicInt::valuation() const {
    if (residue_ == 0) return precision_;
    return peis::valuation(residue_, p_);
}

PadicInt PadicInt::with_precision(long precision) const {
    return {p_, std::min(precision, precision_), residue_};
}

PadicInt PadicInt::inverse() const {
    if (!is_unit()) fail(ErrorCode::precondition, "inverse of a non-unit p-adic integer");
    return {p_, precision_, inverse_mod(residue_, modulus())};
}

PadicInt PadicInt::divide_by_p_power(long v) const {
    require(v >= 0 && v <= valuation(), "cannot divide out more powers of p than the valuation");
    Integer q;
    mpz_divexact(q.get_mpz_t(), residue_.get_mpz_t(), prime_power(p_, v).get_mpz_t());
    return {p_, precision_ - v, q};
}

PadicInt PadicInt::pow(const Integer& exponent) const {
    PadicInt base = *this;
    Integer e = exponent;
    if (e < 0) {
        base = inverse();
        e = -e;
    }
    Integer r;
    mpz_powm(r.get_mpz_t(), base.residue_.get_mpz_t(), e.get_mpz_t(), modulus().get_mpz_t());
    return {p_, precision_, r};
}

void PadicInt::check_compatible(const PadicInt& other) const {
    if (p_ != other.p_) fail(ErrorCode::precondition, "mixing p-adic integers for different primes");
}

PadicInt PadicInt::operator-() const { return {p_, precision_, -residue_}; }

PadicInt& PadicInt::operator+=(const PadicInt& rhs) {
    check_compatible(rhs);
    precision_ = std::min(precision_, rhs.precision_);
    residue_ = mod(residue_ + rhs.residue_, modulus());
    return *this;
}

PadicInt& PadicInt::operator-=(const PadicInt& rhs) {
    check_compatible(rhs);
    precision_ = std::min(precision_, rhs.precision_);
    residue_ = mod(residue_ - rhs.residue_, modulus());
    return *this;
}

PadicInt& PadicInt::operator*=(const PadicInt& rhs) {
    check_compatible(rhs);
    precision_ = std::min(precision_, rhs.precision_);
    residue_ = mod(residue_ * rhs.residue_, modulus());
    return *this;
}

PadicInt& PadicInt::operator/=(const PadicInt& rhs) {
    check_compatible(rhs);
    return *this *= rhs.inverse();
}

bool PadicInt::congruent(const PadicInt& other) const {
    return congruent_mod(other, std::min(precision_, other.precision_));
}

bool PadicInt::congruent_mod(const PadicInt& other, long k) const {
    check_compatible(other);
    k = std::min({k, precision_, other.precision_});
    return mpz_divisible_p(Integer(residue_ - other.residue_).get_mpz_t(), prime_power(p_, k).get_mpz_t()) != 0;
}

long PadicInt::agreement(const PadicInt& other) const {
    check_compatible(other);
    const long cap = std::min(precision_, other.precision_);
    const Integer diff = residue_ - other.residue_;
    if (diff == 0) return cap;
    return std::min(cap, peis::valuation(diff, p_));
}

bool PadicInt::congruent_to(const Rational& x) const {
    return congruent(from_rational(x, p_, precision_));
}

std::string PadicInt::digit_string() const {
    std::string out;
    Integer rest = residue_;
    const Integer p(p_);
    for (long i = 0; i < precision_; ++i) {
        Integer digit = rest % p;
        rest /= p;
        if (digit == 0) continue;
        if (!out.empty()) out += " + ";
        out += digit.get_str();
        if (i == 1) out += "*" + std::to_string(p_);
        if (i > 1) out += "*" + std::to_string(p_) + "^" + std::to_string(i);
    }
    if (!out.empty()) out += " + ";
    return out + "O(" + std::to_string(p_) + "^" + std::to_string(precision_) + ")";
}

PadicInt teichmuller(const Integer& a, unsigned long p, long precision) {
    if (mpz_divisible_ui_p(a.get_mpz_t(), p) != 0)
        fail(ErrorCode::precondition, "Teichmuller lift of a non-unit");
    const Integer m = prime_power(p, precision);
    const Integer p_z(p);
    Integer x = mod(a, m);
    // x -> x^p gains one correct digit per step.
    for (long i = 0; i < precision; ++i) mpz_powm(x.get_mpz_t(), x.get_mpz_t(), p_z.get_mpz_t(), m.get_mpz_t());
    return {p, precision, x};
}

PadicInt teichmuller(const PadicInt& a) { return teichmuller(a.residue(), a.prime(), a.precision()); }

PadicInt angle(const PadicInt& a) {
    if (!a.is_unit()) fail(ErrorCode::precondition, "angle projection of a non-unit");
    return a * teichmuller(a).inverse();
}

PadicInt padic_log(const PadicInt& x) {
    const unsigned long p = x.prime();
    const long n = x.precision();
    PadicInt y = x - PadicInt::one(p, n);
    if (n > 0 && y.valuation() < 1) fail(ErrorCode::precondition, "p-adic logarithm needs x = 1 mod p");
    if (y.is_zero()) return PadicInt::zero(p, n);
    const long v = y.valuation();

    // Terms y^i / i have valuation >= i*v - floor(log_p i), increasing in i.
    unsigned long last = 1;
    while (static_cast<long>(last) * v - floor_log(last, p) < n) ++last;
    const long extra = floor_log(last, p);
    const Integer work = prime_power(p, n + extra);
    const Integer target = prime_power(p, n);

    Integer sum = 0;
    Integer power = 1;
    for (unsigned long i = 1; i < last; ++i) {
        power = mod(power * y.residue(), work);
        const long vi = peis::valuation(Integer(i), p);
        Integer term;
        mpz_divexact(term.get_mpz_t(), power.get_mpz_t(), prime_power(p, vi).get_mpz_t());
        Integer unit = Integer(i) / prime_power(p, vi);
        term = mod(term * inverse_mod(unit, target), target);
        if (i % 2 == 0) term = -term;
        sum += term;
    }
    return {p, n, sum};
}

PadicInt padic_exp(const PadicInt& y) {
    const unsigned long p = y.prime();
    const long n = y.precision();
    if (n > 0 && y.valuation() < 1) fail(ErrorCode::precondition, "p-adic exponential needs v(y) >= 1");
    if (y.is_zero()) return PadicInt::one(p, n);
    const long v = y.valuation();

    // v(y^i / i!) >= i*v - (i-1)/(p-1), which increases with i.
    unsigned long last = 1;
    while (static_cast<long>(last) * v - static_cast<long>((last - 1) / (p - 1)) < n) ++last;
    const long extra = factorial_valuation(last, p);
    const Integer work = prime_power(p, n + extra);
    const Integer target = prime_power(p, n);

    Integer sum = 1;
    Integer power = 1;
    Integer unit_factorial = 1;
    long factorial_v = 0;
    for (unsigned long i = 1; i < last; ++i) {
        power = mod(power * y.residue(), work);
        const long vi = peis::valuation(Integer(i), p);
        factorial_v += vi;
        unit_factorial = mod(unit_factorial * (Integer(i) / prime_power(p, vi)), target);
        Integer term;
        mpz_divexact(term.get_mpz_t(), power.get_mpz_t(), prime_power(p, factorial_v).get_mpz_t());
        sum += term * inverse_mod(unit_factorial, target);
    }
    return {p, n, sum};
}

PadicInt angle_power(const PadicInt& c, const PadicInt& s) {
    const unsigned long p = c.prime();
    if (s.prime() != p) fail(ErrorCode::precondition, "angle_power: mismatched primes");
    const PadicInt log_angle = padic_log(angle(c));
    // v(log<c>) >= 1
    const long precision = std::min(c.precision(), s.precision() + 1);
    return padic_exp(PadicInt(p, precision, s.residue() * log_angle.residue()));
}

WeightCharacter WeightCharacter::integer(long k, unsigned long p, long precision) {
    return {PadicInt(p, precision, k), static_cast<unsigned long>(mod_ll(k, static_cast<long long>(p - 1)))};
}

PadicInt weight_eval(const WeightCharacter& k, const PadicInt& a) {
    const PadicInt tame = teichmuller(a).pow(Integer(k.u));
    return tame * angle_power(a, k.s);
}

}  // namespace peis
