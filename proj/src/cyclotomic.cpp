#include "peis/cyclotomic.hpp"

#include "peis/error.hpp"

#include <map>
#include <mutex>

namespace peis {

namespace {

// Exact division of integer polynomials by a monic divisor.
std::vector<Integer> divide_monic(std::vector<Integer> num, const std::vector<Integer>& den) {
    const std::size_t dn = den.size() - 1;
    std::vector<Integer> quotient(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        const Integer c = num[i];
        quotient[i - dn] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return quotient;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(unsigned long m) {
    static std::mutex lock;
    static std::map<unsigned long, std::vector<Integer>> cache;
    {
        std::lock_guard<std::mutex> guard(lock);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    require(m >= 1, "cyclotomic polynomial order must be positive");
    std::vector<Integer> poly(m + 1, 0);
    poly[0] = -1;
    poly[m] = 1;
    for (auto d : divisors(m))
        if (d != m) poly = divide_monic(poly, cyclotomic_polynomial(d));
    std::lock_guard<std::mutex> guard(lock);
    return cache.emplace(m, std::move(poly)).first->second;
}

unsigned long tame_embedding_root(unsigned long p) { return smallest_primitive_root_mod_p2(p); }

CyclotomicValue::CyclotomicValue(unsigned long order, const Rational& constant) : order_(order) {
    require(order >= 1, "cyclotomic order must be positive");
    coefficients_.assign(euler_phi(order), Rational(0));
    coefficients_[0] = constant;
}

CyclotomicValue::CyclotomicValue(unsigned long order, std::vector<Rational> coefficients) : order_(order) {
    require(order >= 1, "cyclotomic order must be positive");
    reduce(std::move(coefficients));
}

CyclotomicValue CyclotomicValue::root_of_unity(unsigned long order, long long exponent) {
    std::vector<Rational> c(order, Rational(0));
    c[static_cast<std::size_t>(mod_ll(exponent, static_cast<long long>(order)))] = 1;
    return {order, std::move(c)};
}

void CyclotomicValue::reduce(std::vector<Rational> full) {
    const auto& phi = cyclotomic_polynomial(order_);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = full.size(); i-- > deg;) {
        const Rational c = full[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= deg; ++j) full[i - deg + j] -= c * Rational(phi[j]);
    }
    full.resize(deg, Rational(0));
    for (auto& c : full) c.canonicalize();
    coefficients_ = std::move(full);
}

bool CyclotomicValue::is_zero() const {
    for (const auto& c : coefficients_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicValue::is_rational() const {
    for (std::size_t i = 1; i < coefficients_.size(); ++i)
        if (coefficients_[i] != 0) return false;
    return true;
}

Rational CyclotomicValue::rational_value() const {
    if (!is_rational()) fail(ErrorCode::precondition, "cyclotomic value is not rational");
    return coefficients_[0];
}

CyclotomicValue CyclotomicValue::lift_to(unsigned long order) const {
    if (order == order_) return *this;
    require(order % order_ == 0, "can only lift a cyclotomic value to a multiple order");
    const unsigned long step = order / order_;
    std::vector<Rational> c(order, Rational(0));
    for (std::size_t i = 0; i < coefficients_.size(); ++i) c[i * step] = coefficients_[i];
    return {order, std::move(c)};
}

namespace {

unsigned long common_order(const CyclotomicValue& a, const CyclotomicValue& b) {
    return lcm(a.order(), b.order());
}

}  // namespace

CyclotomicValue& CyclotomicValue::operator+=(const CyclotomicValue& rhs) {
    const unsigned long m = common_order(*this, rhs);
    *this = lift_to(m);
    const CyclotomicValue r = rhs.lift_to(m);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += r.coefficients_[i];
    return *this;
}

CyclotomicValue& CyclotomicValue::operator-=(const CyclotomicValue& rhs) {
    const unsigned long m = common_order(*this, rhs);
    *this = lift_to(m);
    const CyclotomicValue r = rhs.lift_to(m);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] -= r.coefficients_[i];
    return *this;
}

CyclotomicValue& CyclotomicValue::operator*=(const CyclotomicValue& rhs) {
    const unsigned long m = common_order(*this, rhs);
    const CyclotomicValue a = lift_to(m);
    const CyclotomicValue b = rhs.lift_to(m);
    std::vector<Rational> full(a.coefficients_.size() + b.coefficients_.size(), Rational(0));
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
        if (a.coefficients_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j) full[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
    order_ = m;
    reduce(std::move(full));
    return *this;
}

CyclotomicValue& CyclotomicValue::operator*=(const Rational& rhs) {
    for (auto& c : coefficients_) c *= rhs;
    return *this;
}

bool operator==(const CyclotomicValue& a, const CyclotomicValue& b) {
    const unsigned long m = common_order(a, b);
    return a.lift_to(m).coefficients_ == b.lift_to(m).coefficients_;
}

PadicInt CyclotomicValue::to_padic(unsigned long p, long precision) const {
    if ((p - 1) % order_ != 0)
        fail(ErrorCode::precondition, "values of order " + std::to_string(order_) + " do not lie in Z_" +
                                          std::to_string(p));
    const PadicInt zeta = teichmuller(Integer(tame_embedding_root(p)), p, precision).pow(Integer((p - 1) / order_));
    PadicInt acc = PadicInt::zero(p, precision);
    for (std::size_t i = coefficients_.size(); i-- > 0;)
        acc = acc * zeta + PadicInt::from_rational(coefficients_[i], p, precision);
    return acc;
}

}  // namespace peis
