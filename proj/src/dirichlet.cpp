#include "peis/dirichlet.hpp"

#include "peis/bernoulli.hpp"
#include "peis/error.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace peis {

namespace {

UnitGroup build_unit_group(unsigned long f) {
    UnitGroup group;
    group.modulus = f;
    unsigned long rest = f;
    for (auto q : prime_factors(f)) {
        unsigned long power = 1;
        while (rest % q == 0) {
            rest /= q;
            power *= q;
        }
        const unsigned long cofactor = f / power;
        // CRT lift: x = g mod power, x = 1 mod cofactor.
        auto lift = [&](unsigned long g) -> unsigned long {
            if (cofactor == 1) return g % f;
            const Integer inv = inverse_mod(Integer(cofactor), Integer(power));
            Integer t = mod(Integer(static_cast<long>(g)) - 1, Integer(power)) * inv;
            Integer x = mod(Integer(1) + Integer(cofactor) * t, Integer(f));
            return x.get_ui();
        };
        if (q != 2) {
            group.generators.push_back(lift(smallest_primitive_root_mod_p2(q)));
            group.orders.push_back(power / q * (q - 1));
        } else if (power == 4) {
            group.generators.push_back(lift(3));
            group.orders.push_back(2);
        } else if (power >= 8) {
            group.generators.push_back(lift(power - 1));
            group.orders.push_back(2);
            group.generators.push_back(lift(5));
            group.orders.push_back(power / 4);
        }
    }
    return group;
}

std::shared_ptr<const std::vector<int>> build_log_table(unsigned long f, unsigned long m,
                                                         const std::vector<unsigned long>& images) {
    const auto& group = UnitGroup::of(f);
    auto table = std::make_shared<std::vector<int>>(f, -1);
    const std::size_t r = group.orders.size();
    std::vector<unsigned long> digits(r, 0);
    while (true) {
        unsigned long element = 1 % f;
        unsigned long exponent = 0;
        for (std::size_t i = 0; i < r; ++i) {
            element = static_cast<unsigned long>(
                static_cast<unsigned __int128>(element) * powmod_ul(group.generators[i], digits[i], f) % f);
            exponent = (exponent + digits[i] * images[i]) % m;
        }
        (*table)[element] = static_cast<int>(exponent);
        std::size_t i = 0;
        while (i < r && ++digits[i] == group.orders[i]) digits[i++] = 0;
        if (i == r) break;
    }
    if (f == 1) (*table)[0] = 0;
    return table;
}

}  // namespace

const UnitGroup& UnitGroup::of(unsigned long modulus) {
    require(modulus >= 1, "modulus must be positive");
    static std::mutex lock;
    static std::map<unsigned long, UnitGroup> cache;
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(modulus);
    if (it == cache.end()) it = cache.emplace(modulus, build_unit_group(modulus)).first;
    return it->second;
}

DirichletCharacter::DirichletCharacter(unsigned long modulus, unsigned long order,
                                       std::vector<unsigned long> generator_images)
    : modulus_(modulus), order_(order), images_(std::move(generator_images)) {
    require(order >= 1, "character order must be positive");
    const auto& group = UnitGroup::of(modulus);
    require(images_.size() == group.generators.size(), "one image per generator of (Z/f)^x is required");
    unsigned long exact = 1;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        images_[i] %= order_;
        require(images_[i] * group.orders[i] % order_ == 0, "generator image has the wrong order");
        exact = lcm(exact, order_ / gcd(images_[i], order_));
    }
    for (auto& b : images_) b /= order_ / exact;
    order_ = exact;
    log_table_ = build_log_table(modulus_, order_, images_);
}

DirichletCharacter DirichletCharacter::trivial(unsigned long modulus) {
    return {modulus, 1, std::vector<unsigned long>(UnitGroup::of(modulus).generators.size(), 0)};
}

DirichletCharacter DirichletCharacter::teichmuller_power(unsigned long p, long j) {
    require(p > 2 && is_prime(p), "Teichmuller characters need an odd prime");
    // UnitGroup::of(p) uses tame_embedding_root(p) as its generator.
    return {p, p - 1, {static_cast<unsigned long>(mod_ll(j, static_cast<long long>(p - 1)))}};
}

std::optional<unsigned long> DirichletCharacter::exponent(long long a) const {
    const int e = (*log_table_)[static_cast<std::size_t>(mod_ll(a, static_cast<long long>(modulus_)))];
    if (e < 0) return std::nullopt;
    return static_cast<unsigned long>(e);
}

CyclotomicValue DirichletCharacter::value(long long a) const {
    const auto e = exponent(a);
    if (!e) return CyclotomicValue(order_);
    return CyclotomicValue::root_of_unity(order_, static_cast<long long>(*e));
}

bool DirichletCharacter::is_even() const { return exponent(-1).value_or(0) == 0; }

unsigned long DirichletCharacter::conductor() const {
    for (auto d : divisors(modulus_)) {
        bool factors = true;
        for (unsigned long a = 1; a < modulus_ && factors; a += d) {
            const int e = (*log_table_)[a];
            if (e > 0) factors = false;
        }
        if (factors) return d;
    }
    return modulus_;
}

DirichletCharacter DirichletCharacter::primitive() const {
    const unsigned long f0 = conductor();
    if (f0 == modulus_) return *this;
    const auto& group = UnitGroup::of(f0);
    std::vector<unsigned long> images;
    for (auto g : group.generators) {
        unsigned long a = g;
        while (gcd(a, modulus_) != 1) a += f0;
        images.push_back(*exponent(static_cast<long long>(a)));
    }
    return {f0, order_, std::move(images)};
}

PadicInt DirichletCharacter::to_padic(long long a, unsigned long p, long precision) const {
    if (!is_tame(p))
        fail(ErrorCode::precondition, "character of order " + std::to_string(order_) + " is not tame at p = " +
                                          std::to_string(p));
    const auto e = exponent(a);
    if (!e) return PadicInt::zero(p, precision);
    const PadicInt root = teichmuller(Integer(tame_embedding_root(p)), p, precision);
    return root.pow(Integer(*e * ((p - 1) / order_)));
}

DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b) {
    const unsigned long f = lcm(a.modulus_, b.modulus_);
    const unsigned long m = lcm(a.order_, b.order_);
    std::vector<unsigned long> images;
    for (auto g : UnitGroup::of(f).generators) {
        const unsigned long ea = *a.exponent(static_cast<long long>(g)) * (m / a.order_);
        const unsigned long eb = *b.exponent(static_cast<long long>(g)) * (m / b.order_);
        images.push_back((ea + eb) % m);
    }
    return {f, m, std::move(images)};
}

std::vector<DirichletCharacter> enumerate_characters(unsigned long f) {
    const auto& group = UnitGroup::of(f);
    const std::size_t r = group.orders.size();
    const unsigned long exponent =
        std::accumulate(group.orders.begin(), group.orders.end(), 1UL, [](unsigned long x, unsigned long y) {
            return lcm(x, y);
        });
    std::vector<DirichletCharacter> out;
    std::vector<unsigned long> digits(r, 0);
    while (true) {
        std::vector<unsigned long> images(r);
        for (std::size_t i = 0; i < r; ++i) images[i] = digits[i] * (exponent / group.orders[i]);
        out.emplace_back(f, exponent, std::move(images));
        std::size_t i = 0;
        while (i < r && ++digits[i] == group.orders[i]) digits[i++] = 0;
        if (i == r) break;
    }
    return out;
}

CyclotomicValue generalized_bernoulli(unsigned long n, const DirichletCharacter& chi, unsigned long multiple) {
    require(n >= 1, "generalized Bernoulli numbers are indexed from n = 1");
    const DirichletCharacter core = chi.primitive();
    if (multiple == 0 || multiple % core.modulus() != 0)
        fail(ErrorCode::precondition, "F = " + std::to_string(multiple) + " is not a multiple of the conductor " +
                                          std::to_string(core.modulus()));
    const RationalPolynomial poly = bernoulli_polynomial(n);
    std::vector<Rational> buckets(core.order(), Rational(0));
    const Rational big_f{Integer(multiple)};
    for (unsigned long a = 1; a <= multiple; ++a) {
        const auto e = core.exponent(static_cast<long long>(a));
        if (!e) continue;
        buckets[*e] += eval_poly(poly, Rational(Integer(a)) / big_f);
    }
    CyclotomicValue total(core.order(), std::move(buckets));
    return total * Rational(pow(Integer(multiple), n - 1));
}

CyclotomicValue generalized_bernoulli(unsigned long n, const DirichletCharacter& chi) {
    return generalized_bernoulli(n, chi, chi.conductor());
}

CyclotomicValue dirichlet_L_at_negative(unsigned long n, const DirichletCharacter& chi) {
    return generalized_bernoulli(n, chi) * Rational(-1, static_cast<long>(n));
}

CyclotomicValue euler_modified_L(unsigned long n, const DirichletCharacter& chi, unsigned long p) {
    const DirichletCharacter core = chi.primitive();
    CyclotomicValue factor(core.order(), Rational(1));
    factor -= core.value(static_cast<long long>(p)) * Rational(pow(Integer(p), n - 1));
    return factor * dirichlet_L_at_negative(n, chi);
}

bool parity_vanishing_check(unsigned long n, const DirichletCharacter& chi) {
    const bool mismatch = chi.is_even() != (n % 2 == 0);
    const bool expect_zero = mismatch && !(n == 1 && chi.is_trivial());
    return generalized_bernoulli(n, chi).is_zero() == expect_zero;
}

}  // namespace peis
