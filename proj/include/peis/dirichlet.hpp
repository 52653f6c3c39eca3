#pragma once

#include "peis/cyclotomic.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace peis {

/// Fixed generators of (Z/f)^x, built from a CRT split of f with a primitive
/// root per odd prime power and {-1, 5} at powers of two.
struct UnitGroup {
    unsigned long modulus = 1;
    std::vector<unsigned long> generators;
    std::vector<unsigned long> orders;

    static const UnitGroup& of(unsigned long modulus);
};

/// Dirichlet character modulo f with values in Z[zeta_m]. The character is
/// stored by the exponents b_i with chi(g_i) = zeta_m^(b_i); m is always the
/// exact order of the character.
class DirichletCharacter {
public:
    DirichletCharacter() : DirichletCharacter(1, 1, {}) {}
    /// generator_images[i] is the exponent of zeta_order at the i-th
    /// generator of UnitGroup::of(modulus).
    DirichletCharacter(unsigned long modulus, unsigned long order, std::vector<unsigned long> generator_images);

    static DirichletCharacter trivial(unsigned long modulus = 1);
    /// omega^j viewed as a character mod p, matched to the fixed embedding
    /// so that to_padic(a) is the Teichmuller power omega(a)^j.
    static DirichletCharacter teichmuller_power(unsigned long p, long j);

    unsigned long modulus() const { return modulus_; }
    unsigned long order() const { return order_; }
    const std::vector<unsigned long>& generator_images() const { return images_; }

    /// Exponent e with chi(a) = zeta_m^e, or nullopt when gcd(a, f) > 1.
    std::optional<unsigned long> exponent(long long a) const;
    CyclotomicValue value(long long a) const;

    bool is_trivial() const { return order_ == 1; }
    bool is_even() const;
    unsigned long conductor() const;
    /// The primitive character mod conductor() inducing this one.
    DirichletCharacter primitive() const;

    /// Values lie in Z_p exactly when the order divides p - 1.
    bool is_tame(unsigned long p) const { return (p - 1) % order_ == 0; }
    PadicInt to_padic(long long a, unsigned long p, long precision) const;

    friend DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b);
    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
        return a.modulus_ == b.modulus_ && a.order_ == b.order_ && a.images_ == b.images_;
    }

private:
    unsigned long modulus_;
    unsigned long order_;
    std::vector<unsigned long> images_;
    std::shared_ptr<const std::vector<int>> log_table_;  // exponent by residue, -1 off the unit group
};

/// All phi(f) characters mod f.
std::vector<DirichletCharacter> enumerate_characters(unsigned long f);

inline unsigned long conductor(const DirichletCharacter& chi) { return chi.conductor(); }

/// B_{n,chi} = F^(n-1) sum_{a=1}^{F} chi(a) B_n(a/F), using the primitive
/// character attached to chi; F must be a multiple of its conductor.
CyclotomicValue generalized_bernoulli(unsigned long n, const DirichletCharacter& chi, unsigned long multiple);
CyclotomicValue generalized_bernoulli(unsigned long n, const DirichletCharacter& chi);

/// L(1 - n, chi) = -B_{n,chi} / n.
CyclotomicValue dirichlet_L_at_negative(unsigned long n, const DirichletCharacter& chi);

/// (1 - chi(p) p^(n-1)) L(1 - n, chi), chi taken primitive.
CyclotomicValue euler_modified_L(unsigned long n, const DirichletCharacter& chi, unsigned long p);

/// True when B_{n,chi} vanishes exactly on parity mismatch (chi even with n
/// odd, or chi odd with n even), the pair (1, trivial) excepted.
bool parity_vanishing_check(unsigned long n, const DirichletCharacter& chi);

}  // namespace peis
