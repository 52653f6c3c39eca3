#pragma once

#include "peis/padic.hpp"

#include <optional>
#include <vector>

namespace peis {

/// Element of Lambda = Z_p[[T]] known modulo (p^N, T^M). The variable T is
/// gamma - 1 for the fixed topological generator gamma = 1 + p of 1 + pZ_p.
/// Mixed-truncation arithmetic keeps the smaller N and the smaller M.
class LambdaElement {
public:
    LambdaElement() = default;
    LambdaElement(unsigned long p, long precision, std::size_t truncation, std::vector<Integer> coefficients = {});
    LambdaElement(std::size_t truncation, const std::vector<PadicInt>& coefficients);

    static LambdaElement constant(const PadicInt& c, std::size_t truncation);
    /// The element T itself.
    static LambdaElement variable(unsigned long p, long precision, std::size_t truncation);

    unsigned long prime() const { return p_; }
    long precision() const { return precision_; }
    std::size_t truncation() const { return coefficients_.size(); }
    const std::vector<Integer>& residues() const { return coefficients_; }
    PadicInt coefficient(std::size_t i) const;
    Integer modulus() const;

    bool is_zero() const;
    /// min_i v_p(c_i), or precision() for the zero element.
    long min_valuation() const;

    LambdaElement with_precision(long precision) const;
    LambdaElement truncated(std::size_t truncation) const;
    LambdaElement divide_by_p_power(long v) const;
    /// Multiplicative inverse; requires a unit constant term.
    LambdaElement inverse() const;

    LambdaElement operator-() const;
    LambdaElement& operator+=(const LambdaElement& rhs);
    LambdaElement& operator-=(const LambdaElement& rhs);
    LambdaElement& operator*=(const LambdaElement& rhs);
    LambdaElement& operator*=(const PadicInt& rhs);
    friend LambdaElement operator+(LambdaElement a, const LambdaElement& b) { return a += b; }
    friend LambdaElement operator-(LambdaElement a, const LambdaElement& b) { return a -= b; }
    friend LambdaElement operator*(LambdaElement a, const LambdaElement& b) { return a *= b; }
    friend LambdaElement operator*(LambdaElement a, const PadicInt& b) { return a *= b; }
    friend LambdaElement operator*(const PadicInt& b, LambdaElement a) { return a *= b; }

    /// Agreement of the known parts, modulo p^min(precisions).
    bool congruent(const LambdaElement& other) const;
    bool congruent_mod(const LambdaElement& other, long k) const;

    friend bool operator==(const LambdaElement&, const LambdaElement&) = default;

private:
    void check_compatible(const LambdaElement& other) const;

    unsigned long p_ = 3;
    long precision_ = 0;
    std::vector<Integer> coefficients_;  // residues mod p^N
};

/// Element sum_j a_j gamma^j of Z_p[Gamma / Gamma^(p^n)], j = 0..p^n - 1.
struct GroupRingElement {
    unsigned long p = 3;
    long precision = 0;
    unsigned level = 0;
    std::vector<Integer> coefficients;  // residues mod p^precision, size p^level

    GroupRingElement() = default;
    GroupRingElement(unsigned long p, long precision, unsigned level);
    std::size_t size() const { return coefficients.size(); }
    PadicInt coefficient(std::size_t j) const { return {p, precision, coefficients[j]}; }
    /// Image at a lower level: coefficients summed over j mod p^level.
    GroupRingElement reduce_to(unsigned level) const;
    PadicInt augmentation() const;
};

/// sum a_j gamma^j -> sum a_j (1+T)^j mod (p^N, T^M).
LambdaElement from_group_ring(const GroupRingElement& g, std::size_t truncation);

/// Reads a polynomial element (degree < p^n) back as group-ring coefficients
/// at level n. Requires truncation >= p^n.
GroupRingElement to_group_ring(const LambdaElement& f, unsigned level);

/// (1+T)^j for an exact integer j (negative allowed).
LambdaElement dirac(const Integer& exponent, unsigned long p, long precision, std::size_t truncation);
/// (1+T)^j for j in Z_p known mod p^N. Binomial coefficients C(j, i) for
/// i < M are only determined modulo p^(N - v_p((M-1)!)), which is the
/// precision of the result.
LambdaElement dirac(const PadicInt& exponent, std::size_t truncation);

/// f(z) for v(z) >= 1: the value at the character gamma -> 1 + z. The result
/// carries precision min(N_f, N_z, M * v(z)), the bound on the T^M tail.
PadicInt evaluate_at_character(const LambdaElement& f, const PadicInt& z);

/// z = (1+p)^s - 1, the point where f is integrated against <x>^s.
PadicInt weight_point(const PadicInt& s);
PadicInt weight_point(long s, unsigned long p, long precision);

/// f = p^mu * P * U with P distinguished of degree lambda and U a unit.
/// For an input known modulo (p^N, T^M) the pair (P, U) is one valid
/// factorization at that precision. P itself is only pinned down to roughly
/// p^(M / lambda).
struct WeierstrassData {
    long mu = 0;
    long lambda = 0;
    LambdaElement distinguished;
    LambdaElement unit;
};

WeierstrassData weierstrass_prepare(const LambdaElement& f);

struct IwasawaInvariants {
    long mu = 0;
    long lambda = 0;
    friend bool operator==(const IwasawaInvariants&, const IwasawaInvariants&) = default;
};

IwasawaInvariants lambda_mu_invariants(const LambdaElement& f);

struct UniquenessReport {
    bool indistinguishable = true;
    std::optional<long> first_failing_weight;
    /// Precision at which the values f(z_k) - g(z_k) were compared.
    long checked_precision = 0;
    /// When indistinguishable, f = g modulo (p^coefficient_precision, T^M):
    /// checked_precision - (M - 1) - v_p((M-1)!), the Vandermonde loss.
    long coefficient_precision = 0;
};

/// Compares f and g at the characters <x>^k, k = 0..max_weight.
UniquenessReport uniqueness_by_weights(const LambdaElement& f, const LambdaElement& g, long max_weight);

/// Witness that no Z_p-valued measure has the requested moments: a finite
/// combination b with sum_i b_i f_i(y) in p^n Z_p for every y while
/// sum_i b_i a_i is not in p^n Z_p.
struct KummerCertificate {
    std::vector<Rational> coefficients;
    long n = 0;
    Rational combined_moment;
};

struct KummerSolution {
    bool exists = false;
    std::vector<PadicInt> measure;  // values on the points of Y_n when exists
    long precision = 0;
    std::optional<KummerCertificate> certificate;
};

/// Solves sum_y f_i(y) mu(y) = a_i for mu on a finite level Y_n.
/// functions[i][y] is f_i(y); the f_i must span the functions on Y_n.
KummerSolution abstract_kummer_solve(const std::vector<std::vector<PadicInt>>& functions,
                                     const std::vector<PadicInt>& moments);

}  // namespace peis
