#pragma once

#include "peis/dirichlet.hpp"
#include "peis/iwasawa.hpp"
#include "peis/measures.hpp"

#include <optional>
#include <string>
#include <vector>

namespace peis {

/// A p-adic value together with how it was obtained. The value is known
/// modulo p^error_bound_exponent.
struct LpResult {
    PadicInt value;
    long error_bound_exponent = 0;
    std::string route;
};

/// Exact L_p(1 - n, chi) = (1 - chi w^-n(p) p^(n-1)) (-B_{n, chi w^-n} / n),
/// with chi w^-n taken primitive.
CyclotomicValue lp_interpolation_exact(unsigned long n, const DirichletCharacter& chi, unsigned long p);
/// The same value embedded in Z_p. Requires chi w^-n tame; throws a pole
/// error when the value is not p-integral.
PadicInt lp_interpolation(unsigned long n, const DirichletCharacter& chi, unsigned long p, long precision);

/// Smallest primitive root mod p^2 that is prime to d.
long long default_regularizer(unsigned long p, unsigned long d = 1);

struct MeasureRouteOptions {
    unsigned long d = 1;
    long long c = 0;  // 0 selects default_regularizer(p, d)
    long level = 8;
    EcFormula formula = EcFormula::regularized;
};

/// L_p(s, chi) = sigma * I(-s) / (1 - chi(c) <c>^(1-s)) where
/// I(t) = int chi w^-1(x) <x>^t dE_c is the Riemann sum at the given level.
/// The sign sigma is fixed once at (n = 2, chi = w^2, p = 5); see
/// measure_route_sign().
LpResult lp_measure_route(const PadicInt& s, const DirichletCharacter& chi, const MeasureRouteOptions& options = {});

/// The calibrated sign sigma.
int measure_route_sign();

/// Pushforward of psi * E_c from X_n to Z_p[Gamma/Gamma^(p^n)], computed
/// with machine integers. Residues are exact modulo p^precision.
GroupRingElement ec_pushforward(unsigned long p, unsigned long d, long long c, const DirichletCharacter& psi,
                                long level, long precision, EcFormula formula = EcFormula::regularized);

/// The branch of L_p at a tame character psi as a quotient of Lambda elements:
/// L_p(-t, psi) = sigma * G(z_t) / h(z_t) with z_t = (1+p)^t - 1 and
/// h = 1 - psi(c) <c> (1+T)^(e_c), e_c = log<c> / log(1+p).
struct BranchElement {
    DirichletCharacter psi;
    long long c = 0;
    unsigned long d = 1;
    long level = 0;
    LambdaElement numerator;
    LambdaElement regularizer;
    /// sigma * G / h when h is a unit; empty for the pseudo-measure case.
    std::optional<LambdaElement> quotient;

    bool is_pseudo_measure() const { return !quotient.has_value(); }
    /// L_p(s, psi) read off the Lambda elements.
    PadicInt evaluate(const PadicInt& s) const;
};

/// c = 0 selects default_regularizer(p, d). The numerator is known modulo
/// p^(level - floor(log_p(M - 1))), the ambiguity of reading a level-n group
/// ring element in Lambda / T^M.
BranchElement branch_element(unsigned long p, const DirichletCharacter& psi, long long c, unsigned long d, long level,
                             std::size_t truncation, long precision);

/// Interpolates a branch of zeta_p by exact Newton interpolation at the
/// nodes z_k = (1+p)^k - 1, k = u (mod p-1). For even u != 0 the result F
/// satisfies F(z_s) = L_p(1 - s, w^u). For u = 0 it is T F(T), which lies in
/// Lambda with unit constant term. Known modulo (p^precision, T^truncation).
LambdaElement interpolated_branch(unsigned long p, unsigned long u, long precision, std::size_t truncation);

/// (1 - p^(k-1)) zeta(1 - k), the value of zeta* at the integer weight k.
Rational zeta_star_exact(unsigned long k, unsigned long p);

/// zeta*(s, u) = L_p(s, w^u) for even u. Integer s <= 0 use the exact
/// Bernoulli route; other s use the interpolated branch.
LpResult zeta_star(const PadicInt& s, unsigned long u);
LpResult zeta_star(long s, unsigned long u, unsigned long p, long precision);

struct KummerCheck {
    bool holds = false;
    Rational difference;
    long valuation = 0;
    long required = 0;
};

/// (1 - p^(k-1)) zeta(1 - k) = (1 - p^(k'-1)) zeta(1 - k') mod p^d for even
/// k = k' mod phi(p^d), with p - 1 not dividing k.
KummerCheck kummer_classical_check(unsigned long p, unsigned long d, unsigned long k, unsigned long k2);

struct RegularityVerdict {
    unsigned long p = 0;
    bool regular = true;
    std::vector<unsigned long> irregular_indices;
};

/// p regular iff p divides none of the numerators of B_2, ..., B_(p-3).
RegularityVerdict regularity_scan(unsigned long p);

}  // namespace peis
