#pragma once

#include "peis/iwasawa.hpp"
#include "peis/lfunctions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace peis {

/// Which weight an expansion carries: an integer k, a point (s, u) of
/// weight space, or a whole branch u (Lambda-valued families).
struct WeightLabel {
    enum class Kind { integer, character, branch };
    Kind kind = Kind::integer;
    long k = 0;
    std::optional<WeightCharacter> character;
    unsigned long u = 0;

    static WeightLabel integer(long k) { return {Kind::integer, k, std::nullopt, 0}; }
    static WeightLabel point(const WeightCharacter& w) { return {Kind::character, 0, w, w.u}; }
    static WeightLabel branch(unsigned long u) { return {Kind::branch, 0, std::nullopt, u}; }
};

/// a_0 + a_1 q + ... + a_M q^M over Rational, PadicInt or LambdaElement.
template <class Coefficient>
struct QExpansion {
    WeightLabel weight;
    std::vector<Coefficient> coefficients;

    std::size_t size() const { return coefficients.size(); }
    const Coefficient& operator[](std::size_t n) const { return coefficients[n]; }
    Coefficient& operator[](std::size_t n) { return coefficients[n]; }
};

using RationalQExpansion = QExpansion<Rational>;
using PadicQExpansion = QExpansion<PadicInt>;
using LambdaQExpansion = QExpansion<LambdaElement>;

/// G_k = zeta(1-k)/2 + sum sigma_{k-1}(n) q^n for even k >= 4, n <= M.
RationalQExpansion classical_G(long k, std::size_t m);

/// G_k(q) - p^(k-1) G_k(q^p), the p-stabilization, exactly.
RationalQExpansion stabilized_G(long k, unsigned long p, std::size_t m);

/// sigma*_{k-1}(n) = sum_{d | n, p not | d} d^-1 w(d)^u <d>^s for k = (s, u).
PadicInt sigma_star(const WeightCharacter& k, unsigned long n);

/// G*_k with a_0 = zeta*(1 - k)/2. Requires u even and nonzero; for u = 0
/// the constant term is not p-integral and a pole error is raised.
PadicQExpansion padic_G_star(const WeightCharacter& k, std::size_t m);
/// Weight (s, u) with an exact integer s: a_0 comes from generalized
/// Bernoulli numbers when s >= 1.
PadicQExpansion padic_G_star(long s, unsigned long u, unsigned long p, std::size_t m, long precision);
/// Integer weight k = (k, k mod p-1).
PadicQExpansion padic_G_star(long k, unsigned long p, std::size_t m, long precision);

struct ValuationReport {
    unsigned long p = 0;
    /// inf_n v_p(a_n); equal to `cap` with `at_cap` set when every
    /// coefficient vanishes to the known precision.
    long valuation = kInfiniteValuation;
    std::optional<std::size_t> index;
    bool at_cap = false;
    long cap = kInfiniteValuation;
    std::vector<long> per_coefficient;
};

ValuationReport valuation_report(const RationalQExpansion& f, unsigned long p);
ValuationReport valuation_report(const PadicQExpansion& f);

struct WeightAudit {
    /// v_p(f - g) - v_p(f), or nullopt when f = g on the available terms.
    std::optional<long> m_observed;
    bool consistent = true;
    long modulus = 1;  // (p-1) p^(m-1) when m_observed >= 1
};

/// If v_p(f - g) >= v_p(f) + m with m >= 1 then k = k' mod (p-1)p^(m-1).
WeightAudit weight_congruence_audit(const RationalQExpansion& f, const RationalQExpansion& g, unsigned long p);

struct ConstantTermAudit {
    bool hypothesis_met = false;
    bool holds = false;
    long constant_valuation = 0;
    long higher_valuation = 0;  // inf over n >= 1
};

/// v_p(a_0) + m >= inf_{n >= 1} v_p(a_n), checked when the image of k in
/// X_{m+1} = Z/(p-1)p^m is nonzero.
ConstantTermAudit constant_term_bound_audit(const RationalQExpansion& f, const WeightCharacter& k, long m);
ConstantTermAudit constant_term_bound_audit(const PadicQExpansion& f, const WeightCharacter& k, long m);

struct FamilyOptions {
    std::size_t m = 50;     // q-coefficients a_0..a_M
    long precision = 20;    // N
    std::size_t t_truncation = 12;  // M_T
};

/// (1+T)^(e_d) with e_d = log<d> / log(1+p), so that its value at
/// (1+p)^s - 1 is <d>^s.
LambdaElement angle_power_series(unsigned long d, unsigned long p, long precision, std::size_t truncation);

/// Serre's family for an even branch u != 0:
/// a_n(T) = sum_{d | n, p not | d} d^-1 w(d)^u (1+T)^(e_d) and a_0 the
/// interpolated branch of zeta* halved.
LambdaQExpansion serre_eisenstein_measure(unsigned long p, unsigned long u, const FamilyOptions& options = {});

/// E*_s = (zeta*(1-s, 0)/2)^-1 G*_(s,0) as a family: a_0 = 1 and
/// a_n = 2 H(T) sigma*_n(T) with H = T / (T zeta*) = T g(T).
LambdaQExpansion normalized_family_u0(unsigned long p, const FamilyOptions& options = {});

/// H(T) with H(z_s) = 1 / zeta*(1 - s, 0).
LambdaElement inverse_zeta_branch(unsigned long p, long precision, std::size_t truncation);

/// Evaluates every coefficient at z = (1+p)^s - 1.
PadicQExpansion specialize(const LambdaQExpansion& family, const PadicInt& s);

struct ConstantSample {
    long weight = 0;
    Rational value;  // exact a_0 of the specialization at this weight
};

/// Exact constant terms (1 - p^(k-1)) zeta(1-k)/2 at k = u + (p-1)j.
std::vector<ConstantSample> constant_term_samples(unsigned long p, unsigned long u, std::size_t count);

struct FsAudit {
    bool certified = false;
    bool bound_checks_passed = true;
    std::optional<long> bound_failure_weight;
    /// First Newton divided difference that is not p-integral, with the
    /// combination sum_j b_j a_0(k_j) it equals.
    std::optional<std::size_t> failing_index;
    std::vector<Rational> witness;
    Rational witness_value;
    /// Digits on which the reconstructed a_0(T) matches the family's a_0.
    long agreement = 0;
    long reconstruction_precision = 0;
};

/// Certifies that a_0 lies in Lambda given that a_n, n >= 1, do: every
/// sample passes the constant-term bound (m = 0), the Newton divided
/// differences of the samples at z_k are p-integral, and the interpolant
/// agrees with the family's a_0.
FsAudit fs_constant_term_audit(const LambdaQExpansion& family, const std::vector<ConstantSample>& samples);

}  // namespace peis
