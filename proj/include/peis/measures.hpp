#pragma once

#include "peis/dirichlet.hpp"
#include "peis/iwasawa.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace peis {

enum class SpaceKind { Y, X, Gamma };

/// One of three concrete profinite systems:
///   Y      levels i >= 1, Y_i = (1/i)Z/Z, point a stands for a/i;
///   X      levels n >= 0, X_n = (Z/dp^(n+1))^x, points are residues;
///   Gamma  levels n >= 0, Gamma/Gamma^(p^n), point j stands for gamma^j.
struct ProfiniteSpace {
    SpaceKind kind = SpaceKind::Y;
    unsigned long d = 1;
    unsigned long p = 0;

    static ProfiniteSpace y_system() { return {SpaceKind::Y, 1, 0}; }
    static ProfiniteSpace x_system(unsigned long d, unsigned long p);
    static ProfiniteSpace gamma_system(unsigned long p);

    /// True when level `fine` maps onto level `coarse`.
    bool refines(long fine, long coarse) const;
    std::vector<long long> points(long level) const;
    /// Image of a point of level `fine` at level `coarse`.
    long long project(long long point, long fine, long coarse) const;
    /// dp^(n+1) on the X-system, p^n on Gamma, i on Y.
    unsigned long long level_size(long level) const;
    std::string name() const;
};

/// A distribution given by its exact values on a declared list of levels.
class Distribution {
public:
    using Evaluator = std::function<Rational(long level, long long point)>;

    Distribution(ProfiniteSpace space, std::vector<long> levels, Evaluator evaluator);

    const ProfiniteSpace& space() const { return space_; }
    const std::vector<long>& levels() const { return levels_; }
    bool has_level(long level) const;
    Rational value(long level, long long point) const;
    Rational total_mass(long level) const;

private:
    ProfiniteSpace space_;
    std::vector<long> levels_;
    Evaluator evaluator_;
};

struct CompatibilityWitness {
    long fine = 0;
    long coarse = 0;
    long long point = 0;
    Rational fiber_sum;
    Rational value;
};

struct CompatibilityReport {
    bool compatible = true;
    long pairs_checked = 0;
    std::optional<CompatibilityWitness> witness;
};

/// Checks the fiber-sum rule on every pair of declared levels.
CompatibilityReport check_compatibility(const Distribution& mu);

/// Smallest p-adic valuation over all values on the declared levels. The
/// distribution is certified a measure on that range when it is >= 0.
struct BoundednessCertificate {
    unsigned long p = 0;
    long min_valuation = kInfiniteValuation;
    long first_level = 0;
    long last_level = 0;
    long witness_level = 0;
    long long witness_point = 0;
    bool is_measure() const { return min_valuation >= 0; }
};

BoundednessCertificate certify_boundedness(const Distribution& mu, unsigned long p);

/// phi_k on the Y-system: phi_i(a/i) = i^(k-1) B_k({a/i}).
Distribution bernoulli_distribution(unsigned long k, std::vector<long> levels);

/// How E_c is evaluated. With D = dp^(n+1) and x' = c^-1 x mod D:
///   regularized  B_1(x/D) - c B_1(x'/D)
///   verbatim     B_1(x/D) - B_1(x'/D) + (c-1)/2
///   shifted      B_1(x/D) - c B_1(x'/D) + (c-1)/2
/// Only the regularized form is a measure; the others exist for audits.
enum class EcFormula { regularized, verbatim, shifted };

std::string to_string(EcFormula formula);
EcFormula parse_ec_formula(const std::string& text);

Distribution ec_measure(unsigned long d, unsigned long p, long long c, std::vector<long> levels,
                        EcFormula formula = EcFormula::regularized);

/// p^-n at every point of level n on Gamma: finitely additive, unbounded.
Distribution haar_distribution(unsigned long p, std::vector<long> levels);

/// sum_x f(x) mu_n(x) for a function f on level n.
Rational integrate_locally_constant(const Distribution& mu, long level,
                                    const std::function<Rational(long long)>& f);
PadicInt integrate_locally_constant(const Distribution& mu, long level,
                                    const std::function<PadicInt(long long)>& f, unsigned long p, long precision);

struct IntegralEstimate {
    PadicInt value;
    /// The true integral agrees with value modulo p^error_bound_exponent.
    long error_bound_exponent = 0;
};

/// Riemann sum at `level` for a continuous f with |f(x) - f(y)| <= p^-h(n)
/// whenever x = y at level n. Requires mu bounded through `level`.
IntegralEstimate integrate_continuous(const Distribution& mu, long level, const std::function<PadicInt(long long)>& f,
                                      const std::function<long(long)>& modulus, long precision);

/// Pushforward of psi * mu from X_n to Gamma/Gamma^(p^n) along x -> <x>.
/// psi must be a tame character whose modulus divides dp.
GroupRingElement project_branch(const Distribution& mu, const DirichletCharacter& psi, long level, long precision);

}  // namespace peis
