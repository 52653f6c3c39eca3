#pragma once

#include "peis/measures.hpp"
#include "peis/serialize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace peis::verify {

/// One named property check. `observed` and `required` are the valuations
/// (or digit counts) the check compares; observed >= required means pass.
struct Check {
    std::string name;
    bool passed = false;
    long observed = 0;
    long required = 0;
    std::string detail;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;
    bool passed() const;
};

struct Config {
    /// Restricts the prime grids to this prime; empty runs the default grids.
    std::optional<unsigned long> p;
    long precision = 20;
    std::size_t q_truncation = 50;
    std::size_t t_truncation = 20;
    long level = 8;
    EcFormula formula = EcFormula::regularized;
};

/// Kummer congruences on the grid p in {5, 7, 11, 13}, d <= 3, k < k' <= 60.
Check kummer_grid(const Config& config);
/// Measure route against the interpolation formula, n = 1..8.
Check dual_route(const Config& config);
/// zeta* at 1 - k against exact values, plus the limit sequence.
Check zeta_star_values(const Config& config);
/// Serre's family specialized at s in {1, 2, 3, 7} against G*_(s, 2).
Check family_specialization(const Config& config);
/// G*_k = G_k(q) - p^(k-1) G_k(q^p) for even k = 4..12.
Check stabilization(const Config& config);
/// Bernoulli and E_c distribution laws and the Haar non-measure witness.
Check distribution_laws(const Config& config);
/// Random reconstructions p^mu P U = f and the worked examples.
Check weierstrass_reconstruction(const Config& config);
/// Regularity of 5, 7, 11, 13 and irregularity of 37 and 691.
Check regularity(const Config& config);
/// Weight congruence audit on even 4 <= k, k' <= 40.
Check weight_congruences(const Config& config);
/// The constant term of Serre's family lies in Lambda.
Check constant_term_certificate(const Config& config);

/// The nine acceptance checks in order.
std::vector<Check> acceptance(const Config& config);

/// kummer, dualroute, specialization, distributions, weierstrass, all.
const std::vector<std::string>& suite_names();
/// Throws a usage error for an unknown suite.
Report run_suite(const std::string& name, const Config& config);

Json to_json(const Check& check);
Json to_json(const Report& report);

}  // namespace peis::verify
