#include "peis/serialize.hpp"

#include "peis/error.hpp"

namespace peis {

namespace {

std::string decimal(const Integer& x) { return x.get_str(); }

Integer parse_integer(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    Integer out;
    if (!j.is_string() || out.set_str(j.get<std::string>(), 10) != 0) fail(ErrorCode::usage, "expected a decimal integer");
    return out;
}

Json valuation_json(long v) {
    if (v == kInfiniteValuation) return "inf";
    return v;
}

Json expansion_json(const char* ring) { return Json{{"ring", ring}}; }

}  // namespace

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const PadicInt& x) {
    return Json{{"p", x.prime()}, {"N", x.precision()}, {"residue", decimal(x.residue())}};
}

Json to_json(const CyclotomicValue& x) {
    Json coeffs = Json::array();
    for (const auto& c : x.coefficients()) coeffs.push_back(to_json(c));
    return Json{{"order", x.order()}, {"coefficients", coeffs}};
}

Json to_json(const DirichletCharacter& chi) {
    return Json{{"modulus", chi.modulus()}, {"order", chi.order()}, {"generator_images", chi.generator_images()}};
}

Json to_json(const LambdaElement& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.residues()) coeffs.push_back(decimal(c));
    return Json{{"p", f.prime()}, {"N", f.precision()}, {"M", f.truncation()}, {"coeffs", coeffs}};
}

Json to_json(const GroupRingElement& g) {
    Json coeffs = Json::array();
    for (const auto& c : g.coefficients) coeffs.push_back(decimal(c));
    return Json{{"p", g.p}, {"N", g.precision}, {"level", g.level}, {"coeffs", coeffs}};
}

Json to_json(const WeierstrassData& w) {
    return Json{{"mu", w.mu},
                {"lambda", w.lambda},
                {"distinguished", to_json(w.distinguished)},
                {"unit", to_json(w.unit)}};
}

Json to_json(const LpResult& r) {
    return Json{{"value", to_json(r.value)}, {"error_bound_exponent", r.error_bound_exponent}, {"route", r.route}};
}

Json to_json(const WeightLabel& w) {
    switch (w.kind) {
        case WeightLabel::Kind::integer: return Json{{"kind", "integer"}, {"k", w.k}};
        case WeightLabel::Kind::character:
            return Json{{"kind", "character"}, {"s", to_json(w.character->s)}, {"u", w.u}};
        case WeightLabel::Kind::branch: return Json{{"kind", "branch"}, {"u", w.u}};
    }
    return Json{};
}

Json to_json(const RationalQExpansion& f) {
    Json j = expansion_json("rational");
    j["weight"] = to_json(f.weight);
    Json coeffs = Json::array();
    for (const auto& c : f.coefficients) coeffs.push_back(to_json(c));
    j["coeffs"] = coeffs;
    return j;
}

Json to_json(const PadicQExpansion& f) {
    Json j = expansion_json("padic");
    long n = kInfiniteValuation;
    for (const auto& c : f.coefficients) n = std::min(n, c.precision());
    if (f.size() > 0) {
        j["p"] = f[0].prime();
        j["N"] = n;
    }
    j["weight"] = to_json(f.weight);
    Json coeffs = Json::array();
    for (const auto& c : f.coefficients) coeffs.push_back(to_json(c));
    j["coeffs"] = coeffs;
    return j;
}

Json to_json(const LambdaQExpansion& f) {
    Json j = expansion_json("lambda");
    if (f.size() > 0) {
        long n = kInfiniteValuation;
        std::size_t m = f[0].truncation();
        for (const auto& c : f.coefficients) {
            n = std::min(n, c.precision());
            m = std::min(m, c.truncation());
        }
        j["p"] = f[0].prime();
        j["N"] = n;
        j["M_T"] = m;
    }
    j["weight"] = to_json(f.weight);
    Json coeffs = Json::array();
    for (const auto& c : f.coefficients) coeffs.push_back(to_json(c));
    j["coeffs"] = coeffs;
    return j;
}

Json to_json(const ProfiniteSpace& space) {
    Json j{{"kind", space.name()}};
    if (space.kind == SpaceKind::X) j["d"] = space.d;
    if (space.kind != SpaceKind::Y) j["p"] = space.p;
    return j;
}

Json to_json(const BoundednessCertificate& cert) {
    Json j{{"p", cert.p},
           {"is_measure", cert.is_measure()},
           {"min_valuation", valuation_json(cert.min_valuation)},
           {"first_level", cert.first_level},
           {"last_level", cert.last_level}};
    if (cert.min_valuation != kInfiniteValuation) {
        j["witness_level"] = cert.witness_level;
        j["witness_point"] = cert.witness_point;
    }
    return j;
}

Json to_json(const CompatibilityReport& report) {
    Json j{{"compatible", report.compatible}, {"pairs_checked", report.pairs_checked}};
    if (report.witness) {
        const auto& w = *report.witness;
        j["witness"] = Json{{"fine", w.fine},
                            {"coarse", w.coarse},
                            {"point", w.point},
                            {"fiber_sum", to_json(w.fiber_sum)},
                            {"value", to_json(w.value)}};
    }
    return j;
}

Json to_json(const Distribution& mu) {
    Json levels = Json::object();
    for (long n : mu.levels()) {
        Json values = Json::object();
        for (auto x : mu.space().points(n)) values[std::to_string(x)] = to_json(mu.value(n, x));
        levels[std::to_string(n)] = values;
    }
    Json j{{"space", to_json(mu.space())}, {"levels", levels}};
    if (mu.space().p != 0) j["certificate"] = to_json(certify_boundedness(mu, mu.space().p));
    return j;
}

Json to_json(const ValuationReport& report) {
    Json per = Json::array();
    for (long v : report.per_coefficient) per.push_back(valuation_json(v));
    Json j{{"p", report.p}, {"valuation", valuation_json(report.valuation)}, {"at_cap", report.at_cap}};
    if (report.index) j["index"] = *report.index;
    if (report.cap != kInfiniteValuation) j["cap"] = report.cap;
    j["per_coefficient"] = per;
    return j;
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(Integer(j.get<long>()));
    if (!j.is_string()) fail(ErrorCode::usage, "expected a rational string");
    return parse_rational(j.get<std::string>());
}

PadicInt padic_from_json(const Json& j) {
    try {
        return PadicInt(j.at("p").get<unsigned long>(), j.at("N").get<long>(), parse_integer(j.at("residue")));
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::usage, std::string("malformed p-adic JSON: ") + e.what());
    }
}

LambdaElement lambda_from_json(const Json& j) {
    try {
        std::vector<Integer> coeffs;
        for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_integer(c));
        const std::size_t m = j.contains("M") ? j.at("M").get<std::size_t>() : coeffs.size();
        return LambdaElement(j.at("p").get<unsigned long>(), j.at("N").get<long>(), m, std::move(coeffs));
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::usage, std::string("malformed Lambda JSON: ") + e.what());
    }
}

DirichletCharacter character_from_json(const Json& j) {
    try {
        return DirichletCharacter(j.at("modulus").get<unsigned long>(), j.at("order").get<unsigned long>(),
                                  j.at("generator_images").get<std::vector<unsigned long>>());
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::usage, std::string("malformed character JSON: ") + e.what());
    }
}

std::string valuation_csv(const ValuationReport& report) {
    std::string out = "n,valuation\n";
    for (std::size_t n = 0; n < report.per_coefficient.size(); ++n) {
        const long v = report.per_coefficient[n];
        out += std::to_string(n) + "," + (v == kInfiniteValuation ? std::string("inf") : std::to_string(v)) + "\n";
    }
    return out;
}

}  // namespace peis
