#include "peis/bernoulli.hpp"
#include "peis/error.hpp"
#include "peis/serialize.hpp"
#include "peis/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace peis;

namespace {

enum Exit { ok = 0, check_failed = 1, usage_error = 2, precision_error = 3 };

struct Settings {
    unsigned long p = 5;
    long precision = 20;
    std::size_t q_truncation = 50;
    std::size_t t_truncation = 12;
    long levels = 8;
    std::string ec_formula = "regularized";
    std::string output = "json";
};

Json config_json(const Settings& s) {
    return Json{{"p", s.p},
                {"N", s.precision},
                {"M", s.q_truncation},
                {"M_T", s.t_truncation},
                {"levels", s.levels},
                {"ec_formula", s.ec_formula}};
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// "w<j>" for omega^j, "trivial", or "<modulus>:<order>:<e1,e2,...>".
DirichletCharacter parse_character(const std::string& text, unsigned long p) {
    if (text == "trivial" || text == "1") return DirichletCharacter::trivial();
    if (text.size() > 1 && text[0] == 'w') {
        try {
            return DirichletCharacter::teichmuller_power(p, std::stol(text.substr(1)));
        } catch (const std::logic_error&) {
            fail(ErrorCode::usage, "bad character '" + text + "'");
        }
    }
    std::vector<std::string> parts;
    std::stringstream in(text);
    for (std::string part; std::getline(in, part, ':');) parts.push_back(part);
    if (parts.size() != 3) fail(ErrorCode::usage, "character must be w<j>, trivial, or modulus:order:images");
    try {
        std::vector<unsigned long> images;
        std::stringstream list(parts[2]);
        for (std::string e; std::getline(list, e, ',');)
            if (!e.empty()) images.push_back(std::stoul(e));
        return DirichletCharacter(std::stoul(parts[0]), std::stoul(parts[1]), images);
    } catch (const std::logic_error&) {
        fail(ErrorCode::usage, "bad character '" + text + "'");
    }
}

PadicInt parse_point(const std::string& text, const Settings& s) {
    return PadicInt::from_rational(parse_rational(text), s.p, s.precision);
}

Json result_json(const LpResult& r, const Settings& s) {
    Json j = to_json(r);
    j["digits"] = r.value.digit_string();
    j["config"] = config_json(s);
    return j;
}

unsigned long prime_to_p_part(unsigned long f, unsigned long p) {
    while (f % p == 0) f /= p;
    return f;
}

std::vector<Integer> parse_coefficients(const std::string& text) {
    std::vector<Integer> out;
    std::stringstream in(text);
    for (std::string c; std::getline(in, c, ',');) {
        Integer v;
        if (v.set_str(c, 10) != 0) fail(ErrorCode::usage, "coefficient '" + c + "' is not an integer");
        out.push_back(v);
    }
    if (out.empty()) fail(ErrorCode::usage, "no coefficients given");
    return out;
}

std::string distribution_csv(const Distribution& mu) {
    std::string out = "level,point,value\n";
    for (long n : mu.levels())
        for (auto x : mu.space().points(n))
            out += std::to_string(n) + "," + std::to_string(x) + "," + to_string(mu.value(n, x)) + "\n";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    Settings s;
    CLI::App app{"p-adic Eisenstein series, p-adic L-functions and Iwasawa algebra computations"};
    app.set_help_all_flag("--help-all", "Expand all help");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--p", s.p, "odd prime")->envname("PEIS_P")->capture_default_str();
    app.add_option("--prec", s.precision, "p-adic precision N")->envname("PEIS_PREC")->capture_default_str();
    app.add_option("--qprec", s.q_truncation, "q-expansion truncation M")->envname("PEIS_QPREC")->capture_default_str();
    auto* tprec = app.add_option("--tprec", s.t_truncation, "T-adic truncation M_T")
                      ->envname("PEIS_TPREC")
                      ->capture_default_str();
    app.add_option("--levels", s.levels, "integration depth")->envname("PEIS_LEVELS")->capture_default_str();
    app.add_option("--ec-formula", s.ec_formula, "E_c formula")
        ->envname("PEIS_EC_FORMULA")
        ->check(CLI::IsMember({"regularized", "verbatim", "shifted"}))
        ->capture_default_str();
    app.add_option("--output", s.output, "output format")
        ->envname("PEIS_OUTPUT")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    long bern_n = 0;
    auto* bern = app.add_subcommand("bernoulli", "exact Bernoulli number B_n");
    bern->add_option("--n", bern_n, "index")->required()->check(CLI::NonNegativeNumber);

    long lv_n = 1;
    std::string lv_chi = "trivial";
    auto* lvalue = app.add_subcommand("lvalue", "exact L(1 - n, chi)");
    lvalue->add_option("--n", lv_n, "n >= 1")->required()->check(CLI::PositiveNumber);
    lvalue->add_option("--chi", lv_chi, "w<j>, trivial, or modulus:order:images")->capture_default_str();

    std::string lp_chi = "w2", lp_at, lp_route = "interpolation";
    long long lp_c = 0;
    auto* lp = app.add_subcommand("lp", "Kubota-Leopoldt L_p(s, chi)");
    lp->add_option("--chi", lp_chi, "tame character")->capture_default_str();
    lp->add_option("--at", lp_at, "s in Z_p, as an integer or p-integral rational")->required();
    lp->add_option("--route", lp_route, "evaluation route")
        ->check(CLI::IsMember({"interpolation", "measure", "both"}))
        ->capture_default_str();
    lp->add_option("--c", lp_c, "regularizer c for the measure route (0 picks one)");

    std::string zs_at;
    unsigned long zs_u = 2;
    auto* zs = app.add_subcommand("zeta-star", "zeta*(s, u) = L_p(s, w^u)");
    zs->add_option("--at", zs_at, "s")->required();
    zs->add_option("--u", zs_u, "even branch")->capture_default_str();

    std::string es_kind = "padic", es_s;
    long es_k = 4;
    unsigned long es_u = 2;
    auto* es = app.add_subcommand("eisenstein", "Eisenstein q-expansions");
    es->add_option("--kind", es_kind, "classical, stabilized, padic, family or normalized")
        ->check(CLI::IsMember({"classical", "stabilized", "padic", "family", "normalized"}))
        ->capture_default_str();
    es->add_option("--k", es_k, "integer weight")->capture_default_str();
    es->add_option("--s", es_s, "s of a weight (s, u) in Z_p x Z/(p-1)");
    es->add_option("--u", es_u, "branch u")->capture_default_str();

    std::string ms_kind = "ec";
    unsigned long ms_k = 1, ms_d = 1;
    long long ms_c = 0;
    long ms_depth = 2;
    auto* ms = app.add_subcommand("measure", "distributions on profinite spaces");
    ms->add_option("--kind", ms_kind, "bernoulli, ec or haar")
        ->check(CLI::IsMember({"bernoulli", "ec", "haar"}))
        ->capture_default_str();
    ms->add_option("--k", ms_k, "Bernoulli index")->capture_default_str();
    ms->add_option("--d", ms_d, "tame level d")->capture_default_str();
    ms->add_option("--c", ms_c, "regularizer (0 picks one)");
    ms->add_option("--depth", ms_depth, "largest level listed")->capture_default_str();

    std::string ws_coeffs;
    auto* ws = app.add_subcommand("weierstrass", "Weierstrass preparation in Z_p[[T]]");
    ws->add_option("--coeffs", ws_coeffs, "comma-separated integer coefficients, constant term first")->required();

    std::string suite = "all";
    auto* vf = app.add_subcommand("verify", "run a verification suite");
    vf->add_option("suite", suite, "kummer, dualroute, specialization, distributions, weierstrass or all")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (s.p < 3 || !is_prime(s.p)) fail(ErrorCode::usage, "--p must be an odd prime");
        if (s.precision < 1 || s.q_truncation < 1 || s.t_truncation < 1)
            fail(ErrorCode::usage, "--prec, --qprec and --tprec must be at least 1");
        const EcFormula formula = parse_ec_formula(s.ec_formula);

        if (*bern) {
            emit(to_json(bernoulli_number(static_cast<unsigned long>(bern_n))));
        } else if (*lvalue) {
            const auto chi = parse_character(lv_chi, s.p);
            const CyclotomicValue v = dirichlet_L_at_negative(static_cast<unsigned long>(lv_n), chi);
            Json j{{"value", to_json(v)}, {"route", "exact"}, {"error_bound_exponent", nullptr}};
            if (v.is_rational()) j["rational"] = to_json(v.rational_value());
            j["character"] = to_json(chi);
            j["config"] = config_json(s);
            emit(j);
        } else if (*lp) {
            const auto chi = parse_character(lp_chi, s.p);
            const PadicInt at = parse_point(lp_at, s);
            Json j{{"s", lp_at}, {"character", to_json(chi)}};
            std::optional<LpResult> interp, measured;
            if (lp_route != "measure") {
                const Rational r = parse_rational(lp_at);
                if (r.get_den() != 1 || r > 0)
                    fail(ErrorCode::precondition, "the interpolation route needs s = 1 - n with n >= 1");
                const unsigned long n = Integer(1 - r.get_num()).get_ui();
                const PadicInt v = lp_interpolation(n, chi, s.p, s.precision);
                interp = LpResult{v, v.precision(), "interpolation"};
                j["interpolation"] = result_json(*interp, s);
            }
            if (lp_route != "interpolation") {
                MeasureRouteOptions options;
                options.d = prime_to_p_part(chi.modulus(), s.p);
                options.c = lp_c;
                options.level = s.levels;
                options.formula = formula;
                measured = lp_measure_route(at, chi, options);
                j["measure"] = result_json(*measured, s);
            }
            if (interp && measured) j["agreement"] = interp->value.agreement(measured->value);
            emit(j);
        } else if (*zs) {
            const Rational r = parse_rational(zs_at);
            LpResult v = r.get_den() == 1 && r.get_num().fits_slong_p()
                             ? zeta_star(r.get_num().get_si(), zs_u, s.p, s.precision)
                             : zeta_star(parse_point(zs_at, s), zs_u);
            Json j = result_json(v, s);
            if (r.get_den() == 1 && r <= 0) {
                const unsigned long k = Integer(1 - r.get_num()).get_ui();
                if (k % (s.p - 1) == zs_u % (s.p - 1)) j["rational"] = to_json(zeta_star_exact(k, s.p));
            }
            emit(j);
        } else if (*es) {
            auto report = [&](const auto& expansion, Json j) {
                if (s.output == "csv") {
                    if constexpr (std::is_same_v<std::decay_t<decltype(expansion)>, RationalQExpansion>)
                        std::cout << valuation_csv(valuation_report(expansion, s.p));
                    else
                        std::cout << valuation_csv(valuation_report(expansion));
                    return;
                }
                j["config"] = config_json(s);
                emit(j);
            };
            FamilyOptions options{s.q_truncation, s.precision, s.t_truncation};
            if (es_kind == "classical") {
                const auto g = classical_G(es_k, s.q_truncation);
                report(g, to_json(g));
            } else if (es_kind == "stabilized") {
                const auto g = stabilized_G(es_k, s.p, s.q_truncation);
                report(g, to_json(g));
            } else if (es_kind == "padic") {
                PadicQExpansion g;
                if (es_s.empty()) {
                    g = padic_G_star(es_k, s.p, s.q_truncation, s.precision);
                } else {
                    const Rational r = parse_rational(es_s);
                    if (r.get_den() == 1 && r.get_num().fits_slong_p())
                        g = padic_G_star(r.get_num().get_si(), es_u, s.p, s.q_truncation, s.precision);
                    else
                        g = padic_G_star(WeightCharacter{parse_point(es_s, s), es_u}, s.q_truncation);
                }
                report(g, to_json(g));
            } else {
                const LambdaQExpansion f =
                    es_kind == "family" ? serre_eisenstein_measure(s.p, es_u, options) : normalized_family_u0(s.p, options);
                if (s.output == "csv") fail(ErrorCode::usage, "families have no CSV form");
                Json j = to_json(f);
                j["config"] = config_json(s);
                emit(j);
            }
        } else if (*ms) {
            if (ms_depth < 0) fail(ErrorCode::usage, "--depth must be non-negative");
            std::vector<long> levels;
            std::optional<Distribution> mu;
            if (ms_kind == "bernoulli") {
                for (long i = 1; i <= std::max(1L, ms_depth); ++i) levels.push_back(i);
                mu = bernoulli_distribution(ms_k, levels);
            } else {
                for (long n = 0; n <= ms_depth; ++n) levels.push_back(n);
                if (ms_kind == "ec")
                    mu = ec_measure(ms_d, s.p, ms_c != 0 ? ms_c : default_regularizer(s.p, ms_d), levels, formula);
                else
                    mu = haar_distribution(s.p, levels);
            }
            if (s.output == "csv") {
                std::cout << distribution_csv(*mu);
            } else {
                Json j = to_json(*mu);
                j["compatibility"] = to_json(check_compatibility(*mu));
                j["config"] = config_json(s);
                emit(j);
            }
        } else if (*ws) {
            std::vector<Integer> coeffs = parse_coefficients(ws_coeffs);
            const Integer modulus = pow(Integer(s.p), static_cast<unsigned long>(s.precision));
            for (auto& c : coeffs) c = mod(c, modulus);
            const std::size_t m = std::max(s.t_truncation, coeffs.size());
            const WeierstrassData w = weierstrass_prepare(LambdaElement(s.p, s.precision, m, coeffs));
            Json j = to_json(w);
            j["config"] = config_json(s);
            emit(j);
        } else if (*vf) {
            verify::Config config;
            if (app.get_option("--p")->count() > 0 || std::getenv("PEIS_P")) config.p = s.p;
            config.precision = s.precision;
            config.q_truncation = s.q_truncation;
            if (tprec->count() > 0 || std::getenv("PEIS_TPREC")) config.t_truncation = s.t_truncation;
            config.level = s.levels;
            config.formula = formula;
            const verify::Report report = verify::run_suite(suite, config);
            if (s.output == "csv") {
                std::cout << "check,passed,observed,required,detail\n";
                for (const auto& c : report.checks)
                    std::cout << c.name << "," << (c.passed ? "pass" : "fail") << "," << c.observed << ","
                              << c.required << ",\"" << c.detail << "\"\n";
            } else {
                Json j = to_json(report);
                j["config"] = config_json(s);
                emit(j);
            }
            return report.passed() ? ok : check_failed;
        }
    } catch (const Error& e) {
        std::cerr << Json{{"error", {{"code", to_string(e.code())}, {"message", e.what()}}}}.dump() << "\n";
        return e.code() == ErrorCode::precision ? precision_error : usage_error;
    }
    return ok;
}
