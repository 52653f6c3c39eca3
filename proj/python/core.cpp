#include "peis/bernoulli.hpp"
#include "peis/eisenstein.hpp"
#include "peis/error.hpp"
#include "peis/lfunctions.hpp"
#include "peis/serialize.hpp"
#include "peis/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace peis;

namespace {

// Results cross the boundary as JSON text; the Python side decodes them.
std::string dump(const Json& j) { return j.dump(); }

PadicInt padic(long long value, unsigned long p, long precision) {
    const Integer m = pow(Integer(p), static_cast<unsigned long>(precision));
    Integer r = Integer(static_cast<long>(value)) % m;
    if (r < 0) r += m;
    return {p, precision, r};
}

DirichletCharacter omega(unsigned long p, std::optional<long> j) {
    return j ? DirichletCharacter::teichmuller_power(p, *j) : DirichletCharacter::trivial();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "p-adic L-functions, Iwasawa algebra and Eisenstein families";

    static py::handle error_type = py::exception<Error>(m, "PeisError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr ptr) {
        try {
            if (ptr) std::rethrow_exception(ptr);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
            exc.attr("code") = to_string(e.code());
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    m.def("bernoulli", [](unsigned long n) { return to_string(bernoulli_number(n)); }, py::arg("n"));
    m.def("zeta_one_minus", [](unsigned long k) { return to_string(zeta_at_one_minus(k)); }, py::arg("k"));
    m.def("generalized_bernoulli",
          [](unsigned long n, unsigned long p, std::optional<long> j) { return dump(to_json(generalized_bernoulli(n, omega(p, j)))); },
          py::arg("n"), py::arg("p"), py::arg("j") = py::none());

    m.def("teichmuller", [](long long a, unsigned long p, long n) { return teichmuller(Integer(static_cast<long>(a)), p, n).residue().get_str(); },
          py::arg("a"), py::arg("p"), py::arg("precision"));
    m.def("padic_log", [](long long x, unsigned long p, long n) { return dump(to_json(padic_log(padic(x, p, n)))); },
          py::arg("x"), py::arg("p"), py::arg("precision"));
    m.def("digits", [](const std::string& rational, unsigned long p, long n) {
              return PadicInt::from_rational(parse_rational(rational), p, n).digit_string();
          },
          py::arg("x"), py::arg("p"), py::arg("precision"));

    m.def("lp_interpolation",
          [](unsigned long n, long j, unsigned long p, long precision) {
              return dump(to_json(lp_interpolation(n, omega(p, j), p, precision)));
          },
          py::arg("n"), py::arg("j"), py::arg("p"), py::arg("precision") = 20);
    m.def("lp_measure",
          [](long s, long j, unsigned long p, long precision, long level) {
              MeasureRouteOptions options;
              options.level = level;
              return dump(to_json(lp_measure_route(padic(s, p, precision), omega(p, j), options)));
          },
          py::arg("s"), py::arg("j"), py::arg("p"), py::arg("precision") = 20, py::arg("level") = 8);
    m.def("zeta_star",
          [](long s, unsigned long u, unsigned long p, long precision) { return dump(to_json(zeta_star(s, u, p, precision))); },
          py::arg("s"), py::arg("u"), py::arg("p"), py::arg("precision") = 20);
    m.def("kummer_check",
          [](unsigned long p, unsigned long d, unsigned long k, unsigned long k2) {
              const auto r = kummer_classical_check(p, d, k, k2);
              return dump(Json{{"holds", r.holds}, {"difference", to_json(r.difference)}, {"valuation", r.valuation},
                               {"required", r.required}});
          },
          py::arg("p"), py::arg("d"), py::arg("k"), py::arg("k2"));
    m.def("regularity",
          [](unsigned long p) {
              const auto r = regularity_scan(p);
              return dump(Json{{"p", r.p}, {"regular", r.regular}, {"irregular_indices", r.irregular_indices}});
          },
          py::arg("p"));

    m.def("weierstrass",
          [](const std::vector<long long>& coeffs, unsigned long p, long precision, std::size_t truncation) {
              std::vector<Integer> c;
              for (long long x : coeffs) c.push_back(padic(x, p, precision).residue());
              return dump(to_json(weierstrass_prepare(LambdaElement(p, precision, truncation, c))));
          },
          py::arg("coeffs"), py::arg("p"), py::arg("precision") = 20, py::arg("truncation") = 12);

    m.def("classical_G", [](long k, std::size_t terms) { return dump(to_json(classical_G(k, terms))); },
          py::arg("k"), py::arg("terms") = 50);
    m.def("padic_G_star",
          [](long s, unsigned long u, unsigned long p, std::size_t terms, long precision) {
              return dump(to_json(padic_G_star(s, u, p, terms, precision)));
          },
          py::arg("s"), py::arg("u"), py::arg("p"), py::arg("terms") = 50, py::arg("precision") = 20);

    m.def("verify",
          [](const std::string& suite, std::optional<unsigned long> p) {
              verify::Config config;
              config.p = p;
              return dump(verify::to_json(verify::run_suite(suite, config)));
          },
          py::arg("suite"), py::arg("p") = py::none());
}
