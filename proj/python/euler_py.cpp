#include "euler/bounds.hpp"
#include "euler/cli.hpp"
#include "euler/reference.hpp"
#include "euler/transform.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace euler;

namespace {

long bits_for(std::size_t digits) { return static_cast<long>(digits * 3.3219280948873623) + 64; }

TransformParams make_params(std::uint32_t r, std::vector<std::uint32_t> n, std::vector<std::uint32_t> tau,
                            const std::string& alpha) {
    TransformParams p;
    p.r = r;
    p.n = std::move(n);
    p.tau = std::move(tau);
    p.alpha = Rational::parse(alpha);
    p.validate();
    return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Accelerated series for Euler's constant";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_ArithmeticError);

    m.def("scheme_names", &scheme_names);

    m.def(
        "gamma",
        [](std::size_t digits) { return gamma_ref(Precision(bits_for(digits))).value.to_fixed(digits); },
        py::arg("digits") = 50, "Euler's constant to the given number of decimals.");

    m.def(
        "gamma_alpha",
        [](const std::string& alpha, std::size_t digits) {
            return gamma_alpha_ref(Rational::parse(alpha), Precision(bits_for(digits))).value.to_fixed(digits);
        },
        py::arg("alpha"), py::arg("digits") = 50);

    m.def(
        "coefficients",
        [](std::uint32_t r, std::vector<std::uint32_t> n, std::vector<std::uint32_t> tau) {
            const CoefficientSet cs = coefficients(make_params(r, std::move(n), std::move(tau), "0"));
            std::vector<py::int_> out;
            for (const BigInt& a : cs.A) out.emplace_back(py::int_(py::str(a.get_str())));
            return out;
        },
        py::arg("r"), py::arg("n"), py::arg("tau"));

    m.def(
        "transform",
        [](std::uint32_t r, std::vector<std::uint32_t> n, std::vector<std::uint32_t> tau, const std::string& alpha,
           long bits) {
            const ApproxResult a = evaluate(make_params(r, std::move(n), std::move(tau), alpha), bits);
            py::dict d;
            d["approx"] = a.approx.to_string();
            d["abs_error"] = a.abs_error->to_string();
            d["prec_bits"] = a.working_precision;
            return d;
        },
        py::arg("r"), py::arg("n"), py::arg("tau"), py::arg("alpha") = "0", py::arg("bits") = 128);

    m.def(
        "approx",
        [](const std::string& name, std::uint32_t n, std::map<std::string, long> params, long bits) {
            const ApproxResult a = evaluate(scheme(SchemeSpec{name, n, std::move(params)}), bits);
            py::dict d;
            d["params"] = a.params.describe();
            d["approx"] = a.approx.to_string();
            d["abs_error"] = a.abs_error->to_string();
            d["prec_bits"] = a.working_precision;
            return d;
        },
        py::arg("scheme"), py::arg("n"), py::arg("params") = std::map<std::string, long>{}, py::arg("bits") = 128);

    m.def(
        "bound",
        [](const std::string& id, std::uint32_t n, std::map<std::string, long> params) {
            return bound(BoundSpec{parse_bound_id(id), n, std::move(params)}).to_string();
        },
        py::arg("bound"), py::arg("n"), py::arg("params") = std::map<std::string, long>{});

    m.def(
        "verify",
        [](const std::string& name, std::uint32_t n, std::map<std::string, long> params) {
            const VerificationRow v = verify(SchemeSpec{name, n, std::move(params)});
            py::dict d;
            d["bound"] = to_string(v.bound.id);
            d["abs_error"] = v.abs_error.to_string();
            d["bound_value"] = v.bound_value.to_string();
            d["status"] = to_string(v.status);
            return d;
        },
        py::arg("scheme"), py::arg("n"), py::arg("params") = std::map<std::string, long>{});

    m.def(
        "optimal_n",
        [](const std::string& id, std::map<std::string, long> params, std::size_t digits) {
            return optimal_n(parse_bound_id(id), params, digits);
        },
        py::arg("bound"), py::arg("params"), py::arg("digits"));

    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = cli::run(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line tool in-process; returns (exit_code, stdout, stderr).");
}
