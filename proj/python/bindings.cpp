#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "commands.hpp"
#include "pfstringy/errors.hpp"
#include "pfstringy/linear_sections.hpp"
#include "pfstringy/mirror_hpd.hpp"
#include "pfstringy/pfaffian.hpp"
#include "pfstringy/qseries.hpp"

namespace py = pybind11;
using namespace pfs;

namespace {

// Exact values cross the boundary as fractions.Fraction.
py::object fraction(const mpq_class &x) {
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(py::int_(py::str(x.get_num().get_str())), py::int_(py::str(x.get_den().get_str())));
}

mpq_class from_python(const py::handle &x) {
    py::object f = py::module_::import("fractions").attr("Fraction")(x);
    return mpq_class(py::str(f.attr("numerator")).cast<std::string>() + "/" +
                     py::str(f.attr("denominator")).cast<std::string>());
}

py::object parse_json(const std::string &text) { return py::module_::import("json").attr("loads")(text); }

} // namespace

PYBIND11_MODULE(_core, m) {
    // Later registrations are tried first, so the base class goes first.
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);
    py::register_exception<ParityError>(m, "ParityError", PyExc_ValueError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_ValueError);

    py::class_<RatFunc>(m, "RatFunc")
        .def(py::init([](const std::string &s) { return parse_ratfunc(s); }), py::arg("text"))
        .def("__str__", &RatFunc::to_string)
        .def("__repr__", [](const RatFunc &f) { return "RatFunc('" + f.to_string() + "')"; })
        .def("factored", &RatFunc::to_factored_string)
        .def("is_polynomial", &RatFunc::is_polynomial)
        .def("is_zero", &RatFunc::is_zero)
        .def("__call__", [](const RatFunc &f, py::handle x) { return fraction(eval_at(f, from_python(x))); })
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self);

    m.def("gauss_binomial", [](long n, long k, long power) { return RatFunc(gauss_binomial(n, k, power)); },
          py::arg("n"), py::arg("k"), py::arg("power") = 1);
    m.def("e_strata_pf", &e_strata_pf, py::arg("i"), py::arg("n"));

    m.def(
        "stringy",
        [](long n, long k, const std::string &kind, const std::string &method) {
            DiscrepancyKind d = parse_kind(kind);
            if (method == "closed") return stringy_pf_closed({n, k}, d);
            if (method == "strata") return stringy_pf_strata({n, k}, d);
            throw InvariantError("method must be closed or strata");
        },
        py::arg("n"), py::arg("k"), py::arg("kind") = "usual", py::arg("method") = "closed");
    m.def("discrepancy", [](long j, long k, long n, const std::string &kind) {
        return fraction(discrepancy(j, k, n, parse_kind(kind)));
    }, py::arg("j"), py::arg("k"), py::arg("n"), py::arg("kind") = "usual");

    m.def("l_iso", &l_iso, py::arg("k"), py::arg("i"), py::arg("n"));
    m.def(
        "cut_f",
        [](long n, long k, long i, const std::string &method) {
            if (method == "closed") return f_closed({n, k, i});
            if (method == "recursive") return f_recursive({n, k, i});
            throw InvariantError("method must be closed or recursive");
        },
        py::arg("n"), py::arg("k"), py::arg("i"), py::arg("method") = "closed");

    m.def("relation_rhs", [](long n, long k, long l) { return relation_rhs({n, k, l}); }, py::arg("n"), py::arg("k"),
          py::arg("l"));
    m.def("relation_check",
          [](const RatFunc &ex, const RatFunc &ey, long n, long k, long l) { return relation_check(ex, ey, {n, k, l}); },
          py::arg("ex"), py::arg("ey"), py::arg("n"), py::arg("k"), py::arg("l"));
    m.def("euler_gap", [](long n, long k, long l) { return py::int_(py::str(euler_gap({n, k, l}).get_str())); },
          py::arg("n"), py::arg("k"), py::arg("l"));
    m.def("classify", [](long n, long k, long l) { return parse_json(to_json(classify_types({n, k, l})).dump()); },
          py::arg("n"), py::arg("k"), py::arg("l"));
    m.def("sod", [](long n, long k, long l, const std::string &side) {
        return parse_json(to_json(sod_predict({n, k, l}, parse_side(side))).dump());
    }, py::arg("n"), py::arg("k"), py::arg("l"), py::arg("side") = "X");

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::vector<std::string> all{"pfstringy"};
            all.insert(all.end(), args.begin(), args.end());
            std::vector<const char *> argv;
            for (const auto &a : all) argv.push_back(a.c_str());
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line tool in process; returns (exit code, stdout, stderr).");
}
