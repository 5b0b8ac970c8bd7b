#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eiscong/serialize.hpp"

namespace py = pybind11;
using namespace eiscong;

namespace {

std::set<i64> sigma_or_default(const std::optional<std::set<i64>>& sigma, i64 d, i64 p) {
    return sigma ? *sigma : default_sigma(d, p);
}

}  // namespace

PYBIND11_MODULE(_eiscong, m) {
    m.doc() = "Exact Dirichlet L-values, class groups, CM forms and Eisenstein congruence checks";

    py::register_exception<PrecisionExhausted>(m, "PrecisionExhausted", PyExc_RuntimeError);
    py::register_exception<InconclusiveScan>(m, "InconclusiveScan", PyExc_RuntimeError);
    py::register_exception<Unsupported>(m, "Unsupported", PyExc_NotImplementedError);

    py::class_<DirichletCharacter>(m, "DirichletCharacter")
        .def(py::init(&DirichletCharacter::from_label), py::arg("label"))
        .def_property_readonly("label", &DirichletCharacter::label)
        .def_property_readonly("modulus", &DirichletCharacter::modulus)
        .def_property_readonly("order", &DirichletCharacter::order)
        .def_property_readonly("conductor", &DirichletCharacter::conductor)
        .def("is_odd", &DirichletCharacter::is_odd)
        .def("is_primitive", &DirichletCharacter::is_primitive)
        .def("primitive", &DirichletCharacter::primitive)
        .def("inverse", &DirichletCharacter::inverse)
        .def("pow", &DirichletCharacter::pow)
        .def("exponent_at", &DirichletCharacter::exponent_at, "chi(a) = zeta_order^k; -1 off the units")
        .def("value", [](const DirichletCharacter& c, i64 a) { return cyclotomic_to_json(c.evaluate(a)).dump(); })
        .def("__mul__", [](const DirichletCharacter& a, const DirichletCharacter& b) { return a * b; })
        .def("__eq__", [](const DirichletCharacter& a, const DirichletCharacter& b) { return a == b; })
        .def("__repr__", [](const DirichletCharacter& c) { return "DirichletCharacter('" + c.label() + "')"; });

    m.def("teichmuller_character", &teichmuller_character, py::arg("p"));
    m.def("kronecker_character", &kronecker_character, py::arg("d"));

    m.def("bernoulli", [](unsigned k) { return to_wire(bernoulli(k)); }, py::arg("k"));
    m.def(
        "l_value",
        [](const DirichletCharacter& chi, int k, std::optional<i64> p) {
            LValue L = l_value(1 - k, chi);
            std::vector<PrimeValuation> vals;
            if (p && !L.value.is_zero())
                vals = valuations_above(L.value, *p, L.value.order());
            return lvalue_to_json(chi, k, L.value, vals).dump();
        },
        py::arg("chi"), py::arg("k") = 1, py::arg("p") = py::none());
    m.def(
        "kubota_leopoldt",
        [](int s, const DirichletCharacter& theta, i64 p) {
            return cyclotomic_to_json(kubota_leopoldt(s, theta, p).value).dump();
        },
        py::arg("s"), py::arg("theta"), py::arg("p"));

    m.def("classgroup", [](i64 d) { return classgroup_to_json(*reduced_forms(d)).dump(); }, py::arg("d"));
    m.def(
        "cm_forms",
        [](i64 d, i64 order, i64 bound) {
            auto G = reduced_forms(d);
            if (bound <= 0)
                bound = sturm_bound(-d);
            json out = json::array();
            for (const auto& pr : characters_of_order(G, order)) {
                json j = qexpansion_to_json(theta_series(pr.phi, bound));
                j["label"] = pr.phi.label();
                out.push_back(j);
            }
            return out.dump();
        },
        py::arg("d"), py::arg("order"), py::arg("bound") = 0);
    m.def("sturm_bound", &sturm_bound, py::arg("N"), py::arg("weight") = 1);

    m.def(
        "congruence_depth",
        [](i64 d, i64 p, std::optional<std::set<i64>> sigma, bool floors_only) {
            DepthOptions opt;
            opt.floors_only = floors_only;
            py::gil_scoped_release release;
            auto r = total_depth(d, p, sigma_or_default(sigma, d, p), opt);
            json j = report_to_json(r);
            j["bound"] = verdict_to_json(congruence_module_bound(r));
            return j.dump();
        },
        py::arg("d"), py::arg("p"), py::arg("sigma") = py::none(), py::arg("floors_only") = false);

    m.def(
        "lambda_specialize",
        [](const DirichletCharacter& chi, i64 p, int k, i64 ell, int M) {
            return specialization_to_json(specialization_identity(chi, ell, k, p, M)).dump();
        },
        py::arg("chi"), py::arg("p"), py::arg("k"), py::arg("ell"), py::arg("M") = 20);
    m.def(
        "weight_one_constant",
        [](const DirichletCharacter& chi, i64 p) {
            return weight_one_to_json(eisenstein_constant_at_weight_one(chi, p)).dump();
        },
        py::arg("chi"), py::arg("p"));

    m.def(
        "check_hypotheses",
        [](const DirichletCharacter& chi, i64 p, std::set<i64> sigma, int prime_choice) {
            return report_to_json(check_assumptions(chi, p, sigma, prime_choice)).dump();
        },
        py::arg("chi"), py::arg("p"), py::arg("sigma"), py::arg("prime_choice") = -1);
    m.def(
        "check_cm",
        [](i64 d, i64 p, std::optional<std::set<i64>> sigma) {
            return report_to_json(check_cm_case(d, p, sigma_or_default(sigma, d, p))).dump();
        },
        py::arg("d"), py::arg("p"), py::arg("sigma") = py::none());
    m.def(
        "search",
        [](i64 order, i64 p, i64 conductor_min, i64 conductor_max) {
            SearchOptions o;
            o.order = order;
            o.p = p;
            o.conductor_min = conductor_min;
            o.conductor_max = conductor_max;
            py::gil_scoped_release release;
            return search_to_json(search_characters(o)).dump();
        },
        py::arg("order"), py::arg("p"), py::arg("conductor_min"), py::arg("conductor_max"));
}
