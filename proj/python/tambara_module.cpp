#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "tambara/dress.hpp"
#include "tambara/ideals.hpp"
#include "tambara/json_io.hpp"

namespace py = pybind11;
using namespace tambara;

namespace {

py::object int_to_py(const Int& z) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

Int int_from_py(const py::handle& v) {
    return Int(py::str(v).cast<std::string>());
}

py::dict coeffs_to_py(const BurnsideElement& x) {
    py::dict d;
    for (const auto& [k, a] : x.coeffs()) d[py::int_(k)] = int_to_py(a);
    return d;
}

BurnsideElement make_element(long N, long M, const py::dict& coeffs) {
    BurnsideElement x({N, M});
    for (const auto& [k, a] : coeffs) {
        x.set_coeff(k.cast<long>(), int_from_py(a));
    }
    return x;
}

py::list lattice_to_py(const IntLattice& L) {
    py::list rows;
    for (const auto& v : L.basis()) {
        py::list row;
        for (const auto& e : v) row.append(int_to_py(e));
        rows.append(row);
    }
    return rows;
}

NormRoute route_from_string(const std::string& route) {
    if (route == "prime-chain") return NormRoute::prime_chain;
    if (route == "direct") return NormRoute::direct;
    throw std::invalid_argument("norm: route must be 'prime-chain' or 'direct'");
}

ExtensionSpec spec_from_args(long q, const std::string& shape, long N, long p, long depth) {
    if (shape == "finite") return ExtensionSpec::finite(q, N);
    if (shape == "zp") return ExtensionSpec::zp(q, p, depth);
    if (shape == "zhat") return ExtensionSpec::zhat(q, depth);
    throw std::invalid_argument("shape must be 'finite', 'zp', or 'zhat'");
}

CatalogParams params_from_kwargs(long N, long p, long depth, long tau, long pi, int twopower_case) {
    CatalogParams c;
    c.N = N;
    c.p = p;
    c.depth = depth;
    c.tau = tau;
    c.pi = pi;
    c.twopower_case = twopower_case;
    return c;
}

py::object json_to_py(const json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(tambara, m) {
    m.doc() = "Burnside and Grothendieck-Witt Tambara functors for cyclic groups, "
              "the Dress map, and trace-ideal computations (exact arithmetic)";

    py::class_<BurnsideElement>(m, "BurnsideElement")
        .def_property_readonly("N", [](const BurnsideElement& x) { return x.level().N; })
        .def_property_readonly("M", [](const BurnsideElement& x) { return x.level().M; })
        .def_property_readonly("coeffs", &coeffs_to_py)
        .def("coeff", [](const BurnsideElement& x, long k) { return int_to_py(x.coeff(k)); })
        .def("is_zero", &BurnsideElement::is_zero)
        .def("scale",
             [](const BurnsideElement& x, const py::int_& c) { return x.scaled(int_from_py(c)); })
        .def("__pow__", [](const BurnsideElement& x, long e) { return x.pow(e); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__repr__", [](const BurnsideElement& x) {
            return "element(N=" + std::to_string(x.level().N) +
                   ", M=" + std::to_string(x.level().M) +
                   ", coeffs=" + element_to_json(x)["coeffs"].dump() + ")";
        });

    m.def("element", &make_element, py::arg("N"), py::arg("M"), py::arg("coeffs"),
          "Burnside element at level M inside C_N, coeffs keyed by divisors of M");
    m.def(
        "basis",
        [](long N, long M, long k) { return BurnsideElement::basis({N, M}, k); },
        py::arg("N"), py::arg("M"), py::arg("k"), "The basis element t_k at level M in C_N");
    m.def("card", [](const BurnsideElement& x) { return int_to_py(card(x)); });
    m.def("restrict", &restrict_to, py::arg("x"), py::arg("K"));
    m.def("transfer", &transfer_to, py::arg("x"), py::arg("M"));
    m.def(
        "norm",
        [](const BurnsideElement& x, long M, const std::string& route) {
            return norm_to(x, M, route_from_string(route));
        },
        py::arg("x"), py::arg("M"), py::arg("route") = "prime-chain");

    py::class_<GwClass>(m, "GwClass")
        .def(py::init([](long q, long mdeg, const py::int_& dim, int det) {
                 GwClass x{q, mdeg, int_from_py(dim), det};
                 validate_gw(x);
                 return x;
             }),
             py::arg("q"), py::arg("m"), py::arg("dim"), py::arg("det"))
        .def_readonly("q", &GwClass::q)
        .def_readonly("m", &GwClass::m)
        .def_property_readonly("dim", [](const GwClass& x) { return int_to_py(x.dim); })
        .def_readonly("det", &GwClass::det)
        .def("__add__", &gw_add)
        .def("__sub__", &gw_sub)
        .def("__neg__", [](const GwClass& x) { return gw_neg(x); })
        .def("__mul__", &gw_mul)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__repr__", [](const GwClass& x) {
            return "GwClass(q=" + std::to_string(x.q) + ", m=" + std::to_string(x.m) +
                   ", dim=" + x.dim.get_str() + ", det=" + std::to_string(x.det) + ")";
        });

    m.def("gw_restrict", &gw_restrict, py::arg("x"), py::arg("mult"));
    m.def("gw_transfer", &gw_transfer, py::arg("x"), py::arg("mult"));
    m.def("gw_norm", &gw_norm_closed, py::arg("x"), py::arg("mult"));
    m.def("gw_norm_oracle", &gw_norm_oracle, py::arg("x"), py::arg("mult"));
    m.def("tau_finite_field", &tau_finite_field, py::arg("q"), py::arg("nonsquare"));
    m.def(
        "tau_rational",
        [](const py::int_& num, const py::int_& den) {
            return tau_rational(int_from_py(num), int_from_py(den));
        },
        py::arg("num"), py::arg("den") = py::int_(1));
    m.def("pi_from_tau", &pi_from_tau, py::arg("tau"));

    m.def(
        "dress",
        [](const BurnsideElement& x, long q) {
            return dress_map(x, ExtensionSpec::finite(q, x.level().M));
        },
        py::arg("x"), py::arg("q"));
    m.def(
        "dress_kernel",
        [](long q, long N, long M) {
            return lattice_to_py(dress_kernel_level(ExtensionSpec::finite(q, N), M));
        },
        py::arg("q"), py::arg("N"), py::arg("M"));

    py::class_<TambaraIdeal>(m, "TambaraIdeal")
        .def_readonly("modulus", &TambaraIdeal::modulus)
        .def("level",
             [](const TambaraIdeal& I, long M) { return lattice_to_py(I.level(M)); })
        .def("levels",
             [](const TambaraIdeal& I) {
                 py::dict d;
                 for (const auto& [M, L] : I.levels) d[py::int_(M)] = lattice_to_py(L);
                 return d;
             })
        .def("member",
             [](const TambaraIdeal& I, long M, const BurnsideElement& x) {
                 return member(I, M, x);
             })
        .def("__eq__", &equals)
        .def("contains", [](const TambaraIdeal& a, const TambaraIdeal& b) {
            return contains(a, b);
        });

    m.def(
        "saturate",
        [](long N, const std::vector<BurnsideElement>& gens) {
            GeneratorSet g;
            g.elements = gens;
            return saturate(N, g);
        },
        py::arg("N"), py::arg("generators"));
    m.def(
        "trace_ideal",
        [](long q, const std::string& shape, long N, long p, long depth) {
            return trace_ideal(spec_from_args(q, shape, N, p, depth));
        },
        py::arg("q"), py::arg("shape") = "finite", py::arg("N") = 1, py::arg("p") = 2,
        py::arg("depth") = 1);
    m.def(
        "generator_catalog",
        [](const std::string& theorem, long N, long p, long depth, long tau, long pi,
           int twopower_case) {
            return generator_catalog(theorem,
                                     params_from_kwargs(N, p, depth, tau, pi, twopower_case))
                .elements;
        },
        py::arg("theorem"), py::arg("N") = 0, py::arg("p") = 0, py::arg("depth") = 0,
        py::arg("tau") = -1, py::arg("pi") = -1, py::arg("twopower_case") = 1);
    m.def(
        "verify",
        [](const std::string& theorem, long q, long N, long p, long depth, long tau, long pi,
           int twopower_case) {
            return json_to_py(report_to_json(verify_theorem(
                theorem, q, params_from_kwargs(N, p, depth, tau, pi, twopower_case))));
        },
        py::arg("theorem"), py::arg("q") = 3, py::arg("N") = 0, py::arg("p") = 0,
        py::arg("depth") = 0, py::arg("tau") = -1, py::arg("pi") = -1,
        py::arg("twopower_case") = 1);
    m.def(
        "verify_rational_quadratic",
        [](const py::int_& num, const py::int_& den) {
            return json_to_py(
                report_to_json(verify_rational_quadratic(int_from_py(num), int_from_py(den))));
        },
        py::arg("num"), py::arg("den") = py::int_(1));
}
