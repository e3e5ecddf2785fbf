#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uinv/affine_map.hpp"
#include "uinv/generators.hpp"
#include "uinv/jacobian.hpp"
#include "uinv/json_io.hpp"
#include "uinv/phi.hpp"
#include "uinv/rewrite.hpp"
#include "uinv/solver.hpp"
#include "uinv/tables.hpp"
#include "uinv/verify.hpp"

namespace py = pybind11;
using namespace uinv;

namespace {

PhiDirection direction_from(const std::string& s) {
    if (s == "plus") return PhiDirection::Plus;
    if (s == "minus") return PhiDirection::Minus;
    throw std::invalid_argument("direction must be 'plus' or 'minus'");
}

SolveMode mode_from(const std::string& s) {
    if (s == "filtered") return SolveMode::Filtered;
    if (s == "graded") return SolveMode::Graded;
    throw std::invalid_argument("mode must be 'filtered' or 'graded'");
}

}  // namespace

PYBIND11_MODULE(uinv, m) {
    m.doc() = "exact invariants of unipotent affine automorphisms";

    py::register_exception<uinv::ParseError>(m, "PolynomialParseError", PyExc_ValueError);

    py::class_<Polynomial>(m, "Polynomial")
        .def_static("parse", py::overload_cast<std::string_view, int>(&Polynomial::parse),
                    py::arg("text"), py::arg("variable_count"))
        .def_static("zero", &Polynomial::zero)
        .def_static("variable", &Polynomial::variable)
        .def_property_readonly("variable_count", &Polynomial::variable_count)
        .def("is_zero", &Polynomial::is_zero)
        .def("degree", [](const Polynomial& p) { return p.degree(); })
        .def("graded_component", &Polynomial::graded_component)
        .def("leading_form", &Polynomial::leading_form)
        .def("substitute", &Polynomial::substitute)
        .def("embedded", &Polynomial::embedded)
        .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
        .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
        .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
        .def("__neg__", [](const Polynomial& a) { return -a; })
        .def("__pow__", [](const Polynomial& a, int e) { return a.pow(e); })
        .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
        .def("__str__", [](const Polynomial& p) { return p.str(); })
        .def("__repr__", [](const Polynomial& p) { return p.str(); });

    py::class_<UnipotentAffineMap>(m, "UnipotentAffineMap")
        .def_static("affine_jordan", &UnipotentAffineMap::affine_jordan)
        .def_static("graded_jordan", &UnipotentAffineMap::graded_jordan)
        .def_static("identity", &UnipotentAffineMap::identity)
        .def_property_readonly("variable_count", &UnipotentAffineMap::variable_count)
        .def("apply", &UnipotentAffineMap::apply)
        .def("inverse", &UnipotentAffineMap::inverse)
        .def("delta", &UnipotentAffineMap::delta)
        .def("is_invariant", &UnipotentAffineMap::is_invariant)
        .def("to_json", [](const UnipotentAffineMap& map) { return map_to_json(map).dump(); })
        .def_static("from_json", [](const std::string& text) {
            return map_from_json(nlohmann::json::parse(text));
        });

    m.def("make_affine_jordan", &make_affine_jordan, py::arg("n"));
    m.def("make_graded_jordan", &make_graded_jordan, py::arg("n_plus_1"));

    m.def("phi", [](int i, const std::string& dir) { return phi(i, direction_from(dir)); },
          py::arg("i"), py::arg("direction") = "minus");
    m.def("check_vanishing_sums", &check_vanishing_sums);

    m.def("y_generator", &y_generator);
    m.def("u_generator", &u_generator);
    m.def("v_generator", &v_generator);
    m.def("w_generator", &w_generator);
    m.def("f_generator", &f_generator);
    m.def("p_generator", [](int n, int k) { return graded_generator(GradedKind::P, n, k); });
    m.def("q_generator", [](int n, int k) { return graded_generator(GradedKind::Q, n, k); });
    m.def("special_generators", [](int n) {
        py::dict d;
        for (const auto& g : special_generators(n).members) d[py::str(g.name)] = g.poly;
        return d;
    });

    m.def("jacobian_independent", &jacobian_independent);

    m.def("solve_filtered",
          [](const UnipotentAffineMap& map, int d, int threads) {
              return solve_filtered(map, d, threads).basis;
          },
          py::arg("map"), py::arg("degree"), py::arg("threads") = 1);
    m.def("solve_graded",
          [](const UnipotentAffineMap& map, int d, int threads) {
              return solve_graded(map, d, threads).basis;
          },
          py::arg("map"), py::arg("degree"), py::arg("threads") = 1);
    m.def("dimension_table",
          [](const UnipotentAffineMap& map, int d_max, const std::string& mode, int threads) {
              return dimension_table(map, d_max, mode_from(mode), threads);
          },
          py::arg("map"), py::arg("d_max"), py::arg("mode") = "filtered", py::arg("threads") = 1);

    m.def("rewrite_affine", [](const Polynomial& f, int n) {
        RewriteResult r = rewrite_affine(f, n);
        return py::make_tuple(r.str(), r.residual_x1_degree);
    });
    m.def("rewrite_graded", [](const Polynomial& f) { return rewrite_graded(f).str(); });
    m.def("verify_relation", &verify_relation);
    m.def("graded_basis", &graded_basis);
    m.def("check_u_in_y", [](int n, int k, const std::string& kind) {
        return check_u_in_y(n, k, kind == "u" ? UVKind::U : UVKind::V);
    });

    m.def("verify_all", [](int n_max) {
        py::list results;
        Report rep = verify_all(n_max);
        for (const auto& r : rep.results) {
            py::dict d;
            d["id"] = r.id;
            d["params"] = r.params;
            d["status"] = r.status;
            d["claim"] = r.claim;
            results.append(d);
        }
        return results;
    });
}
