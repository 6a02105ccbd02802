#include "spherecheck/crush.hpp"
#include "spherecheck/enumerate.hpp"
#include "spherecheck/homology.hpp"
#include "spherecheck/normalize.hpp"
#include "spherecheck/recognizer.hpp"
#include "spherecheck/skeleton.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace spherecheck;

namespace {

py::int_ to_py(const Integer& x) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<Integer>& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

const char* answer_name(Answer a) {
    switch (a) {
    case Answer::Sphere: return "sphere";
    case Answer::NotSphere: return "not_sphere";
    case Answer::NotApplicable: break;
    }
    return "not_applicable";
}

py::dict homology_dict(const Triangulation& t) {
    auto h = homology(t);
    py::dict d;
    py::list betti, torsion;
    for (int i = 0; i < 4; ++i) {
        betti.append(h.betti[i]);
        torsion.append(to_py(h.torsion[i]));
    }
    d["betti"] = betti;
    d["torsion"] = torsion;
    d["text"] = describe(h);
    return d;
}

}  // namespace

PYBIND11_MODULE(_spherecheck, m) {
    m.doc() = "Three-sphere recognition with checkable certificates";

    static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            py::object err = py::reinterpret_borrow<py::object>(parse_error)(e.what());
            err.attr("line") = e.line;
            err.attr("column") = e.column;
            PyErr_SetObject(parse_error.ptr(), err.ptr());
        }
    });
    py::register_exception<CrushObstructed>(m, "CrushObstructed", PyExc_RuntimeError);
    py::register_exception<NormalizationError>(m, "NormalizationError", PyExc_RuntimeError);

    py::class_<Triangulation>(m, "Triangulation")
        .def(py::init<>())
        .def_static("parse", [](const std::string& s) { return Triangulation::parse(s); }, py::arg("text"))
        .def("serialize", &Triangulation::serialize)
        .def("__len__", &Triangulation::size)
        .def_property_readonly("names", &Triangulation::names)
        .def("is_closed", &Triangulation::is_closed)
        .def("components", &Triangulation::components)
        .def("induced", &Triangulation::induced, py::arg("tets"))
        .def("__eq__", [](const Triangulation& a, const Triangulation& b) { return a == b; })
        .def("__repr__", [](const Triangulation& t) { return "<Triangulation with " + std::to_string(t.size()) + " tetrahedra>"; });

    py::class_<SurfaceVector>(m, "Surface")
        .def_property_readonly("coords", [](const SurfaceVector& v) { return to_py(v.coords); })
        .def_property_readonly("almost", [](const SurfaceVector& v) -> py::object {
            if (!v.almost) return py::none();
            return py::str(format_almost(*v.almost));
        })
        .def("is_zero", &SurfaceVector::is_zero)
        .def("__eq__", [](const SurfaceVector& a, const SurfaceVector& b) { return a == b; })
        .def("__repr__", [](const SurfaceVector& v) {
            return "<Surface " + (v.almost ? format_almost(*v.almost) + " : " : std::string()) + format_coords(v) + ">";
        });

    py::class_<Certificate>(m, "Certificate")
        .def_static("parse", [](const std::string& s) { return Certificate::parse(s); }, py::arg("text"))
        .def("serialize", &Certificate::serialize)
        .def_readonly("base", &Certificate::base)
        .def_property_readonly("steps", [](const Certificate& c) { return c.steps.size(); })
        .def("__eq__", [](const Certificate& a, const Certificate& b) { return a == b; });

    m.def("is_three_manifold", py::overload_cast<const Triangulation&>(&is_three_manifold));
    m.def("homology", &homology_dict, "Betti numbers and torsion of a closed 3-manifold");
    m.def("is_homology_sphere", &is_homology_sphere);

    m.def("normal_vertex_surfaces", &normal_vertex_surfaces);
    m.def("almost_sphere_candidates", &almost_sphere_candidates);

    m.def(
        "normalize",
        [](const Triangulation& t, const SurfaceVector& v, const std::string& side, bool fast) {
            if (side != "plus" && side != "minus") throw std::invalid_argument("side must be 'plus' or 'minus'");
            Side s = side == "plus" ? Side::Plus : Side::Minus;
            return fast ? normalize_fast(t, v, s) : normalize_slow(t, v, s);
        },
        py::arg("t"), py::arg("surface"), py::arg("side"), py::arg("fast") = true);

    m.def(
        "recognize",
        [](const Triangulation& t, bool trace) {
            auto r = recognize(t, trace);
            py::dict d;
            d["answer"] = answer_name(r.answer);
            d["reason"] = r.reason;
            d["certificate"] = r.certificate ? py::cast(*r.certificate) : py::none();
            d["trace"] = r.trace;
            return d;
        },
        py::arg("t"), py::arg("trace") = false);

    m.def(
        "certify",
        [](const Triangulation& t) -> std::optional<Certificate> {
            py::gil_scoped_release release;
            return certify(t);
        },
        py::arg("t"));

    m.def(
        "verify",
        [](const Triangulation& t, const Certificate& c, size_t max_bits) {
            VerifyOptions o;
            o.max_bits = max_bits;
            auto r = verify(t, c, o);
            return py::make_tuple(r.accepted, r.reason);
        },
        py::arg("t"), py::arg("certificate"), py::arg("max_bits") = VerifyOptions{}.max_bits);

    m.def(
        "recognize_ball",
        [](const Triangulation& t) {
            auto r = recognize_ball(t);
            py::dict d;
            d["answer"] = r.answer == Answer::Sphere ? "ball" : answer_name(r.answer);
            d["reason"] = r.reason;
            d["boundary_euler"] = r.boundary.euler;
            d["boundary_components"] = r.boundary.components;
            d["certificate"] = r.double_certificate ? py::cast(*r.double_certificate) : py::none();
            return d;
        },
        py::arg("t"));

    m.def("double_along_boundary", &double_along_boundary);
}
