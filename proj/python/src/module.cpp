#include "bindings.hpp"

namespace coronakit::python {

Point as_point(const py::handle& obj) {
    if (py::isinstance<py::int_>(obj) || py::isinstance<py::float_>(obj) || PyComplex_Check(obj.ptr()))
        return make_point(obj.cast<cplx>());
    return obj.cast<CVector>();
}

std::vector<Point> as_points(const py::iterable& seq) {
    std::vector<Point> out;
    for (const auto& item : seq) out.push_back(as_point(item));
    return out;
}

PointSet as_point_set(const py::handle& obj, const DomainSpec& domain) {
    if (py::isinstance<PointSet>(obj)) return obj.cast<PointSet>();
    PointSet s{domain, as_points(obj.cast<py::iterable>())};
    s.validate();
    return s;
}

}  // namespace coronakit::python

PYBIND11_MODULE(_core, m) {
    namespace cp = coronakit::python;
    m.doc() = "Reproducing-kernel, Carleson-measure and corona computations";

    auto base = pybind11::register_exception<coronakit::Error>(m, "CoronakitError", PyExc_RuntimeError);
    pybind11::register_exception<coronakit::DomainError>(m, "DomainError", base.ptr());
    pybind11::register_exception<coronakit::ParameterError>(m, "ParameterError", base.ptr());
    pybind11::register_exception<coronakit::NumericalError>(m, "NumericalError", base.ptr());
    pybind11::register_exception<coronakit::InfeasibleError>(m, "InfeasibleError", base.ptr());

    cp::bind_core(m);
    cp::bind_analysis(m);
}
