#pragma once

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coronakit/types.hpp"

namespace coronakit::python {

namespace py = pybind11;

/// A Python complex or float becomes a one-dimensional point; any sequence becomes a vector.
Point as_point(const py::handle& obj);
std::vector<Point> as_points(const py::iterable& seq);
/// PointSet from an existing PointSet or a sequence of points in the given domain.
PointSet as_point_set(const py::handle& obj, const DomainSpec& domain);

void bind_core(py::module_& m);
void bind_analysis(py::module_& m);

}  // namespace coronakit::python
