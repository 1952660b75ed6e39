#include "bindings.hpp"

#include "coronakit/config.hpp"
#include "coronakit/convex_poisson.hpp"
#include "coronakit/kernels.hpp"
#include "coronakit/power_series.hpp"
#include "coronakit/rescaling.hpp"
#include "coronakit/rkhs.hpp"

namespace coronakit::python {

namespace {

using namespace pybind11::literals;

SampleFunction sample_function(const PointSet& pts, const CMatrix& values) {
    SampleFunction f{pts, values};
    f.validate();
    return f;
}

/// Values given as a 1-D array are one channel; a 2-D array is P x N.
CMatrix as_values(const py::handle& obj) {
    py::array arr = py::array::ensure(obj);
    if (!arr) throw ParameterError("sample values must be array-like");
    if (arr.ndim() == 1) return CMatrix(arr.cast<CVector>());
    return arr.cast<CMatrix>();
}

void bind_types(py::module_& m) {
    py::enum_<DomainKind>(m, "DomainKind")
        .value("disk", DomainKind::disk)
        .value("ball", DomainKind::ball)
        .value("polydisc", DomainKind::polydisc);

    py::class_<DomainSpec>(m, "DomainSpec")
        .def(py::init([](DomainKind kind, int dim) {
                 DomainSpec d{kind, dim};
                 d.validate();
                 return d;
             }),
             "kind"_a = DomainKind::disk, "dim"_a = 1)
        .def_readwrite("kind", &DomainSpec::kind)
        .def_readwrite("dim", &DomainSpec::dim)
        .def("contains", [](const DomainSpec& d, const py::handle& z) { return d.contains(as_point(z)); })
        .def("__repr__", [](const DomainSpec& d) {
            return "DomainSpec(" + to_string(d.kind) + ", dim=" + std::to_string(d.dim) + ")";
        });

    py::class_<PointSet>(m, "PointSet")
        .def(py::init([](const DomainSpec& d, const py::iterable& pts) { return as_point_set(pts, d); }), "domain"_a,
             "points"_a)
        .def_static("disk", &PointSet::disk, "zs"_a)
        .def_readonly("domain", &PointSet::domain)
        .def_readonly("points", &PointSet::points)
        .def("__len__", &PointSet::size);

    py::class_<Tolerances>(m, "Tolerances")
        .def(py::init<>())
        .def_readwrite("tikhonov_rel", &Tolerances::tikhonov_rel)
        .def_readwrite("range_cutoff", &Tolerances::range_cutoff)
        .def_readwrite("psd_tol", &Tolerances::psd_tol)
        .def_readwrite("merge_tol", &Tolerances::merge_tol)
        .def_readwrite("bezout_residual", &Tolerances::bezout_residual)
        .def_readwrite("cocycle_tol", &Tolerances::cocycle_tol);
}

void bind_series(py::module_& m) {
    py::class_<PowerSeries1D>(m, "PowerSeries1D")
        .def(py::init<>())
        .def(py::init<std::vector<cplx>>(), "coeffs"_a)
        .def_static("monomial", &PowerSeries1D::monomial, "k"_a, "scale"_a = cplx(1.0))
        .def_static("constant", &PowerSeries1D::constant, "c"_a)
        .def_readwrite("coeffs", &PowerSeries1D::coeffs)
        .def("__len__", &PowerSeries1D::size)
        .def("__call__", &PowerSeries1D::operator(), "z"_a)
        .def("derivative_at", &PowerSeries1D::derivative_at, "z"_a, "m"_a)
        .def("derivative", &PowerSeries1D::derivative, "m"_a = 1)
        .def("rotated", &PowerSeries1D::rotated, "phi"_a)
        .def("__mul__", [](const PowerSeries1D& a, const PowerSeries1D& b) { return a * b; });
}

void bind_kernels(py::module_& m) {
    py::enum_<KernelFamily>(m, "KernelFamily")
        .value("szego_disk", KernelFamily::szego_disk)
        .value("hardy_ball", KernelFamily::hardy_ball)
        .value("bergman_ball", KernelFamily::bergman_ball)
        .value("hardy_polydisc", KernelFamily::hardy_polydisc)
        .value("bergman_polydisc", KernelFamily::bergman_polydisc)
        .value("besov_sobolev_disk", KernelFamily::besov_sobolev_disk);
    m.def("kernel_family_from_string", &kernel_family_from_string, "name"_a);

    py::class_<KernelSpec>(m, "KernelSpec")
        .def(py::init([](KernelFamily family, int n, double sigma, double p, double alpha, int trunc) {
                 KernelSpec s{family, n, sigma, p, alpha, trunc};
                 s.validate();
                 return s;
             }),
             "family"_a = KernelFamily::szego_disk, "n"_a = 1, "sigma"_a = 0.5, "p"_a = 2.0, "alpha"_a = 0.0,
             "trunc"_a = 256)
        .def_static("szego", &KernelSpec::szego)
        .def_static("of", &KernelSpec::of, "family"_a, "n"_a = 1)
        .def_static("besov", &KernelSpec::besov, "sigma"_a, "p"_a, "alpha"_a, "trunc"_a = 256)
        .def_readwrite("family", &KernelSpec::family)
        .def_readwrite("n", &KernelSpec::n)
        .def_readwrite("sigma", &KernelSpec::sigma)
        .def_readwrite("p", &KernelSpec::p)
        .def_readwrite("alpha", &KernelSpec::alpha)
        .def_readwrite("trunc", &KernelSpec::trunc)
        .def("domain", &KernelSpec::domain)
        .def("validate", &KernelSpec::validate);

    py::class_<Kernel>(m, "Kernel")
        .def(py::init<KernelSpec>(), "spec"_a)
        .def_property_readonly("spec", &Kernel::spec)
        .def("domain", &Kernel::domain)
        .def("__call__", [](const Kernel& k, const py::handle& x, const py::handle& y) { return k(as_point(x), as_point(y)); },
             "x"_a, "y"_a)
        .def("diagonal", [](const Kernel& k, const py::handle& x) {
            const Point p = as_point(x);
            k.domain().require_inside(p);
            return k.diagonal(p);
        })
        .def("normalized", [](const Kernel& k, const py::handle& a, const py::handle& y) {
            return k.normalized(as_point(a), as_point(y));
        })
        .def("distance", [](const Kernel& k, const py::handle& x, const py::handle& y) {
            return k.distance(as_point(x), as_point(y));
        })
        .def_property_readonly("besov_coefficients", &Kernel::besov_coefficients);

    m.def("radial_multiplier", &radial_multiplier, "gamma"_a, "t"_a, "n"_a, "k"_a);
    m.def("radial_coeff_transform", &radial_coeff_transform, "gamma"_a, "t"_a, "n"_a, "series"_a, "inverse"_a = false);
    m.def("besov_kernel_coeffs", &besov_kernel_coeffs, "sigma"_a, "alpha"_a, "p"_a, "trunc"_a);
}

void bind_rkhs(py::module_& m) {
    py::class_<GramMatrix>(m, "GramMatrix")
        .def_readonly("points", &GramMatrix::points)
        .def_readonly("entries", &GramMatrix::entries)
        .def_readonly("min_eigenvalue", &GramMatrix::min_eigenvalue)
        .def_readonly("max_eigenvalue", &GramMatrix::max_eigenvalue)
        .def_readonly("warnings", &GramMatrix::warnings)
        .def("tikhonov_shift", &GramMatrix::tikhonov_shift, "tol"_a = Tolerances{});
    m.def("build_gram",
          [](const KernelSpec& spec, const py::handle& pts, const Tolerances& tol) {
              return build_gram(spec, as_point_set(pts, spec.domain()), tol);
          },
          "spec"_a, "points"_a, "tol"_a = Tolerances{});

    py::class_<SampleFunction>(m, "SampleFunction")
        .def(py::init([](const PointSet& pts, const py::handle& values) { return sample_function(pts, as_values(values)); }),
             "points"_a, "values"_a)
        .def_readonly("points", &SampleFunction::points)
        .def_readonly("values", &SampleFunction::values)
        .def("channels", &SampleFunction::channels);

    py::class_<NormReport>(m, "NormReport")
        .def_readonly("value", &NormReport::value)
        .def_readonly("certificate", &NormReport::certificate)
        .def_readonly("shift", &NormReport::shift)
        .def_readonly("attained_at", &NormReport::attained_at);
    py::class_<VectorNorms>(m, "VectorNorms")
        .def_readonly("row", &VectorNorms::row)
        .def_readonly("column", &VectorNorms::column)
        .def_readonly("max", &VectorNorms::max);

    m.def("min_norm_interpolation",
          [](const CMatrix& G, const py::handle& values, const Tolerances& tol) {
              return min_norm_interpolation(G, as_values(values), tol);
          },
          "gram"_a, "values"_a, "tol"_a = Tolerances{});
    m.def("interpolation_coefficients", &interpolation_coefficients, "gram"_a, "values"_a, "tol"_a = Tolerances{});
    m.def("interpolant_inner_product", &interpolant_inner_product, "gram"_a, "u"_a, "w"_a, "tol"_a = Tolerances{});
    m.def("shifted_norm",
          [](const KernelSpec& spec, const PointSet& pts, const py::handle& a, const py::handle& values,
             const Tolerances& tol) {
              return shifted_norm(spec, pts, as_point(a), sample_function(pts, as_values(values)), tol);
          },
          "spec"_a, "points"_a, "a"_a, "values"_a, "tol"_a = Tolerances{});
    m.def("restricted_multiplier_norm",
          [](const KernelSpec& spec, const PointSet& pts, const py::handle& phi, const Tolerances& tol) {
              return restricted_multiplier_norm(spec, pts, sample_function(pts, as_values(phi)), tol);
          },
          "spec"_a, "points"_a, "phi"_a, "tol"_a = Tolerances{});
    m.def("restricted_vector_norms",
          [](const KernelSpec& spec, const PointSet& pts, const py::handle& phi, const Tolerances& tol) {
              return restricted_vector_norms(spec, pts, sample_function(pts, as_values(phi)), tol);
          },
          "spec"_a, "points"_a, "phi"_a, "tol"_a = Tolerances{});
    m.def("kernel_multiplier_norm_lower",
          [](const KernelSpec& spec, const PointSet& pts, const py::handle& phi, const py::handle& probes,
             const Tolerances& tol) {
              return kernel_multiplier_norm_lower(spec, pts, sample_function(pts, as_values(phi)),
                                                  as_point_set(probes, spec.domain()), tol);
          },
          "spec"_a, "points"_a, "phi"_a, "probes"_a, "tol"_a = Tolerances{});
}

void bind_rescaling(py::module_& m) {
    py::class_<RescalingWitness>(m, "RescalingWitness")
        .def_readonly("psi", &RescalingWitness::psi)
        .def_readonly("theta", &RescalingWitness::theta);
    py::class_<RescalingViolation>(m, "RescalingViolation")
        .def_readonly("kind", &RescalingViolation::kind)
        .def_readonly("i", &RescalingViolation::i)
        .def_readonly("j", &RescalingViolation::j)
        .def_readonly("l", &RescalingViolation::l)
        .def_readonly("discrepancy", &RescalingViolation::discrepancy);
    py::class_<RescalingResult>(m, "RescalingResult")
        .def_readonly("is_rescaling", &RescalingResult::is_rescaling)
        .def_readonly("witness", &RescalingResult::witness)
        .def_readonly("violation", &RescalingResult::violation);

    m.def("apply_rescaling", &apply_rescaling, "k"_a, "psi"_a);
    m.def("check_rescaling", &check_rescaling, "K"_a, "k"_a, "tol"_a = 1e-8, "cocycle_tol"_a = 1e-8);
    m.def("matrix_kernel_distance", &matrix_kernel_distance, "M"_a, "i"_a, "j"_a);
    m.def("wrap_angle", &wrap_angle, "x"_a);
}

void bind_convex(py::module_& m) {
    py::class_<ShiftConfig>(m, "ShiftConfig")
        .def(py::init([](const py::iterable& base, std::vector<double> theta) {
                 return ShiftConfig{as_points(base), std::move(theta)};
             }),
             "base_points"_a, "theta"_a)
        .def_static("unshifted", &ShiftConfig::unshifted)
        .def_static("vertex", &ShiftConfig::vertex, "base_points"_a, "m"_a)
        .def_readonly("base_points", &ShiftConfig::base_points)
        .def_readwrite("theta", &ShiftConfig::theta)
        .def("validate", &ShiftConfig::validate, "domain"_a)
        .def("__len__", &ShiftConfig::size);

    py::class_<ConvexNormReport>(m, "ConvexNormReport")
        .def_readonly("value", &ConvexNormReport::value)
        .def_readonly("components", &ConvexNormReport::components);
    m.def("convex_shift_norm",
          [](const KernelSpec& spec, const PointSet& pts, const ShiftConfig& shift, const py::handle& values,
             const Tolerances& tol) {
              return convex_shift_norm(spec, pts, shift, sample_function(pts, as_values(values)), tol);
          },
          "spec"_a, "points"_a, "shift"_a, "values"_a, "tol"_a = Tolerances{});

    py::class_<BezoutSolution>(m, "BezoutSolution")
        .def_readonly("g", &BezoutSolution::g)
        .def_readonly("norm", &BezoutSolution::norm)
        .def_readonly("objective", &BezoutSolution::objective)
        .def_readonly("residual", &BezoutSolution::residual)
        .def_readonly("per_channel_norms", &BezoutSolution::per_channel_norms)
        .def_readonly("components", &BezoutSolution::components);
    m.def("solve_bezout_min_norm",
          [](const KernelSpec& spec, const PointSet& pts, const py::handle& phi, const CVector& rhs,
             const ShiftConfig& shift, double lower_bound_c, const Tolerances& tol) {
              BezoutProblem prob{spec, pts, sample_function(pts, as_values(phi)), rhs, shift, lower_bound_c};
              return solve_bezout_min_norm(prob, tol);
          },
          "spec"_a, "points"_a, "phi"_a, "rhs"_a, "shift"_a = ShiftConfig::unshifted(), "lower_bound_c"_a = 0.0,
          "tol"_a = Tolerances{});
    m.def("bezout_residual", &bezout_residual, "phi"_a, "g"_a, "rhs"_a);
    m.def("divide_by_kernel",
          [](const KernelSpec& spec, const PointSet& pts, const py::handle& phi, const py::handle& a,
             const BezoutSolution& f, const Tolerances& tol) {
              return divide_by_kernel(spec, pts, sample_function(pts, as_values(phi)), as_point(a), f, tol);
          },
          "spec"_a, "points"_a, "phi"_a, "a"_a, "solution"_a, "tol"_a = Tolerances{});

    py::class_<SaddleOptions>(m, "SaddleOptions")
        .def(py::init<>())
        .def_readwrite("max_iterations", &SaddleOptions::max_iterations)
        .def_readwrite("ascent_iterations", &SaddleOptions::ascent_iterations)
        .def_readwrite("rel_gap", &SaddleOptions::rel_gap);
    py::class_<SaddleReport>(m, "SaddleReport")
        .def_readonly("value", &SaddleReport::value)
        .def_readonly("theta_star", &SaddleReport::theta_star)
        .def_readonly("g_star", &SaddleReport::g_star)
        .def_readonly("upper_bound", &SaddleReport::upper_bound)
        .def_readonly("duality_gap", &SaddleReport::duality_gap)
        .def_readonly("g_upper", &SaddleReport::g_upper)
        .def_readonly("iterations", &SaddleReport::iterations)
        .def_readonly("converged", &SaddleReport::converged);
    m.def("saddle_value",
          [](const KernelSpec& spec, const PointSet& pts, const py::handle& phi, const py::iterable& base,
             const SaddleOptions& opt, const Tolerances& tol) {
              return saddle_value(spec, pts, sample_function(pts, as_values(phi)), as_points(base), opt, tol);
          },
          "spec"_a, "points"_a, "phi"_a, "base_points"_a, "options"_a = SaddleOptions{}, "tol"_a = Tolerances{});
    m.def("project_to_simplex", &project_to_simplex, "v"_a);
}

}  // namespace

void bind_core(py::module_& m) {
    bind_types(m);
    bind_series(m);
    bind_kernels(m);
    bind_rkhs(m);
    bind_rescaling(m);
    bind_convex(m);
}

}  // namespace coronakit::python
