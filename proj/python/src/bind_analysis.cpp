#include "bindings.hpp"

#include "coronakit/besov.hpp"
#include "coronakit/carleson.hpp"
#include "coronakit/dbar.hpp"
#include "coronakit/imp.hpp"
#include "coronakit/outer.hpp"

namespace coronakit::python {

namespace {

using namespace pybind11::literals;

void bind_outer(py::module_& m) {
    m.def("outer_boundary_weight", &outer_boundary_weight, "shift"_a, "t"_a);

    py::class_<OuterFunction>(m, "OuterFunction")
        .def_readonly("log_coeffs", &OuterFunction::log_coeffs)
        .def_readonly("nodes", &OuterFunction::nodes)
        .def_readonly("weight", &OuterFunction::weight)
        .def("__call__", &OuterFunction::operator(), "z"_a)
        .def("boundary_values", &OuterFunction::boundary_values)
        .def("h2_norm", &OuterFunction::h2_norm)
        .def("profile_csv", &outer_profile_csv);
    m.def("construct_outer", &construct_outer, "shift"_a, "nodes"_a = 4096);

    py::class_<OuterIdentityReport>(m, "OuterIdentityReport")
        .def_readonly("max_discrepancy", &OuterIdentityReport::max_discrepancy)
        .def_readonly("worst_i", &OuterIdentityReport::worst_i)
        .def_readonly("worst_j", &OuterIdentityReport::worst_j)
        .def_readonly("boundary_rel_error", &OuterIdentityReport::boundary_rel_error)
        .def_readonly("h2_norm", &OuterIdentityReport::h2_norm)
        .def_readonly("min_abs_boundary", &OuterIdentityReport::min_abs_boundary)
        .def_readonly("max_abs_boundary", &OuterIdentityReport::max_abs_boundary);
    m.def("verify_outer_identity", &verify_outer_identity, "F"_a, "shift"_a, "degree"_a);
}

void bind_imp(py::module_& m) {
    py::class_<FalsifierConfig>(m, "FalsifierConfig")
        .def(py::init<>())
        .def_static("standard", &FalsifierConfig::standard, "alpha"_a, "n"_a)
        .def_static("polar_grid", &FalsifierConfig::polar_grid, "rings"_a, "rays"_a, "radius"_a)
        .def_readwrite("alpha", &FalsifierConfig::alpha)
        .def_readwrite("n", &FalsifierConfig::n)
        .def_readwrite("lambda_nodes", &FalsifierConfig::lambda_nodes)
        .def_readwrite("polydisc", &FalsifierConfig::polydisc)
        .def_readwrite("fd_step", &FalsifierConfig::fd_step)
        .def_readwrite("grid", &FalsifierConfig::grid)
        .def("validate", &FalsifierConfig::validate);

    m.def("slice_g", &slice_g, "cfg"_a, "z"_a);
    m.def("slice_laplacian", &slice_laplacian, "cfg"_a, "z"_a);
    m.def("slice_laplacian_fd", &slice_laplacian_fd, "cfg"_a, "z"_a);

    py::class_<FalsifierReport>(m, "FalsifierReport")
        .def_readonly("falsified", &FalsifierReport::falsified)
        .def_readonly("conclusion", &FalsifierReport::conclusion)
        .def_readonly("min_laplacian", &FalsifierReport::min_laplacian)
        .def_readonly("max_laplacian", &FalsifierReport::max_laplacian)
        .def_readonly("g_min", &FalsifierReport::g_min)
        .def_readonly("g_max", &FalsifierReport::g_max)
        .def_readonly("g_range", &FalsifierReport::g_range)
        .def_readonly("g_increment", &FalsifierReport::g_increment)
        .def_readonly("max_fd_rel_error", &FalsifierReport::max_fd_rel_error)
        .def_readonly("radial_profile_monotone", &FalsifierReport::radial_profile_monotone)
        .def_readonly("polydisc_reduces_to_ball_slice", &FalsifierReport::polydisc_reduces_to_ball_slice);
    m.def("falsify_report", &falsify_report, "cfg"_a);
    m.def("falsifier_csv", &falsifier_csv, "cfg"_a);
}

void bind_carleson(py::module_& m) {
    py::class_<DiscreteMeasure>(m, "DiscreteMeasure")
        .def(py::init([](const PointSet& pts, std::vector<double> w) {
                 DiscreteMeasure mu{pts, std::move(w)};
                 mu.validate();
                 return mu;
             }),
             "points"_a, "weights"_a)
        .def_static("disk", &DiscreteMeasure::disk, "zs"_a, "weights"_a)
        .def_readonly("points", &DiscreteMeasure::points)
        .def_readonly("weights", &DiscreteMeasure::weights)
        .def("total_mass", &DiscreteMeasure::total_mass)
        .def("scaled", &DiscreteMeasure::scaled, "s"_a)
        .def("__len__", &DiscreteMeasure::size);

    py::class_<CarlesonBox>(m, "CarlesonBox")
        .def(py::init<>())
        .def_readwrite("center", &CarlesonBox::center)
        .def_readwrite("radius", &CarlesonBox::radius)
        .def("arc_length", &CarlesonBox::arc_length)
        .def("contains", &CarlesonBox::contains, "z"_a);
    py::class_<BoxNormReport>(m, "BoxNormReport")
        .def_readonly("value", &BoxNormReport::value)
        .def_readonly("box", &BoxNormReport::box)
        .def_readonly("box_mass", &BoxNormReport::box_mass);

    m.def("box_norm", &box_norm, "mu"_a, "sigma"_a, "p"_a, "n"_a = 1);
    m.def("box_norm_polar_mesh", &box_norm_polar_mesh, "radii"_a, "W"_a, "sigma"_a, "p"_a);
    m.def("testing_norm",
          [](const DiscreteMeasure& mu, double sigma, double p, const py::handle& probes) {
              return testing_norm(mu, sigma, p, as_point_set(probes, mu.points.domain));
          },
          "mu"_a, "sigma"_a, "p"_a, "probes"_a);
    m.def("default_probe_grid", &default_probe_grid, "mu"_a, "rings"_a = 16, "rays"_a = 64);
}

void bind_besov(py::module_& m) {
    py::class_<BesovParams>(m, "BesovParams")
        .def(py::init([](double sigma, double p, double alpha, int order) {
                 BesovParams b{sigma, p, alpha, order};
                 b.validate();
                 return b;
             }),
             "sigma"_a = 0.5, "p"_a = 2.0, "alpha"_a = 0.0, "m"_a = 1)
        .def_readwrite("sigma", &BesovParams::sigma)
        .def_readwrite("p", &BesovParams::p)
        .def_readwrite("alpha", &BesovParams::alpha)
        .def_readwrite("m", &BesovParams::m)
        .def("t1", &BesovParams::t1)
        .def("t2", &BesovParams::t2);

    m.def("besov_seminorm_disk", &besov_seminorm_disk, "f"_a, "params"_a, "radial_nodes"_a = 96,
          "angular_nodes"_a = 256);
    m.def("besov_norm_disk", &besov_norm_disk, "f"_a, "params"_a, "radial_nodes"_a = 96, "angular_nodes"_a = 256);
    m.def("pairing_radial_image", &pairing_radial_image, "f"_a, "alpha"_a, "t"_a);

    py::class_<PairingReport>(m, "PairingReport")
        .def_readonly("value", &PairingReport::value)
        .def_readonly("norm_f", &PairingReport::norm_f)
        .def_readonly("norm_g", &PairingReport::norm_g);
    m.def("besov_pairing_disk", &besov_pairing_disk, "f"_a, "g"_a, "params"_a, "radial_nodes"_a = 64,
          "angular_nodes"_a = 0);

    py::class_<KpsMesh>(m, "KpsMesh")
        .def(py::init<>())
        .def_readwrite("radial_nodes", &KpsMesh::radial_nodes)
        .def_readwrite("angular_nodes", &KpsMesh::angular_nodes);
    py::class_<KpsReport>(m, "KpsReport")
        .def_readonly("value", &KpsReport::value)
        .def_readonly("sup_norm", &KpsReport::sup_norm)
        .def_readonly("carleson", &KpsReport::carleson);
    m.def("kps_norm_disk", &kps_norm_disk, "phi"_a, "sigma"_a, "p"_a, "m"_a, "mesh"_a = KpsMesh{});
}

void bind_dbar(py::module_& m) {
    py::class_<PolarMesh>(m, "PolarMesh")
        .def_static("make", &PolarMesh::make, "radial"_a = 64, "angular"_a = 128)
        .def_readonly("radii", &PolarMesh::radii)
        .def_readonly("radial_weights", &PolarMesh::radial_weights)
        .def_readonly("angular", &PolarMesh::angular)
        .def("node", &PolarMesh::node, "i"_a, "j"_a);

    py::class_<GridField>(m, "GridField")
        .def_static("sample", &GridField::sample, "mesh"_a, "fn"_a)
        .def_readonly("mesh", &GridField::mesh)
        .def_readonly("values", &GridField::values)
        .def("to_csv", &GridField::to_csv);

    py::class_<CauchyPompeiuSolver>(m, "CauchyPompeiuSolver")
        .def(py::init<const GridField&, int>(), "g"_a, "sub_nodes"_a = 32)
        .def("__call__", &CauchyPompeiuSolver::operator(), "z"_a)
        .def("evaluate", &CauchyPompeiuSolver::evaluate, "zs"_a);

    m.def("pompeiu_point_masses", &pompeiu_point_masses, "mu"_a, "z"_a);
    m.def("dbar_fd", &dbar_fd, "f"_a, "z"_a, "h"_a = 1e-4);
    m.def("disk_lattice", &disk_lattice, "spacing"_a, "radius"_a);
    m.def("h2_carleson_norm", &h2_carleson_norm, "mu"_a);

    py::class_<JonesData>(m, "JonesData")
        .def_static("from_measure", &JonesData::from_measure, "mu"_a)
        .def_readonly("mu", &JonesData::mu)
        .def_readonly("nu", &JonesData::nu)
        .def_readonly("carleson_norm", &JonesData::carleson_norm);
    m.def("jones_exp_factor", &jones_exp_factor, "data"_a, "z"_a, "zeta"_a);
    m.def("jones_kernel", &jones_kernel, "data"_a, "z"_a, "zeta"_a);
    m.def("jones_solve", &jones_solve, "data"_a, "eval_points"_a);

    py::class_<JonesReport>(m, "JonesReport")
        .def_readonly("carleson_norm", &JonesReport::carleson_norm)
        .def_readonly("boundary_sup", &JonesReport::boundary_sup)
        .def_readonly("fd_residual", &JonesReport::fd_residual)
        .def_readonly("data_mass", &JonesReport::data_mass)
        .def_readonly("checked_points", &JonesReport::checked_points);
    m.def("jones_check", &jones_check, "data"_a, "spacing"_a = 0.05, "boundary_nodes"_a = 512, "exclusion"_a = 0.05,
          "fd_step"_a = 1e-4);

    py::class_<SobolevReport>(m, "SobolevReport")
        .def_readonly("value", &SobolevReport::value)
        .def_readonly("lp_term", &SobolevReport::lp_term)
        .def_readonly("difference_integral", &SobolevReport::difference_integral)
        .def_readonly("difference_integral_half", &SobolevReport::difference_integral_half)
        .def_readonly("converged", &SobolevReport::converged)
        .def_readonly("poisson_integral", &SobolevReport::poisson_integral)
        .def_readonly("form_ratio", &SobolevReport::form_ratio);
    m.def("boundary_sobolev_norm", &boundary_sobolev_norm, "samples"_a, "sigma"_a, "p"_a);

    py::class_<KoszulOptions>(m, "KoszulOptions")
        .def(py::init<>())
        .def_readwrite("radial_nodes", &KoszulOptions::radial_nodes)
        .def_readwrite("angular_nodes", &KoszulOptions::angular_nodes)
        .def_readwrite("boundary_nodes", &KoszulOptions::boundary_nodes)
        .def_readwrite("lattice_spacing", &KoszulOptions::lattice_spacing)
        .def_readwrite("fd_spacing", &KoszulOptions::fd_spacing)
        .def_readwrite("fd_radius", &KoszulOptions::fd_radius)
        .def_readwrite("fd_step", &KoszulOptions::fd_step)
        .def_readwrite("kps_sigma", &KoszulOptions::kps_sigma)
        .def_readwrite("kps_p", &KoszulOptions::kps_p)
        .def_readwrite("kps_m", &KoszulOptions::kps_m)
        .def_readwrite("kps_mesh", &KoszulOptions::kps_mesh)
        .def_readwrite("certify_spacing", &KoszulOptions::certify_spacing);
    py::class_<CoronaReport>(m, "CoronaReport")
        .def_readonly("f", &CoronaReport::f)
        .def_readonly("c_certified", &CoronaReport::c_certified)
        .def_readonly("single_inverse", &CoronaReport::single_inverse)
        .def_readonly("inverse_index", &CoronaReport::inverse_index)
        .def_readonly("residual", &CoronaReport::residual)
        .def_readonly("residual_direct", &CoronaReport::residual_direct)
        .def_readonly("dbar_residual", &CoronaReport::dbar_residual)
        .def_readonly("negative_frequency_energy", &CoronaReport::negative_frequency_energy)
        .def_readonly("antisymmetry_error", &CoronaReport::antisymmetry_error)
        .def_readonly("sup_f", &CoronaReport::sup_f)
        .def_readonly("kps_norms", &CoronaReport::kps_norms);
    m.def("certify_lower_bound", &certify_lower_bound, "phi"_a, "spacing"_a = 0.01, "circle_nodes"_a = 2048);
    m.def("koszul_corona_disk", &koszul_corona_disk, "phi"_a, "c"_a, "options"_a = KoszulOptions{});
}

}  // namespace

void bind_analysis(py::module_& m) {
    bind_outer(m);
    bind_imp(m);
    bind_carleson(m);
    bind_besov(m);
    bind_dbar(m);
}

}  // namespace coronakit::python
