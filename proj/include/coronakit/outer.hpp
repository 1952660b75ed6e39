#pragma once

#include <string>
#include <vector>

#include "coronakit/convex_poisson.hpp"

namespace coronakit {

/// Weight w(t) = theta_0 + sum_m theta_m |k~_{a_m}(e^{it})|^2 for the Szego kernel of the disk.
double outer_boundary_weight(const ShiftConfig& shift, double t);

/// Zero-free F with |F|^2 = w on the circle and F(0) > 0.
struct OuterFunction {
    /// Taylor coefficients b_m of log F.
    std::vector<cplx> log_coeffs;
    int nodes = 0;
    /// Weight sampled at the uniform nodes.
    std::vector<double> weight;

    cplx operator()(cplx z) const;
    /// F at the uniform boundary nodes.
    std::vector<cplx> boundary_values() const;
    /// ||F||_{H^2} with the normalized arc-length measure.
    double h2_norm() const;
};

OuterFunction construct_outer(const ShiftConfig& shift, int nodes = 4096);

struct OuterIdentityReport {
    double max_discrepancy = 0.0;
    int worst_i = 0;
    int worst_j = 0;
    /// max_t | |F|^2 - w | / w on the nodes.
    double boundary_rel_error = 0.0;
    double h2_norm = 0.0;
    double min_abs_boundary = 0.0;
    double max_abs_boundary = 0.0;
};

/// Compares <F z^i, F z^j> with sum_m theta_m <k~_{a_m} z^i, k~_{a_m} z^j> for i, j <= degree.
OuterIdentityReport verify_outer_identity(const OuterFunction& F, const ShiftConfig& shift, int degree);

/// Columns t, w, |F|^2, relative error.
std::string outer_profile_csv(const OuterFunction& F);

}  // namespace coronakit
