#pragma once

#include <string>
#include <vector>

#include "coronakit/types.hpp"

namespace coronakit {

struct FalsifierConfig {
    cplx alpha = 0.5;
    int n = 2;
    int lambda_nodes = 2048;
    /// Polydisc mode (n = 2): the slice integral coincides with the ball case.
    bool polydisc = false;
    double fd_step = 1e-3;
    std::vector<cplx> grid;

    void validate() const;
    /// Polar grid with `rings` radii in [0, radius] and `rays` angles; the origin appears once.
    static std::vector<cplx> polar_grid(int rings, int rays, double radius);
    static FalsifierConfig standard(cplx alpha, int n);
};

/// g(z) = mean over |lambda| = 1 of ln(1 + (1 - |alpha|^2)^n |1 - alpha lambda z|^{-2n}).
double slice_g(const FalsifierConfig& cfg, cplx z);
/// Analytic Laplacian of slice_g.
double slice_laplacian(const FalsifierConfig& cfg, cplx z);
/// Five-point finite-difference Laplacian of slice_g with step cfg.fd_step.
double slice_laplacian_fd(const FalsifierConfig& cfg, cplx z);

struct FalsifierReport {
    bool falsified = false;
    std::string conclusion;
    double min_laplacian = 0.0;
    double max_laplacian = 0.0;
    double g_min = 0.0;
    double g_max = 0.0;
    double g_range = 0.0;
    double g_increment = 0.0;  // g(0.6) - g(0)
    double max_fd_rel_error = 0.0;
    bool radial_profile_monotone = false;
    bool polydisc_reduces_to_ball_slice = false;
};

FalsifierReport falsify_report(const FalsifierConfig& cfg);

/// Columns re, im, g, lap, lap_fd.
std::string falsifier_csv(const FalsifierConfig& cfg);

}  // namespace coronakit
