#pragma once

#include "coronakit/carleson.hpp"
#include "coronakit/power_series.hpp"

namespace coronakit {

struct BesovParams {
    double sigma = 0.5;
    double p = 2.0;
    double alpha = 0.0;
    int m = 1;

    double conjugate_p() const { return p / (p - 1.0); }
    /// Orders t1 = (2 + alpha)/p - sigma and t2 = (2 + alpha)/p' - sigma of the pairing.
    double t1() const { return (2.0 + alpha) / p - sigma; }
    double t2() const { return (2.0 + alpha) / conjugate_p() - sigma; }
    void validate() const;
};

/// ||(1 - |z|^2)^{m + sigma} f^{(m)}||_{L^p(d lambda)}, d lambda = (1 - |z|^2)^{-2} dA with dA of unit mass.
double besov_seminorm_disk(const PowerSeries1D& f, const BesovParams& params, int radial_nodes = 96,
                           int angular_nodes = 256);

/// Taylor terms sum_{k < m} |f^{(k)}(0)| plus the seminorm of order m.
double besov_norm_disk(const PowerSeries1D& f, const BesovParams& params, int radial_nodes = 96,
                       int angular_nodes = 256);

/// Image of f under the radial operator of order t used by the pairing (gamma = alpha - t).
PowerSeries1D pairing_radial_image(const PowerSeries1D& f, double alpha, double t);

struct PairingReport {
    cplx value = 0.0;
    /// ||R_{t1} f||_{L^p(nu_alpha)}.
    double norm_f = 0.0;
    /// ||R_{t2} g||_{L^{p'}(nu_alpha)}.
    double norm_g = 0.0;
};

/// Pairing int R_{t1} f conj(R_{t2} g) d nu_alpha, d nu_alpha = (alpha + 1)(1 - |z|^2)^alpha dA of unit mass.
PairingReport besov_pairing_disk(const PowerSeries1D& f, const PowerSeries1D& g, const BesovParams& params,
                                 int radial_nodes = 64, int angular_nodes = 0);

struct KpsMesh {
    int radial_nodes = 256;
    int angular_nodes = 512;
};

struct KpsReport {
    double value = 0.0;
    double sup_norm = 0.0;
    BoxNormReport carleson;
};

/// ||phi||_inf + box norm of |(1 - |z|^2)^{m + sigma} phi^{(m)}|^p d lambda discretized on a polar mesh.
KpsReport kps_norm_disk(const PowerSeries1D& phi, double sigma, double p, int m, const KpsMesh& mesh = {});

}  // namespace coronakit
