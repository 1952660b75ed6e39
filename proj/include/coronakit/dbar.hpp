#pragma once

#include <functional>
#include <string>
#include <vector>

#include "coronakit/besov.hpp"
#include "coronakit/carleson.hpp"
#include "coronakit/power_series.hpp"

namespace coronakit {

/// Tensor polar mesh: Gauss-Legendre radii in (0, 1) and uniform angles.
struct PolarMesh {
    std::vector<double> radii;
    std::vector<double> radial_weights;
    int angular = 0;

    static PolarMesh make(int radial = 64, int angular = 128);
    int radial() const { return static_cast<int>(radii.size()); }
    double angle(int j) const { return 2.0 * pi * j / angular; }
    cplx node(int i, int j) const { return std::polar(radii[static_cast<std::size_t>(i)], angle(j)); }
};

/// Complex samples on a polar mesh, rows indexed by radius and columns by angle.
struct GridField {
    PolarMesh mesh;
    CMatrix values;

    static GridField sample(const PolarMesh& mesh, const std::function<cplx(cplx)>& fn);
    /// Columns r, t, re, im.
    std::string to_csv() const;
};

/// u0(z) = (1/pi) int g(zeta) / (z - zeta) dA(zeta), evaluated through the angular Fourier modes of g.
class CauchyPompeiuSolver {
public:
    explicit CauchyPompeiuSolver(const GridField& g, int sub_nodes = 32);

    cplx operator()(cplx z) const;
    std::vector<cplx> evaluate(const std::vector<cplx>& zs) const;

private:
    std::vector<double> radii_;
    std::vector<double> bary_;
    std::vector<int> modes_;
    CMatrix coeffs_;  // radial node x mode
    std::vector<double> sub_nodes_;
    std::vector<double> sub_weights_;

    RVector interpolation_row(double rho) const;
    /// Mode amplitudes a_m(r) with u(r e^{it}) = sum_m a_m e^{i(m-1)t}.
    CVector amplitudes(double r) const;
};

cplx cauchy_pompeiu_solve(const GridField& g, cplx z);

/// (1/pi) sum_k w_k / (z - zeta_k), the Cauchy-Pompeiu solution for point masses.
cplx pompeiu_point_masses(const DiscreteMeasure& mu, cplx z);

/// Central-difference d/d(conj z) with step h.
cplx dbar_fd(const std::function<cplx(cplx)>& f, cplx z, double h = 1e-4);

/// Disk lattice {h (a + i b)} with |z| <= radius.
std::vector<cplx> disk_lattice(double spacing, double radius);

/// H^2 Carleson norm: box norm with sigma = 1/2, p = 2.
double h2_carleson_norm(const DiscreteMeasure& mu);

struct JonesData {
    DiscreteMeasure mu;
    DiscreteMeasure nu;
    double carleson_norm = 0.0;

    static JonesData from_measure(const DiscreteMeasure& mu);
};

/// Exponential factor exp(sum_{|omega_i| >= |zeta|} nu_i [-(1 + conj(w) z)/(1 - conj(w) z) + (1 + conj(w) zeta)/(1 - conj(w) zeta)]).
cplx jones_exp_factor(const JonesData& data, cplx z, cplx zeta);
/// Jones kernel (2i/pi)(1 - |zeta|^2) / ((z - zeta)(1 - conj(zeta) z)) times the exponential factor.
cplx jones_kernel(const JonesData& data, cplx z, cplx zeta);
/// u(z) = (1/2i) sum_k mu_k K(nu, z, zeta_k), so that d-bar u = mu.
CVector jones_solve(const JonesData& data, const std::vector<cplx>& eval_points);

struct JonesReport {
    double carleson_norm = 0.0;
    double boundary_sup = 0.0;
    double fd_residual = 0.0;
    double data_mass = 0.0;
    std::size_t checked_points = 0;
};

/// Boundary sup over `boundary_nodes` points and FD d-bar residual of u - u0 on a lattice avoiding the support.
JonesReport jones_check(const JonesData& data, double spacing = 0.05, int boundary_nodes = 512,
                        double exclusion = 0.05, double fd_step = 1e-4);

struct SobolevReport {
    double value = 0.0;
    double lp_term = 0.0;
    double difference_integral = 0.0;
    double difference_integral_half = 0.0;
    bool converged = false;
    double poisson_integral = 0.0;
    /// difference_integral / poisson_integral.
    double form_ratio = 0.0;
};

/// (||f||_p^p + int int |f(t) - f(u)|^p / |e^{it} - e^{iu}|^{2 - p sigma} du dt)^{1/p} from uniform boundary samples.
SobolevReport boundary_sobolev_norm(const std::vector<cplx>& samples, double sigma, double p);

struct KoszulOptions {
    int radial_nodes = 64;
    int angular_nodes = 128;
    int boundary_nodes = 512;
    double lattice_spacing = 0.05;
    double fd_spacing = 0.1;
    double fd_radius = 0.9;
    double fd_step = 1e-4;
    double kps_sigma = 0.25;
    double kps_p = 2.0;
    int kps_m = 1;
    KpsMesh kps_mesh{};
    double certify_spacing = 0.01;
};

struct CoronaReport {
    std::vector<PowerSeries1D> f;
    double c_certified = 0.0;
    bool single_inverse = false;
    long inverse_index = -1;
    /// sup over the lattice of |sum_j phi_j F_j - 1| for the series approximants.
    double residual = 0.0;
    /// Same for the smooth-plus-correction values before projection.
    double residual_direct = 0.0;
    double dbar_residual = 0.0;
    double negative_frequency_energy = 0.0;
    double antisymmetry_error = 0.0;
    std::vector<double> sup_f;
    std::vector<double> kps_norms;
};

/// Lower bound min sqrt(sum_j |phi_j|^2) over a lattice of the closed disk and the circle.
double certify_lower_bound(const std::vector<PowerSeries1D>& phi, double spacing = 0.01, int circle_nodes = 2048);

CoronaReport koszul_corona_disk(const std::vector<PowerSeries1D>& phi, double c, const KoszulOptions& opt = {});

}  // namespace coronakit
