#include "coronakit/besov.hpp"

#include <algorithm>
#include <cmath>

#include "coronakit/kernels.hpp"
#include "coronakit/quadrature.hpp"

namespace coronakit {

namespace {

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// (1/2 pi) int |h(r e^{it})|^p dt by the trapezoid rule.
double angular_mean_pow(const PowerSeries1D& h, double r, double p, int nodes) {
    double s = 0.0;
    for (int j = 0; j < nodes; ++j) s += std::pow(std::abs(h(std::polar(r, 2.0 * pi * j / nodes))), p);
    return s / nodes;
}

int angular_nodes_for(int requested, std::size_t degree) {
    return std::max(requested, 2 * static_cast<int>(degree) + 2);
}

}  // namespace

void BesovParams::validate() const {
    if (!(sigma > 0.0)) throw ParameterError("sigma must be positive");
    if (!(p > 1.0) || !std::isfinite(p)) throw ParameterError("p must satisfy 1 < p < inf");
    if (!(alpha > -1.0)) throw ParameterError("alpha must exceed -1");
    if (m < 0) throw ParameterError("m must be nonnegative");
    if (!(m + sigma > 1.0 / p)) throw ParameterError("m + sigma must exceed 1/p");
}

double besov_seminorm_disk(const PowerSeries1D& f, const BesovParams& params, int radial_nodes, int angular_nodes) {
    params.validate();
    const PowerSeries1D d = f.derivative(params.m);
    bool zero = true;
    for (const auto& c : d.coeffs) zero = zero && c == 0.0;
    if (zero) return 0.0;
    // With s = r^2: int |.|^p d lambda = int_0^1 (1 - s)^{p(m+sigma) - 2} mean_t |f^{(m)}|^p ds.
    const auto q = gauss_jacobi_unit(radial_nodes, params.p * (params.m + params.sigma) - 2.0);
    const int nt = angular_nodes_for(angular_nodes, d.size());
    double s = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) s += q.weights[i] * angular_mean_pow(d, std::sqrt(q.nodes[i]), params.p, nt);
    return std::pow(s, 1.0 / params.p);
}

double besov_norm_disk(const PowerSeries1D& f, const BesovParams& params, int radial_nodes, int angular_nodes) {
    double taylor = 0.0;
    for (int k = 0; k < params.m && k < static_cast<int>(f.size()); ++k)
        taylor += factorial(k) * std::abs(f.coeffs[static_cast<std::size_t>(k)]);
    return taylor + besov_seminorm_disk(f, params, radial_nodes, angular_nodes);
}

PowerSeries1D pairing_radial_image(const PowerSeries1D& f, double alpha, double t) {
    return radial_coeff_transform(alpha - t, t, 1, f, false);
}

PairingReport besov_pairing_disk(const PowerSeries1D& f, const PowerSeries1D& g, const BesovParams& params,
                                 int radial_nodes, int angular_nodes) {
    params.validate();
    const PowerSeries1D Rf = pairing_radial_image(f, params.alpha, params.t1());
    const PowerSeries1D Rg = pairing_radial_image(g, params.alpha, params.t2());
    const int nt = angular_nodes_for(angular_nodes, std::max(Rf.size(), Rg.size()));
    // d nu_alpha = (alpha + 1)(1 - s)^alpha ds dt / (2 pi) with s = r^2.
    const auto q = gauss_jacobi_unit(radial_nodes, params.alpha);
    const double pp = params.conjugate_p();
    PairingReport rep;
    double nf = 0.0, ng = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const double r = std::sqrt(q.nodes[i]);
        const double w = (params.alpha + 1.0) * q.weights[i] / nt;
        for (int j = 0; j < nt; ++j) {
            const cplx z = std::polar(r, 2.0 * pi * j / nt);
            const cplx a = Rf(z), b = Rg(z);
            rep.value += w * a * std::conj(b);
            nf += w * std::pow(std::abs(a), params.p);
            ng += w * std::pow(std::abs(b), pp);
        }
    }
    rep.norm_f = std::pow(nf, 1.0 / params.p);
    rep.norm_g = std::pow(ng, 1.0 / pp);
    return rep;
}

KpsReport kps_norm_disk(const PowerSeries1D& phi, double sigma, double p, int m, const KpsMesh& mesh) {
    BesovParams bp{sigma, p, 0.0, m};
    bp.validate();
    if (mesh.radial_nodes < 2 || mesh.angular_nodes < 4) throw ParameterError("mesh is too coarse");
    const auto q = gauss_legendre(mesh.radial_nodes, 0.0, 1.0);
    const int T = mesh.angular_nodes;
    const PowerSeries1D d = phi.derivative(m);
    RMatrix W(mesh.radial_nodes, T);
    KpsReport rep;
    const double expo = p * (m + sigma) - 2.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const double r = q.nodes[i];
        // Normalized area r dr dt / pi times the invariant density.
        const double base = q.weights[i] * r * (2.0 * pi / T) / pi * std::pow(1.0 - r * r, expo);
        for (int j = 0; j < T; ++j) {
            const cplx z = std::polar(r, 2.0 * pi * j / T);
            rep.sup_norm = std::max(rep.sup_norm, std::abs(phi(z)));
            W(static_cast<Eigen::Index>(i), j) = base * std::pow(std::abs(d(z)), p);
        }
    }
    for (int j = 0; j < T; ++j) rep.sup_norm = std::max(rep.sup_norm, std::abs(phi(std::polar(1.0, 2.0 * pi * j / T))));
    rep.carleson = box_norm_polar_mesh(q.nodes, W, sigma, p);
    rep.value = rep.sup_norm + rep.carleson.value;
    return rep;
}

}  // namespace coronakit
