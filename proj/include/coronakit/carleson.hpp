#pragma once

#include <vector>

#include "coronakit/types.hpp"

namespace coronakit {

/// Finite sum of weighted point masses in the domain.
struct DiscreteMeasure {
    PointSet points;
    std::vector<double> weights;

    std::size_t size() const { return weights.size(); }
    double total_mass() const;
    void validate() const;
    DiscreteMeasure scaled(double s) const;

    static DiscreteMeasure disk(const std::vector<cplx>& zs, const std::vector<double>& w);
};

/// Carleson box over the arc of half-width `radius` centred at angle `center` on the circle.
struct CarlesonBox {
    double center = 0.0;
    double radius = 0.0;

    /// Arc length |Q| = min(2 radius, 2 pi).
    double arc_length() const;
    /// z lies in S(Q) = {1 - |z| <= radius, arg z within the arc}.
    bool contains(cplx z) const;
};

struct BoxNormReport {
    double value = 0.0;
    CarlesonBox box;
    double box_mass = 0.0;
};

/// sup_Q mu(S(Q))^{1/p} / |Q|^{sigma/n} over dyadic towers above the support (disk, n = 1).
BoxNormReport box_norm(const DiscreteMeasure& mu, double sigma, double p, int n = 1);

/// Box norm of masses W(i, j) at radii r_i (ascending) and uniform angles 2 pi j / cols, via prefix sums.
BoxNormReport box_norm_polar_mesh(const std::vector<double>& radii, const RMatrix& W, double sigma, double p);

/// max over probes a of (sum_i w_i |k~_a(z_i)|^p)^{1/p} with k~_a(z) = (1 - |a|^2)^sigma / (1 - <z, a>)^{2 sigma}.
double testing_norm(const DiscreteMeasure& mu, double sigma, double p, const PointSet& probes);

/// Support points of mu together with a polar probe grid (disk only).
PointSet default_probe_grid(const DiscreteMeasure& mu, int rings = 16, int rays = 64);

}  // namespace coronakit
