#pragma once

#include <vector>

#include "coronakit/config.hpp"
#include "coronakit/kernels.hpp"
#include "coronakit/rkhs.hpp"

namespace coronakit {

/// Base points a_1..a_M with simplex weights theta_0..theta_M; index 0 is the unshifted norm.
struct ShiftConfig {
    std::vector<Point> base_points;
    std::vector<double> theta;

    std::size_t size() const { return base_points.size(); }
    void validate(const DomainSpec& domain) const;

    static ShiftConfig unshifted() { return {{}, {1.0}}; }
    static ShiftConfig vertex(std::vector<Point> base, std::size_t m);
};

/// Quadratic forms Q_m with ||f||^2_{H^{a_m}} = f^* Q_m f on a fixed point set (Q_0 is the unshifted form).
class ShiftedForms {
public:
    ShiftedForms(const KernelSpec& spec, const PointSet& pts, const std::vector<Point>& base_points,
                 const Tolerances& tol = default_tolerances());

    std::size_t components() const { return Q_.size(); }
    const CMatrix& form(std::size_t m) const { return Q_[m]; }
    const CMatrix& gram() const { return G_; }
    const CVector& ktilde(std::size_t m) const { return kt_[m - 1]; }
    CMatrix combined(const std::vector<double>& theta) const;
    /// sum over channels of g_l^* Q_m g_l for every m.
    std::vector<double> component_values(const CMatrix& g) const;

private:
    CMatrix G_;
    std::vector<CVector> kt_;
    std::vector<CMatrix> Q_;
};

struct ConvexNormReport {
    double value = 0.0;
    /// Squared single-shift norms ||f||^2_{H^{a_m}}, m = 0..M.
    std::vector<double> components;
};

/// sqrt(sum_m theta_m ||f||^2_{H^{a_m}}), each component solved against G + shift I
/// rather than through the explicit forms.
ConvexNormReport convex_shift_norm(const KernelSpec& spec, const PointSet& pts, const ShiftConfig& shift,
                                   const SampleFunction& f, const Tolerances& tol = default_tolerances());

struct BezoutProblem {
    KernelSpec spec;
    PointSet pts;
    SampleFunction phi;
    CVector rhs;
    ShiftConfig shift = ShiftConfig::unshifted();
    double lower_bound_c = 0.0;

    void validate() const;
};

struct BezoutSolution {
    SampleFunction g;
    /// Convex shifted norm sqrt(objective).
    double norm = 0.0;
    /// Quadratic objective sum_l ||g_l||^2_{H^{a,theta}}.
    double objective = 0.0;
    double residual = 0.0;
    std::vector<double> per_channel_norms;
    /// Squared single-shift norms summed over channels, m = 0..M.
    std::vector<double> components;
};

BezoutSolution solve_bezout_min_norm(const BezoutProblem& prob, const Tolerances& tol = default_tolerances());

/// Same solve against precomputed forms.
BezoutSolution solve_bezout_min_norm(const ShiftedForms& forms, const CMatrix& phi, const CVector& rhs,
                                     const std::vector<double>& theta, const Tolerances& tol = default_tolerances());

/// Pointwise residual max_i |sum_l phi_l(x_i) g_l(x_i) - rhs_i|.
double bezout_residual(const CMatrix& phi, const CMatrix& g, const CVector& rhs);

/// Turn a solution of phi . f = k~_a into a solution of phi . g = 1 by g_l = f_l / k~_a.
/// per_channel_norms hold ||g_l||_{H^a}.
BezoutSolution divide_by_kernel(const KernelSpec& spec, const PointSet& pts, const SampleFunction& phi, const Point& a,
                                const BezoutSolution& f, const Tolerances& tol = default_tolerances());

struct SaddleOptions {
    int max_iterations = 2000;
    int ascent_iterations = 40;
    double rel_gap = 1e-10;
};

struct SaddleReport {
    /// sup_theta inf_g (equal to inf_g sup_theta at convergence).
    double value = 0.0;
    ShiftConfig theta_star;
    BezoutSolution g_star;
    /// max_m F_m of the mixed certificate; an upper bound for inf_g sup_theta.
    double upper_bound = 0.0;
    double duality_gap = 0.0;
    /// Mixed competitor attaining upper_bound.
    CMatrix g_upper;
    int iterations = 0;
    bool converged = false;
};

SaddleReport saddle_value(const KernelSpec& spec, const PointSet& pts, const SampleFunction& phi,
                          const std::vector<Point>& base_points, const SaddleOptions& opt = {},
                          const Tolerances& tol = default_tolerances());

/// Euclidean projection onto the probability simplex.
std::vector<double> project_to_simplex(const std::vector<double>& v);

}  // namespace coronakit
