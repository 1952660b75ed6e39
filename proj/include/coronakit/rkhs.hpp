#pragma once

#include <string>
#include <vector>

#include "coronakit/config.hpp"
#include "coronakit/kernels.hpp"
#include "coronakit/types.hpp"

namespace coronakit {

/// Hermitian Gram matrix G_ij = k(x_i, x_j) of a point set.
struct GramMatrix {
    PointSet points;
    CMatrix entries;
    double min_eigenvalue = 0.0;
    double max_eigenvalue = 0.0;
    std::vector<std::string> warnings;

    Eigen::Index size() const { return entries.rows(); }
    /// Tikhonov shift trace(G)/dim times the relative factor.
    double tikhonov_shift(const Tolerances& tol = default_tolerances()) const;
};

/// Values of an N-channel function on a point set, stored as a P x N matrix.
struct SampleFunction {
    PointSet points;
    CMatrix values;

    Eigen::Index channels() const { return values.cols(); }
    CVector channel(Eigen::Index l) const { return values.col(l); }
    void validate() const;

    static SampleFunction scalar(PointSet pts, const CVector& v);
    static SampleFunction constant(PointSet pts, cplx c, Eigen::Index channels = 1);
};

/// A nonnegative number together with the coefficients that attain it.
struct NormReport {
    double value = 0.0;
    /// Kernel coefficients (interpolation) or extremal vectors (multiplier norms), one column per channel.
    CMatrix certificate;
    /// Tikhonov shift used, so value^2 = sum_l xi_l^* (G + shift I) xi_l.
    double shift = 0.0;
    /// Index of the probe or channel attaining the value, when meaningful.
    long attained_at = -1;
};

struct VectorNorms {
    double row = 0.0;
    double column = 0.0;
    double max = 0.0;
};

GramMatrix build_gram(const KernelSpec& spec, const PointSet& pts, const Tolerances& tol = default_tolerances());
CMatrix gram_entries(const Kernel& k, const std::vector<Point>& pts);

/// Values k~_a(x_i) of the normalized kernel at the sample points.
CVector normalized_kernel_values(const Kernel& k, const Point& a, const PointSet& pts);

/// Minimum-norm interpolation of every channel of v; value^2 is the sum over channels.
NormReport min_norm_interpolation(const GramMatrix& G, const SampleFunction& v,
                                  const Tolerances& tol = default_tolerances());
NormReport min_norm_interpolation(const CMatrix& G, const CMatrix& values, const Tolerances& tol = default_tolerances());

/// Coefficients xi with (G + shift I) xi = values.
CMatrix interpolation_coefficients(const CMatrix& G, const CMatrix& values, const Tolerances& tol = default_tolerances());

/// H inner product <interp(u), interp(w)> of two minimum-norm interpolants, with iterated Tikhonov refinement.
cplx interpolant_inner_product(const CMatrix& G, const CVector& u, const CVector& w,
                               const Tolerances& tol = default_tolerances());

/// ||f||_{H^a} = ||k~_a f||_H restricted to the sample points.
NormReport shifted_norm(const KernelSpec& spec, const PointSet& pts, const Point& a, const SampleFunction& f,
                        const Tolerances& tol = default_tolerances());

/// G^a_ij = G_ij / (k~_a(x_i) conj(k~_a(x_j))), the Gram matrix of the shifted space.
CMatrix shifted_gram(const CMatrix& G, const CVector& ktilde_a);

/// Restricted multiplier norm of a scalar function given the Gram matrix directly.
NormReport restricted_multiplier_norm(const CMatrix& G, const CVector& phi, const Tolerances& tol = default_tolerances());
NormReport restricted_multiplier_norm(const KernelSpec& spec, const PointSet& pts, const SampleFunction& phi,
                                      const Tolerances& tol = default_tolerances());

VectorNorms restricted_vector_norms(const CMatrix& G, const CMatrix& phi, const Tolerances& tol = default_tolerances());
VectorNorms restricted_vector_norms(const KernelSpec& spec, const PointSet& pts, const SampleFunction& phi,
                                    const Tolerances& tol = default_tolerances());

/// Lower bound for the kernel-multiplier norm: max over the constant and the probes of ||phi k~_a||.
/// For N channels the per-probe value is (sum_l ||phi_l k~_a||^2)^{1/2}.
NormReport kernel_multiplier_norm_lower(const KernelSpec& spec, const PointSet& pts, const SampleFunction& phi,
                                        const PointSet& probes, const Tolerances& tol = default_tolerances());

}  // namespace coronakit
