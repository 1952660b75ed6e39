#include "coronakit/rkhs.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "coronakit/parallel.hpp"

namespace coronakit {

namespace {

struct Whitened {
    CMatrix W;  // U_r Lambda_r^{-1/2}
};

Whitened whiten(const CMatrix& G, const Tolerances& tol) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(G);
    if (es.info() != Eigen::Success) throw NumericalError("Gram eigensolve failed");
    const RVector& lam = es.eigenvalues();
    const double lmax = lam.size() ? lam.maxCoeff() : 0.0;
    if (lam.size() && lam.minCoeff() < -tol.psd_tol * std::max(lmax, 0.0))
        throw NumericalError("Gram matrix is indefinite beyond tolerance");
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < lam.size(); ++i)
        if (lam(i) > tol.range_cutoff * lmax) keep.push_back(i);
    Whitened w;
    w.W.resize(G.rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t j = 0; j < keep.size(); ++j)
        w.W.col(static_cast<Eigen::Index>(j)) = es.eigenvectors().col(keep[j]) / std::sqrt(lam(keep[j]));
    return w;
}

// Matrix of M_phi^* on the kernel span in whitened coordinates.
CMatrix adjoint_block(const CMatrix& G, const Whitened& w, const CVector& phi) {
    return w.W.adjoint() * G * phi.conjugate().asDiagonal() * w.W;
}

double top_eigen(const CMatrix& H, CVector* vec) {
    if (H.rows() == 0) {
        if (vec) vec->resize(0);
        return 0.0;
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(H);
    if (es.info() != Eigen::Success) throw NumericalError("eigensolve failed");
    const Eigen::Index last = H.rows() - 1;
    if (vec) *vec = es.eigenvectors().col(last);
    return std::max(es.eigenvalues()(last), 0.0);
}

CMatrix regularized(const CMatrix& G, double shift) {
    CMatrix R = G;
    R.diagonal().array() += shift;
    return R;
}

double shift_for(const CMatrix& G, const Tolerances& tol) {
    if (G.rows() == 0) return 0.0;
    return tol.tikhonov_rel * G.trace().real() / static_cast<double>(G.rows());
}

bool same_point(const Point& a, const Point& b) { return a.size() == b.size() && (a - b).norm() <= 1e-14; }

}  // namespace

double GramMatrix::tikhonov_shift(const Tolerances& tol) const { return shift_for(entries, tol); }

void SampleFunction::validate() const {
    if (values.rows() != static_cast<Eigen::Index>(points.size()))
        throw ParameterError("sample function has " + std::to_string(values.rows()) + " rows for " +
                             std::to_string(points.size()) + " points");
    if (values.cols() < 1) throw ParameterError("sample function needs at least one channel");
}

SampleFunction SampleFunction::scalar(PointSet pts, const CVector& v) {
    SampleFunction f{std::move(pts), CMatrix(v.size(), 1)};
    f.values.col(0) = v;
    f.validate();
    return f;
}

SampleFunction SampleFunction::constant(PointSet pts, cplx c, Eigen::Index channels) {
    const auto P = static_cast<Eigen::Index>(pts.size());
    return SampleFunction{std::move(pts), CMatrix::Constant(P, channels, c)};
}

CMatrix gram_entries(const Kernel& k, const std::vector<Point>& pts) {
    const auto P = static_cast<Eigen::Index>(pts.size());
    CMatrix G(P, P);
    parallel_for(pts.size(), [&](std::size_t i) {
        const auto ii = static_cast<Eigen::Index>(i);
        for (Eigen::Index j = 0; j <= ii; ++j) {
            const cplx v = k.eval_unchecked(pts[i], pts[static_cast<std::size_t>(j)]);
            G(ii, j) = v;
        }
    });
    for (Eigen::Index i = 0; i < P; ++i) {
        G(i, i) = G(i, i).real();
        for (Eigen::Index j = 0; j < i; ++j) G(j, i) = std::conj(G(i, j));
    }
    return G;
}

GramMatrix build_gram(const KernelSpec& spec, const PointSet& pts, const Tolerances& tol) {
    const Kernel k(spec);
    if (!(pts.domain == spec.domain()))
        throw DomainError("point set domain " + to_string(pts.domain.kind) + " does not match kernel " +
                          to_string(spec.family));
    pts.validate();
    GramMatrix g;
    g.points = pts;
    g.entries = gram_entries(k, pts.points);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (same_point(pts[i], pts[j]))
                g.warnings.push_back("duplicate points " + std::to_string(j) + " and " + std::to_string(i));
    if (g.size() > 0) {
        Eigen::SelfAdjointEigenSolver<CMatrix> es(g.entries, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success) throw NumericalError("Gram eigensolve failed");
        g.min_eigenvalue = es.eigenvalues().minCoeff();
        g.max_eigenvalue = es.eigenvalues().maxCoeff();
        if (g.min_eigenvalue < -tol.psd_tol * std::max(g.max_eigenvalue, 0.0))
            throw NumericalError("Gram matrix is indefinite beyond tolerance: min eigenvalue " +
                                 std::to_string(g.min_eigenvalue));
    }
    return g;
}

CVector normalized_kernel_values(const Kernel& k, const Point& a, const PointSet& pts) {
    CVector v(static_cast<Eigen::Index>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i) v(static_cast<Eigen::Index>(i)) = k.normalized(a, pts[i]);
    return v;
}

CMatrix interpolation_coefficients(const CMatrix& G, const CMatrix& values, const Tolerances& tol) {
    if (G.rows() != values.rows()) throw ParameterError("value count does not match Gram size");
    if (G.rows() == 0) return CMatrix(0, values.cols());
    const CMatrix R = regularized(G, shift_for(G, tol));
    Eigen::LDLT<CMatrix> ldlt(R);
    if (ldlt.info() != Eigen::Success) throw NumericalError("regularized Gram factorization failed");
    return ldlt.solve(values);
}

NormReport min_norm_interpolation(const CMatrix& G, const CMatrix& values, const Tolerances& tol) {
    NormReport r;
    r.shift = shift_for(G, tol);
    r.certificate = interpolation_coefficients(G, values, tol);
    double s = 0.0;
    for (Eigen::Index l = 0; l < values.cols(); ++l)
        s += values.col(l).dot(r.certificate.col(l)).real();
    r.value = std::sqrt(std::max(s, 0.0));
    return r;
}

NormReport min_norm_interpolation(const GramMatrix& G, const SampleFunction& v, const Tolerances& tol) {
    v.validate();
    if (v.values.rows() != G.size()) throw ParameterError("sample function is not defined on the Gram points");
    std::vector<Eigen::Index> keep;
    std::vector<Eigen::Index> owner(static_cast<std::size_t>(G.size()), -1);
    for (Eigen::Index i = 0; i < G.size(); ++i) {
        for (Eigen::Index k : keep) {
            if (same_point(G.points[static_cast<std::size_t>(i)], G.points[static_cast<std::size_t>(k)])) {
                const double diff = (v.values.row(i) - v.values.row(k)).cwiseAbs().maxCoeff();
                if (diff > tol.merge_tol)
                    throw InfeasibleError("inconsistent values at duplicated points " + std::to_string(k) + " and " +
                                          std::to_string(i));
                owner[static_cast<std::size_t>(i)] = k;
                break;
            }
        }
        if (owner[static_cast<std::size_t>(i)] < 0) keep.push_back(i);
    }
    if (keep.size() == static_cast<std::size_t>(G.size())) return min_norm_interpolation(G.entries, v.values, tol);
    const auto m = static_cast<Eigen::Index>(keep.size());
    CMatrix Gs(m, m), Vs(m, v.values.cols());
    for (Eigen::Index i = 0; i < m; ++i) {
        Vs.row(i) = v.values.row(keep[static_cast<std::size_t>(i)]);
        for (Eigen::Index j = 0; j < m; ++j) Gs(i, j) = G.entries(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]);
    }
    NormReport r = min_norm_interpolation(Gs, Vs, tol);
    CMatrix full = CMatrix::Zero(G.size(), v.values.cols());
    for (Eigen::Index i = 0; i < m; ++i) full.row(keep[static_cast<std::size_t>(i)]) = r.certificate.row(i);
    r.certificate = full;
    return r;
}

cplx interpolant_inner_product(const CMatrix& G, const CVector& u, const CVector& w, const Tolerances& tol) {
    CMatrix rhs(G.rows(), 2);
    rhs.col(0) = u;
    rhs.col(1) = w;
    if (G.rows() != rhs.rows()) throw ParameterError("value count does not match Gram size");
    if (G.rows() == 0) return 0.0;
    // Iterated Tikhonov: refinement against G removes the shift bias on the well-conditioned part of the range.
    Eigen::LDLT<CMatrix> ldlt(regularized(G, shift_for(G, tol)));
    if (ldlt.info() != Eigen::Success) throw NumericalError("regularized Gram factorization failed");
    CMatrix xi = ldlt.solve(rhs);
    for (int step = 0; step < 3; ++step) xi += ldlt.solve(rhs - G * xi);
    return xi.col(1).dot(G * xi.col(0));
}

NormReport shifted_norm(const KernelSpec& spec, const PointSet& pts, const Point& a, const SampleFunction& f,
                        const Tolerances& tol) {
    const Kernel k(spec);
    spec.domain().require_inside(a);
    const GramMatrix G = build_gram(spec, pts, tol);
    const CVector kt = normalized_kernel_values(k, a, pts);
    if ((kt.array().abs() == 0.0).any()) throw NumericalError("normalized kernel vanishes at a sample point");
    SampleFunction prod = f;
    prod.validate();
    for (Eigen::Index l = 0; l < prod.values.cols(); ++l) prod.values.col(l) = kt.cwiseProduct(f.values.col(l));
    return min_norm_interpolation(G, prod, tol);
}

CMatrix shifted_gram(const CMatrix& G, const CVector& ktilde_a) {
    CMatrix Ga(G.rows(), G.cols());
    for (Eigen::Index i = 0; i < G.rows(); ++i)
        for (Eigen::Index j = 0; j < G.cols(); ++j) Ga(i, j) = G(i, j) / (ktilde_a(i) * std::conj(ktilde_a(j)));
    return Ga;
}

NormReport restricted_multiplier_norm(const CMatrix& G, const CVector& phi, const Tolerances& tol) {
    if (phi.size() != G.rows()) throw ParameterError("multiplier values do not match Gram size");
    const Whitened w = whiten(G, tol);
    const CMatrix A = adjoint_block(G, w, phi);
    CVector y;
    const double lam = top_eigen(A.adjoint() * A, &y);
    NormReport r;
    r.value = std::sqrt(lam);
    r.certificate = w.W * y;
    return r;
}

NormReport restricted_multiplier_norm(const KernelSpec& spec, const PointSet& pts, const SampleFunction& phi,
                                      const Tolerances& tol) {
    phi.validate();
    if (phi.channels() != 1) throw ParameterError("scalar multiplier norm needs one channel");
    const GramMatrix G = build_gram(spec, pts, tol);
    return restricted_multiplier_norm(G.entries, phi.channel(0), tol);
}

VectorNorms restricted_vector_norms(const CMatrix& G, const CMatrix& phi, const Tolerances& tol) {
    if (phi.rows() != G.rows()) throw ParameterError("multiplier values do not match Gram size");
    if (phi.cols() < 1) throw ParameterError("vector multiplier needs at least one channel");
    const Whitened w = whiten(G, tol);
    const Eigen::Index r = w.W.cols();
    CMatrix rowsum = CMatrix::Zero(r, r), colsum = CMatrix::Zero(r, r);
    VectorNorms out;
    for (Eigen::Index l = 0; l < phi.cols(); ++l) {
        const CMatrix A = adjoint_block(G, w, phi.col(l));
        const CMatrix AA = A.adjoint() * A;
        rowsum += AA;
        colsum += A * A.adjoint();
        out.max = std::max(out.max, std::sqrt(top_eigen(AA, nullptr)));
    }
    out.row = std::sqrt(top_eigen(rowsum, nullptr));
    out.column = std::sqrt(top_eigen(colsum, nullptr));
    return out;
}

VectorNorms restricted_vector_norms(const KernelSpec& spec, const PointSet& pts, const SampleFunction& phi,
                                    const Tolerances& tol) {
    phi.validate();
    const GramMatrix G = build_gram(spec, pts, tol);
    return restricted_vector_norms(G.entries, phi.values, tol);
}

NormReport kernel_multiplier_norm_lower(const KernelSpec& spec, const PointSet& pts, const SampleFunction& phi,
                                        const PointSet& probes, const Tolerances& tol) {
    phi.validate();
    const Kernel k(spec);
    const GramMatrix G = build_gram(spec, pts, tol);
    probes.validate();
    if (!(probes.domain == spec.domain())) throw DomainError("probe domain does not match kernel");

    // The constant 1 equals k_0 / k(0,0), so 1~ = sqrt(k(0,0)) for every built-in family.
    const Point origin = Point::Zero(spec.domain().dim);
    const double one_tilde = std::sqrt(k.diagonal(origin));

    auto product_norm = [&](const CVector& weight) {
        CMatrix vals(phi.values.rows(), phi.values.cols());
        for (Eigen::Index l = 0; l < vals.cols(); ++l) vals.col(l) = weight.cwiseProduct(phi.values.col(l));
        return min_norm_interpolation(G, SampleFunction{pts, vals}, tol);
    };

    NormReport best = product_norm(CVector::Constant(static_cast<Eigen::Index>(pts.size()), one_tilde));
    best.attained_at = -1;
    for (std::size_t q = 0; q < probes.size(); ++q) {
        NormReport r = product_norm(normalized_kernel_values(k, probes[q], pts));
        if (r.value > best.value) {
            best = r;
            best.attained_at = static_cast<long>(q);
        }
    }
    return best;
}

}  // namespace coronakit
