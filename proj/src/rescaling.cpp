#include "coronakit/rescaling.hpp"

#include <algorithm>
#include <cmath>

namespace coronakit {

namespace {

void require_kernel_matrix(const CMatrix& M, const char* name) {
    if (M.rows() != M.cols()) throw ParameterError(std::string(name) + " must be square");
    const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        if (!(M(i, i).real() > 0.0) || std::abs(M(i, i).imag()) > 1e-12 * scale)
            throw ParameterError(std::string(name) + " must have a positive diagonal");
        for (Eigen::Index j = 0; j < M.cols(); ++j) {
            if (M(i, j) == 0.0) throw ParameterError(std::string(name) + " has a vanishing entry");
            if (std::abs(M(i, j) - std::conj(M(j, i))) > 1e-12 * scale)
                throw ParameterError(std::string(name) + " is not self-adjoint");
        }
    }
}

}  // namespace

double wrap_angle(double x) {
    double y = std::remainder(x, 2.0 * pi);
    if (y <= -pi) y += 2.0 * pi;
    return y;
}

CMatrix apply_rescaling(const CMatrix& k, const CVector& psi) {
    if (k.rows() != psi.size() || k.cols() != psi.size()) throw ParameterError("psi length does not match matrix size");
    if ((psi.array().abs() == 0.0).any()) throw ParameterError("rescaling function has a zero entry");
    return psi.asDiagonal() * k * psi.conjugate().asDiagonal();
}

double matrix_kernel_distance(const CMatrix& M, Eigen::Index i, Eigen::Index j) {
    const double ratio = std::norm(M(i, j)) / (M(i, i).real() * M(j, j).real());
    return std::sqrt(std::clamp(1.0 - ratio, 0.0, 1.0));
}

RescalingResult check_rescaling(const CMatrix& K, const CMatrix& k, double tol, double cocycle_tol) {
    require_kernel_matrix(K, "K");
    require_kernel_matrix(k, "k");
    if (K.rows() != k.rows()) throw ParameterError("matrices have different sizes");
    const Eigen::Index P = K.rows();
    RescalingResult res;

    auto reject = [&](std::string kind, long i, long j, long l, double d) {
        res.is_rescaling = false;
        res.violation = RescalingViolation{std::move(kind), i, j, l, d};
        return res;
    };

    for (Eigen::Index i = 0; i < P; ++i)
        for (Eigen::Index j = i + 1; j < P; ++j) {
            const double rK = std::norm(K(i, j)) / (K(i, i).real() * K(j, j).real());
            const double rk = std::norm(k(i, j)) / (k(i, i).real() * k(j, j).real());
            const double d = std::abs(rK - rk);
            if (d > tol * std::max(1.0, std::max(rK, rk))) return reject("modulus", i, j, -1, d);
        }

    RVector theta(P);
    theta(0) = 0.0;
    for (Eigen::Index j = 1; j < P; ++j) theta(j) = std::arg(K(0, j) / k(0, j));
    const double atol = cocycle_tol * static_cast<double>(std::max<Eigen::Index>(P, 1));
    for (Eigen::Index j = 1; j < P; ++j)
        for (Eigen::Index l = j + 1; l < P; ++l) {
            const double tjl = std::arg(K(j, l) / k(j, l));
            const double d = std::abs(wrap_angle(tjl - (theta(l) - theta(j))));
            if (d > atol) return reject("cocycle", 0, j, l, d);
        }

    RescalingWitness w;
    w.theta = theta;
    w.psi.resize(P);
    for (Eigen::Index j = 0; j < P; ++j)
        w.psi(j) = std::polar(std::sqrt(K(j, j).real() / k(j, j).real()), -theta(j));

    const CMatrix R = apply_rescaling(k, w.psi);
    const double scale = K.cwiseAbs().maxCoeff();
    Eigen::Index bi = 0, bj = 0;
    const double err = (R - K).cwiseAbs().maxCoeff(&bi, &bj);
    if (err > tol * scale) return reject("reconstruction", bi, bj, -1, err / scale);

    res.is_rescaling = true;
    res.witness = std::move(w);
    return res;
}

}  // namespace coronakit
