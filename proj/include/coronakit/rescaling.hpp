#pragma once

#include <optional>
#include <string>

#include "coronakit/types.hpp"

namespace coronakit {

struct RescalingWitness {
    CVector psi;
    /// Phases theta_j = arg(K_1j / k_1j), with theta_1 = 0.
    RVector theta;
};

struct RescalingViolation {
    /// "modulus", "cocycle" or "reconstruction".
    std::string kind;
    long i = -1;
    long j = -1;
    long l = -1;
    double discrepancy = 0.0;
};

struct RescalingResult {
    bool is_rescaling = false;
    std::optional<RescalingWitness> witness;
    std::optional<RescalingViolation> violation;
};

/// K_ij = psi_i k_ij conj(psi_j).
CMatrix apply_rescaling(const CMatrix& k, const CVector& psi);

/// Decide whether K is a rescaling of k; tol bounds the modulus condition and the reconstruction error.
/// The phase condition uses cocycle_tol radians times the matrix size.
RescalingResult check_rescaling(const CMatrix& K, const CMatrix& k, double tol = 1e-8, double cocycle_tol = 1e-8);

/// Kernel distance sqrt(1 - |M_ij|^2 / (M_ii M_jj)) read off a kernel matrix.
double matrix_kernel_distance(const CMatrix& M, Eigen::Index i, Eigen::Index j);

/// Wrap an angle to (-pi, pi].
double wrap_angle(double x);

}  // namespace coronakit
