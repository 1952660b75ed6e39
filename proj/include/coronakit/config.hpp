#pragma once

namespace coronakit {

/// Numerical policy shared by every Gram-based computation.
///
/// Reports echo the effective values so that each number can be traced back
/// to the tolerances that produced it.
struct Tolerances {
    /// Tikhonov shift for Gram inversion, relative to trace(G)/dim.
    double tikhonov_rel = 1e-12;
    /// Eigenvalues below this fraction of the largest are treated as zero.
    double range_cutoff = 1e-12;
    /// Allowed negative eigenvalue of a Gram matrix, relative to the largest.
    double psd_tol = 1e-10;
    /// Duplicate sample points whose values agree to this are merged.
    double merge_tol = 1e-12;
    /// Residual allowed for pointwise Bezout constraints, scaled by 1 + |rhs|_inf.
    double bezout_residual = 1e-9;
    /// Cocycle tolerance in radians per unit of matrix size.
    double cocycle_tol = 1e-8;
};

inline const Tolerances& default_tolerances() {
    static const Tolerances t{};
    return t;
}

}  // namespace coronakit
