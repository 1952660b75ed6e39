#pragma once

#include <vector>

#include "coronakit/types.hpp"

namespace coronakit {

/// Truncated Taylor series sum_k c_k z^k of a one-variable analytic function.
struct PowerSeries1D {
    std::vector<cplx> coeffs;

    PowerSeries1D() = default;
    explicit PowerSeries1D(std::vector<cplx> c) : coeffs(std::move(c)) {}

    static PowerSeries1D monomial(int k, cplx scale = 1.0);
    static PowerSeries1D constant(cplx c) { return PowerSeries1D({c}); }

    std::size_t size() const { return coeffs.size(); }
    bool empty() const { return coeffs.empty(); }

    cplx operator()(cplx z) const;
    /// m-th complex derivative evaluated at z.
    cplx derivative_at(cplx z, int m) const;
    PowerSeries1D derivative(int m = 1) const;

    PowerSeries1D operator*(const PowerSeries1D& other) const;
    PowerSeries1D& operator*=(cplx s);

    /// Replace f(z) by f(e^{i phi} z).
    PowerSeries1D rotated(double phi) const;
};

}  // namespace coronakit
