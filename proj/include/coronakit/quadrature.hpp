#pragma once

#include <vector>

#include "coronakit/types.hpp"

namespace coronakit {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
};

/// Gauss-Legendre rule on [a, b].
QuadratureRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// Gauss-Jacobi rule on [0, 1] for the weight (1 - s)^alpha s^beta.
QuadratureRule gauss_jacobi_unit(int n, double alpha, double beta = 0.0);

/// Uniform angles 2 pi j / n, j = 0..n-1.
std::vector<double> uniform_angles(int n);

/// Discrete Fourier coefficients c_m = (1/n) sum_j x_j e^{-2 pi i j m / n}, m = 0..n-1.
std::vector<cplx> fft_coefficients(const std::vector<cplx>& samples);

/// Inverse of fft_coefficients: x_j = sum_m c_m e^{2 pi i j m / n}.
std::vector<cplx> fft_synthesize(const std::vector<cplx>& coeffs);

bool is_power_of_two(long n);

}  // namespace coronakit
