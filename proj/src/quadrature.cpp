#include "coronakit/quadrature.hpp"

#include <cmath>
#include <mutex>

#include <Eigen/Eigenvalues>
#include <boost/math/special_functions/beta.hpp>
#include <fftw3.h>

namespace coronakit {

namespace {

// Golub-Welsch from a symmetric tridiagonal Jacobi matrix on [-1, 1].
QuadratureRule golub_welsch(const RVector& diag, const RVector& offdiag, double mu0) {
    const auto n = diag.size();
    RMatrix J = RMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        J(i, i) = diag(i);
        if (i + 1 < n) J(i, i + 1) = J(i + 1, i) = offdiag(i);
    }
    Eigen::SelfAdjointEigenSolver<RMatrix> es(J);
    if (es.info() != Eigen::Success) throw NumericalError("Golub-Welsch eigensolve failed");
    QuadratureRule q;
    q.nodes.resize(static_cast<std::size_t>(n));
    q.weights.resize(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        q.nodes[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        q.weights[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
    }
    return q;
}

std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

std::vector<cplx> run_fft(const std::vector<cplx>& in, int sign) {
    const int n = static_cast<int>(in.size());
    std::vector<cplx> out(in.size());
    if (n == 0) return out;
    std::vector<cplx> buf = in;
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(buf.data()),
                                reinterpret_cast<fftw_complex*>(out.data()), sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

}  // namespace

QuadratureRule gauss_legendre(int n, double a, double b) {
    if (n < 1) throw ParameterError("quadrature size must be positive");
    RVector diag = RVector::Zero(n);
    RVector off(std::max(n - 1, 0));
    for (int k = 1; k < n; ++k) off(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
    QuadratureRule q = golub_welsch(diag, off, 2.0);
    const double half = 0.5 * (b - a), mid = 0.5 * (b + a);
    for (std::size_t i = 0; i < q.size(); ++i) {
        q.nodes[i] = mid + half * q.nodes[i];
        q.weights[i] *= half;
    }
    return q;
}

QuadratureRule gauss_jacobi_unit(int n, double alpha, double beta) {
    if (n < 1) throw ParameterError("quadrature size must be positive");
    if (alpha <= -1.0 || beta <= -1.0) throw ParameterError("Jacobi exponents must exceed -1");
    // Jacobi polynomials P^{(alpha,beta)} on [-1,1] with weight (1-x)^alpha (1+x)^beta.
    RVector diag(n);
    RVector off(std::max(n - 1, 0));
    const double ab = alpha + beta;
    for (int k = 0; k < n; ++k) {
        const double denom = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
        if (std::abs(denom) < 1e-300)
            diag(k) = (beta - alpha) / (ab + 2.0);
        else
            diag(k) = (beta * beta - alpha * alpha) / denom;
    }
    for (int k = 1; k < n; ++k) {
        const double t = 2.0 * k + ab;
        const double num = 4.0 * k * (k + alpha) * (k + beta) * (k + ab);
        const double den = t * t * (t + 1.0) * (t - 1.0);
        off(k - 1) = std::sqrt(num / den);
    }
    const double mu0 = std::pow(2.0, ab + 1.0) * boost::math::beta(alpha + 1.0, beta + 1.0);
    QuadratureRule q = golub_welsch(diag, off, mu0);
    // x = 2s - 1 maps to s in [0,1]; (1-x)^a (1+x)^b dx = 2^{a+b+1} (1-s)^a s^b ds.
    const double scale = std::pow(2.0, -(ab + 1.0));
    for (std::size_t i = 0; i < q.size(); ++i) {
        q.nodes[i] = 0.5 * (q.nodes[i] + 1.0);
        q.weights[i] *= scale;
    }
    return q;
}

std::vector<double> uniform_angles(int n) {
    if (n < 1) throw ParameterError("angular grid size must be positive");
    std::vector<double> t(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(j)] = 2.0 * pi * j / n;
    return t;
}

std::vector<cplx> fft_coefficients(const std::vector<cplx>& samples) {
    auto out = run_fft(samples, FFTW_FORWARD);
    const double inv = samples.empty() ? 0.0 : 1.0 / static_cast<double>(samples.size());
    for (auto& c : out) c *= inv;
    return out;
}

std::vector<cplx> fft_synthesize(const std::vector<cplx>& coeffs) { return run_fft(coeffs, FFTW_BACKWARD); }

bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace coronakit
