#pragma once

#include <string>
#include <vector>

#include "coronakit/power_series.hpp"
#include "coronakit/types.hpp"

namespace coronakit {

enum class KernelFamily { szego_disk, hardy_ball, bergman_ball, hardy_polydisc, bergman_polydisc, besov_sobolev_disk };

std::string to_string(KernelFamily f);
KernelFamily kernel_family_from_string(const std::string& name);
const std::vector<KernelFamily>& all_kernel_families();

struct KernelSpec {
    KernelFamily family = KernelFamily::szego_disk;
    int n = 1;
    double sigma = 0.5;
    double p = 2.0;
    double alpha = 0.0;
    int trunc = 256;

    void validate() const;
    DomainSpec domain() const;

    static KernelSpec szego() { return {}; }
    static KernelSpec of(KernelFamily f, int n = 1);
    static KernelSpec besov(double sigma, double p, double alpha, int trunc = 256);
};

/// Reproducing kernel k(x, y) = k_y(x) of one of the built-in families.
class Kernel {
public:
    explicit Kernel(KernelSpec spec);

    const KernelSpec& spec() const { return spec_; }
    DomainSpec domain() const { return spec_.domain(); }

    /// k(x, y); throws DomainError for points outside the domain.
    cplx operator()(const Point& x, const Point& y) const;
    /// k(x, y) without domain checks.
    cplx eval_unchecked(const Point& x, const Point& y) const;
    double diagonal(const Point& x) const { return eval_unchecked(x, x).real(); }
    /// k_a(y) / sqrt(k(a, a)).
    cplx normalized(const Point& a, const Point& y) const;
    double distance(const Point& x, const Point& y) const;

    /// Series coefficients c_k with k(x, y) = sum_k c_k (x conj y)^k (besov family only).
    const std::vector<double>& besov_coefficients() const { return besov_; }

private:
    KernelSpec spec_;
    std::vector<double> besov_;
};

cplx eval_kernel(const KernelSpec& spec, const Point& x, const Point& y);
cplx eval_normalized_kernel(const KernelSpec& spec, const Point& a, const Point& y);
double kernel_distance(const KernelSpec& spec, const Point& x, const Point& y);

/// Multiplier applied to the k-th coefficient by the radial operator R^{gamma,t} in dimension n.
double radial_multiplier(double gamma, double t, int n, int k);

/// Coefficientwise radial operator R^{gamma,t}, or its inverse.
PowerSeries1D radial_coeff_transform(double gamma, double t, int n, const PowerSeries1D& s, bool inverse = false);

/// Coefficients c_0..c_trunc of the Besov-Sobolev pairing kernel on the disk.
PowerSeries1D besov_kernel_coeffs(double sigma, double alpha, double p, int trunc);

/// Approximate normalized Besov-Sobolev kernel (1 - |a|^2)^sigma / (1 - <z, a>)^{2 sigma} on the ball.
cplx approx_normalized_besov_kernel(double sigma, const Point& a, const Point& z);

}  // namespace coronakit
