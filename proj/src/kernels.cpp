#include "coronakit/kernels.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/gamma.hpp>

namespace coronakit {

namespace {

cplx ipow_inv(cplx base, int s) {
    cplx r = 1.0;
    for (int i = 0; i < s; ++i) r *= base;
    return 1.0 / r;
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::abs(x - std::round(x)) < 1e-12; }

struct SignedLogGamma {
    double value;
    int sign;
};

SignedLogGamma lgamma_signed(double x) {
    if (is_nonpositive_integer(x)) throw ParameterError("Gamma function pole at " + std::to_string(x));
    int sign = 1;
    const double v = boost::math::lgamma(x, &sign);
    return {v, sign};
}

}  // namespace

std::string to_string(KernelFamily f) {
    switch (f) {
    case KernelFamily::szego_disk: return "szego-disk";
    case KernelFamily::hardy_ball: return "hardy-ball";
    case KernelFamily::bergman_ball: return "bergman-ball";
    case KernelFamily::hardy_polydisc: return "hardy-polydisc";
    case KernelFamily::bergman_polydisc: return "bergman-polydisc";
    case KernelFamily::besov_sobolev_disk: return "besov-sobolev-disk";
    }
    return "unknown";
}

KernelFamily kernel_family_from_string(const std::string& name) {
    for (auto f : all_kernel_families())
        if (to_string(f) == name) return f;
    throw ParameterError("unknown kernel family '" + name + "'");
}

const std::vector<KernelFamily>& all_kernel_families() {
    static const std::vector<KernelFamily> all{KernelFamily::szego_disk,     KernelFamily::hardy_ball,
                                               KernelFamily::bergman_ball,   KernelFamily::hardy_polydisc,
                                               KernelFamily::bergman_polydisc, KernelFamily::besov_sobolev_disk};
    return all;
}

KernelSpec KernelSpec::of(KernelFamily f, int n) {
    KernelSpec s;
    s.family = f;
    s.n = n;
    return s;
}

KernelSpec KernelSpec::besov(double sigma, double p, double alpha, int trunc) {
    KernelSpec s;
    s.family = KernelFamily::besov_sobolev_disk;
    s.sigma = sigma;
    s.p = p;
    s.alpha = alpha;
    s.trunc = trunc;
    return s;
}

void KernelSpec::validate() const {
    if (n < 1) throw ParameterError("kernel dimension must be positive");
    switch (family) {
    case KernelFamily::szego_disk:
        if (n != 1) throw ParameterError("szego-disk requires n = 1");
        break;
    case KernelFamily::besov_sobolev_disk:
        if (n != 1) throw ParameterError("besov-sobolev-disk requires n = 1");
        if (!(sigma > 0.0)) throw ParameterError("besov kernel requires sigma > 0");
        if (!(p > 1.0) || !std::isfinite(p)) throw ParameterError("besov kernel requires 1 < p < inf");
        if (!(alpha > -1.0)) throw ParameterError("besov kernel requires alpha > -1");
        if (trunc < 0) throw ParameterError("besov truncation degree must be nonnegative");
        break;
    default: break;
    }
}

DomainSpec KernelSpec::domain() const {
    switch (family) {
    case KernelFamily::szego_disk:
    case KernelFamily::besov_sobolev_disk: return {DomainKind::disk, 1};
    case KernelFamily::hardy_ball:
    case KernelFamily::bergman_ball: return {n == 1 ? DomainKind::disk : DomainKind::ball, n};
    case KernelFamily::hardy_polydisc:
    case KernelFamily::bergman_polydisc: return {n == 1 ? DomainKind::disk : DomainKind::polydisc, n};
    }
    return {};
}

Kernel::Kernel(KernelSpec spec) : spec_(spec) {
    spec_.validate();
    if (spec_.family == KernelFamily::besov_sobolev_disk) {
        const auto s = besov_kernel_coeffs(spec_.sigma, spec_.alpha, spec_.p, spec_.trunc);
        besov_.reserve(s.size());
        for (const auto& c : s.coeffs) besov_.push_back(c.real());
    }
}

cplx Kernel::eval_unchecked(const Point& x, const Point& y) const {
    switch (spec_.family) {
    case KernelFamily::szego_disk: return 1.0 / (1.0 - x(0) * std::conj(y(0)));
    case KernelFamily::hardy_ball: return ipow_inv(1.0 - dot(x, y), spec_.n);
    case KernelFamily::bergman_ball: return ipow_inv(1.0 - dot(x, y), spec_.n + 1);
    case KernelFamily::hardy_polydisc:
    case KernelFamily::bergman_polydisc: {
        const int e = spec_.family == KernelFamily::hardy_polydisc ? 1 : 2;
        cplx r = 1.0;
        for (Eigen::Index j = 0; j < x.size(); ++j) r *= ipow_inv(1.0 - x(j) * std::conj(y(j)), e);
        return r;
    }
    case KernelFamily::besov_sobolev_disk: {
        const cplx w = x(0) * std::conj(y(0));
        cplx acc = 0.0;
        for (auto it = besov_.rbegin(); it != besov_.rend(); ++it) acc = acc * w + *it;
        return acc;
    }
    }
    return 0.0;
}

cplx Kernel::operator()(const Point& x, const Point& y) const {
    const auto d = domain();
    d.require_inside(x);
    d.require_inside(y);
    return eval_unchecked(x, y);
}

cplx Kernel::normalized(const Point& a, const Point& y) const {
    const auto d = domain();
    d.require_inside(a);
    d.require_inside(y);
    return eval_unchecked(y, a) / std::sqrt(diagonal(a));
}

double Kernel::distance(const Point& x, const Point& y) const {
    const cplx kxy = (*this)(x, y);
    const double ratio = std::norm(kxy) / (diagonal(x) * diagonal(y));
    return std::sqrt(std::clamp(1.0 - ratio, 0.0, 1.0));
}

cplx eval_kernel(const KernelSpec& spec, const Point& x, const Point& y) { return Kernel(spec)(x, y); }

cplx eval_normalized_kernel(const KernelSpec& spec, const Point& a, const Point& y) {
    return Kernel(spec).normalized(a, y);
}

double kernel_distance(const KernelSpec& spec, const Point& x, const Point& y) { return Kernel(spec).distance(x, y); }

double radial_multiplier(double gamma, double t, int n, int k) {
    if (k < 0) throw ParameterError("coefficient index must be nonnegative");
    const double b = n + 1.0 + gamma;
    if (is_nonpositive_integer(b - 1.0) && b - 1.0 < 0.0)
        throw ParameterError("radial operator undefined: n + gamma is a negative integer");
    if (is_nonpositive_integer(b + t - 1.0) && b + t - 1.0 < 0.0)
        throw ParameterError("radial operator undefined: n + gamma + t is a negative integer");
    if (t == 0.0) return 1.0;
    const auto g1 = lgamma_signed(b);
    const auto g2 = lgamma_signed(b + k + t);
    const auto g3 = lgamma_signed(b + t);
    const auto g4 = lgamma_signed(b + k);
    const int sign = g1.sign * g2.sign * g3.sign * g4.sign;
    return sign * std::exp(g1.value + g2.value - g3.value - g4.value);
}

PowerSeries1D radial_coeff_transform(double gamma, double t, int n, const PowerSeries1D& s, bool inverse) {
    if (n < 1) throw ParameterError("dimension must be positive");
    PowerSeries1D out = s;
    for (std::size_t k = 0; k < out.coeffs.size(); ++k) {
        const double m = radial_multiplier(gamma, t, n, static_cast<int>(k));
        if (inverse) {
            if (m == 0.0) throw ParameterError("radial operator is not invertible at these parameters");
            out.coeffs[k] /= m;
        } else {
            out.coeffs[k] *= m;
        }
    }
    return out;
}

PowerSeries1D besov_kernel_coeffs(double sigma, double alpha, double p, int trunc) {
    if (!(sigma >= 0.0)) throw ParameterError("sigma must be nonnegative");
    if (!(p > 1.0) || !std::isfinite(p)) throw ParameterError("p must satisfy 1 < p < inf");
    if (!(alpha > -1.0)) throw ParameterError("alpha must exceed -1");
    if (trunc < 0) throw ParameterError("truncation degree must be nonnegative");
    const double pp = p / (p - 1.0);
    const double A = 2.0 + alpha;
    const double t1 = A / p - sigma;
    const double t2 = A / pp - sigma;
    // Weighted Bergman kernel (1 - w z)^{-(2 + alpha)}: coefficients (A)_k / k!.
    std::vector<cplx> c(static_cast<std::size_t>(trunc) + 1);
    double ck = 1.0;
    for (int k = 0; k <= trunc; ++k) {
        c[static_cast<std::size_t>(k)] = ck;
        ck *= (A + k) / (k + 1.0);
    }
    PowerSeries1D K(std::move(c));
    K = radial_coeff_transform(alpha - t1, t1, 1, K, true);
    K = radial_coeff_transform(alpha - t2, t2, 1, K, true);
    return K;
}

cplx approx_normalized_besov_kernel(double sigma, const Point& a, const Point& z) {
    const double ra = 1.0 - a.squaredNorm();
    return std::pow(ra, sigma) * std::pow(1.0 - dot(z, a), -2.0 * sigma);
}

}  // namespace coronakit
