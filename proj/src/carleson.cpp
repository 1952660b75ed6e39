#include "coronakit/carleson.hpp"

#include <algorithm>
#include <cmath>

#include "coronakit/kernels.hpp"
#include "coronakit/parallel.hpp"

namespace coronakit {

namespace {

double angular_distance(double a, double b) {
    double d = std::fmod(std::abs(a - b), 2.0 * pi);
    return std::min(d, 2.0 * pi - d);
}

int tower_height(double h) { return static_cast<int>(std::ceil(std::log2(2.0 / h))); }

}  // namespace

double DiscreteMeasure::total_mass() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
}

void DiscreteMeasure::validate() const {
    points.validate();
    if (weights.size() != points.size()) throw ParameterError("measure needs one weight per point");
    for (double w : weights)
        if (!(w >= 0.0) || !std::isfinite(w)) throw ParameterError("measure weights must be finite and nonnegative");
}

DiscreteMeasure DiscreteMeasure::scaled(double s) const {
    DiscreteMeasure m = *this;
    for (auto& w : m.weights) w *= s;
    return m;
}

DiscreteMeasure DiscreteMeasure::disk(const std::vector<cplx>& zs, const std::vector<double>& w) {
    DiscreteMeasure m{PointSet::disk(zs), w};
    m.validate();
    return m;
}

double CarlesonBox::arc_length() const { return std::min(2.0 * radius, 2.0 * pi); }

bool CarlesonBox::contains(cplx z) const {
    const double r = std::abs(z);
    if (1.0 - r > radius) return false;
    if (r == 0.0 || radius >= pi) return true;
    return angular_distance(std::arg(z), center) <= radius;
}

BoxNormReport box_norm(const DiscreteMeasure& mu, double sigma, double p, int n) {
    mu.validate();
    if (n != 1 || mu.points.domain.kind != DomainKind::disk)
        throw ParameterError("box norm is implemented for the disk only");
    if (!(p > 1.0)) throw ParameterError("p must exceed 1");
    BoxNormReport best;
    const std::size_t P = mu.size();
    std::vector<BoxNormReport> per(P);
    parallel_for(P, [&](std::size_t i) {
        if (mu.weights[i] == 0.0) return;
        const cplx z = mu.points[i](0);
        const double h = 1.0 - std::abs(z);
        const double c = std::abs(z) == 0.0 ? 0.0 : std::arg(z);
        const int J = tower_height(h);
        for (int j = 0; j <= J; ++j) {
            const CarlesonBox Q{c, std::ldexp(h, j)};
            double mass = 0.0;
            for (std::size_t k = 0; k < P; ++k)
                if (mu.weights[k] > 0.0 && Q.contains(mu.points[k](0))) mass += mu.weights[k];
            const double v = std::pow(mass, 1.0 / p) / std::pow(Q.arc_length(), sigma / n);
            if (v > per[i].value) per[i] = {v, Q, mass};
        }
    });
    for (const auto& r : per)
        if (r.value > best.value) best = r;
    return best;
}

BoxNormReport box_norm_polar_mesh(const std::vector<double>& radii, const RMatrix& W, double sigma, double p) {
    const auto R = static_cast<Eigen::Index>(radii.size());
    const Eigen::Index T = W.cols();
    if (W.rows() != R || T < 1) throw ParameterError("mesh weights do not match the radial nodes");
    for (std::size_t i = 1; i < radii.size(); ++i)
        if (!(radii[i] > radii[i - 1])) throw ParameterError("mesh radii must be ascending");
    // C(i, j) = sum over rows >= i and angular columns < j.
    RMatrix C = RMatrix::Zero(R + 1, T + 1);
    for (Eigen::Index i = R - 1; i >= 0; --i)
        for (Eigen::Index j = 0; j < T; ++j) C(i, j + 1) = C(i, j) + C(i + 1, j + 1) - C(i + 1, j) + W(i, j);
    const double dt = 2.0 * pi / static_cast<double>(T);
    auto box_mass = [&](Eigen::Index i0, Eigen::Index jc, double radius) {
        if (i0 >= R) return 0.0;
        const auto half = static_cast<Eigen::Index>(std::floor(radius / dt + 1e-12));
        if (2 * half + 1 >= T) return C(i0, T);
        auto prefix = [&](Eigen::Index j) { return C(i0, j); };
        const Eigen::Index lo = jc - half, hi = jc + half + 1;
        if (lo >= 0 && hi <= T) return prefix(hi) - prefix(lo);
        if (lo < 0) return prefix(hi) + (prefix(T) - prefix(T + lo));
        return (prefix(T) - prefix(lo)) + prefix(hi - T);
    };
    std::vector<BoxNormReport> per(static_cast<std::size_t>(R));
    parallel_for(static_cast<std::size_t>(R), [&](std::size_t ii) {
        const auto i = static_cast<Eigen::Index>(ii);
        const double h = 1.0 - radii[ii];
        const int J = tower_height(h);
        for (Eigen::Index j = 0; j < T; ++j) {
            if (W(i, j) <= 0.0) continue;
            for (int k = 0; k <= J; ++k) {
                const double radius = std::ldexp(h, k);
                // First row with 1 - r <= radius.
                const auto it = std::lower_bound(radii.begin(), radii.end(), 1.0 - radius - 1e-15);
                const auto i0 = static_cast<Eigen::Index>(it - radii.begin());
                const double mass = box_mass(i0, j, radius);
                const CarlesonBox Q{dt * static_cast<double>(j), radius};
                const double v = std::pow(std::max(mass, 0.0), 1.0 / p) / std::pow(Q.arc_length(), sigma);
                if (v > per[ii].value) per[ii] = {v, Q, mass};
            }
        }
    });
    BoxNormReport best;
    for (const auto& r : per)
        if (r.value > best.value) best = r;
    return best;
}

double testing_norm(const DiscreteMeasure& mu, double sigma, double p, const PointSet& probes) {
    mu.validate();
    probes.validate();
    if (!(probes.domain == mu.points.domain)) throw DomainError("probe domain does not match the measure");
    std::vector<double> vals(probes.size(), 0.0);
    parallel_for(probes.size(), [&](std::size_t q) {
        double s = 0.0;
        for (std::size_t i = 0; i < mu.size(); ++i)
            if (mu.weights[i] > 0.0)
                s += mu.weights[i] * std::pow(std::abs(approx_normalized_besov_kernel(sigma, probes[q], mu.points[i])), p);
        vals[q] = std::pow(s, 1.0 / p);
    });
    return vals.empty() ? 0.0 : *std::max_element(vals.begin(), vals.end());
}

PointSet default_probe_grid(const DiscreteMeasure& mu, int rings, int rays) {
    if (mu.points.domain.kind != DomainKind::disk) throw ParameterError("default probe grid is defined on the disk");
    std::vector<cplx> zs{0.0};
    for (std::size_t i = 0; i < mu.size(); ++i) zs.push_back(mu.points[i](0));
    for (int i = 1; i <= rings; ++i) {
        const double r = 1.0 - std::ldexp(1.0, -i);
        for (int j = 0; j < rays; ++j) zs.push_back(std::polar(r, 2.0 * pi * j / rays));
    }
    return PointSet::disk(zs);
}

}  // namespace coronakit
