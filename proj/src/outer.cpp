#include "coronakit/outer.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "coronakit/quadrature.hpp"

namespace coronakit {

namespace {

double szego_normalized_sq(cplx a, cplx z) { return (1.0 - std::norm(a)) / std::norm(1.0 - std::conj(a) * z); }

}  // namespace

double outer_boundary_weight(const ShiftConfig& shift, double t) {
    const cplx e = std::polar(1.0, t);
    double w = shift.theta[0];
    for (std::size_t m = 0; m < shift.base_points.size(); ++m)
        if (shift.theta[m + 1] != 0.0) w += shift.theta[m + 1] * szego_normalized_sq(shift.base_points[m](0), e);
    return w;
}

cplx OuterFunction::operator()(cplx z) const {
    if (std::abs(z) > 1.0) throw DomainError("outer function evaluated outside the closed disk");
    cplx acc = 0.0;
    for (auto it = log_coeffs.rbegin(); it != log_coeffs.rend(); ++it) acc = acc * z + *it;
    return std::exp(acc);
}

std::vector<cplx> OuterFunction::boundary_values() const {
    std::vector<cplx> c(static_cast<std::size_t>(nodes), 0.0);
    for (std::size_t m = 0; m < log_coeffs.size() && m < c.size(); ++m) c[m] = log_coeffs[m];
    auto v = fft_synthesize(c);
    for (auto& x : v) x = std::exp(x);
    return v;
}

double OuterFunction::h2_norm() const {
    const auto v = boundary_values();
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s / static_cast<double>(v.size()));
}

OuterFunction construct_outer(const ShiftConfig& shift, int nodes) {
    shift.validate(DomainSpec{DomainKind::disk, 1});
    if (nodes < 256 || !is_power_of_two(nodes)) throw ParameterError("nodes must be a power of two >= 256");
    OuterFunction F;
    F.nodes = nodes;
    const auto t = uniform_angles(nodes);
    F.weight.resize(t.size());
    std::vector<cplx> half_log(t.size());
    for (std::size_t j = 0; j < t.size(); ++j) {
        F.weight[j] = outer_boundary_weight(shift, t[j]);
        if (!(F.weight[j] > 0.0)) throw NumericalError("boundary weight is not positive");
        half_log[j] = 0.5 * std::log(F.weight[j]);
    }
    const auto c = fft_coefficients(half_log);
    const std::size_t half = static_cast<std::size_t>(nodes / 2);
    F.log_coeffs.assign(half, 0.0);
    F.log_coeffs[0] = c[0].real();
    for (std::size_t m = 1; m < half; ++m) F.log_coeffs[m] = 2.0 * c[m];
    return F;
}

OuterIdentityReport verify_outer_identity(const OuterFunction& F, const ShiftConfig& shift, int degree) {
    if (degree < 0) throw ParameterError("degree must be nonnegative");
    const auto fb = F.boundary_values();
    const auto t = uniform_angles(F.nodes);
    const auto n = static_cast<double>(F.nodes);
    OuterIdentityReport r;
    r.min_abs_boundary = std::numeric_limits<double>::infinity();
    std::vector<double> f2(fb.size()), w(fb.size());
    for (std::size_t j = 0; j < fb.size(); ++j) {
        f2[j] = std::norm(fb[j]);
        w[j] = outer_boundary_weight(shift, t[j]);
        r.boundary_rel_error = std::max(r.boundary_rel_error, std::abs(f2[j] - w[j]) / w[j]);
        r.min_abs_boundary = std::min(r.min_abs_boundary, std::abs(fb[j]));
        r.max_abs_boundary = std::max(r.max_abs_boundary, std::abs(fb[j]));
    }
    r.h2_norm = F.h2_norm();
    // Both sides depend on i - j only: <h z^i, h z^j> = mean |h|^2 e^{i(i-j)t}.
    for (int d = -degree; d <= degree; ++d) {
        cplx lhs = 0.0, rhs = 0.0;
        for (std::size_t j = 0; j < fb.size(); ++j) {
            const cplx e = std::polar(1.0, d * t[j]);
            lhs += f2[j] * e;
            rhs += w[j] * e;
        }
        const double disc = std::abs(lhs - rhs) / n;
        if (disc > r.max_discrepancy) {
            r.max_discrepancy = disc;
            r.worst_i = d > 0 ? d : 0;
            r.worst_j = d > 0 ? 0 : -d;
        }
    }
    return r;
}

std::string outer_profile_csv(const OuterFunction& F) {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "t,w,abs_F_sq,rel_error\n";
    const auto fb = F.boundary_values();
    const auto t = uniform_angles(F.nodes);
    for (std::size_t j = 0; j < fb.size(); ++j) {
        const double f2 = std::norm(fb[j]);
        os << t[j] << ',' << F.weight[j] << ',' << f2 << ',' << std::abs(f2 - F.weight[j]) / F.weight[j] << '\n';
    }
    return os.str();
}

}  // namespace coronakit
