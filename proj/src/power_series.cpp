#include "coronakit/power_series.hpp"

#include <cmath>

namespace coronakit {

PowerSeries1D PowerSeries1D::monomial(int k, cplx scale) {
    if (k < 0) throw ParameterError("monomial degree must be nonnegative");
    std::vector<cplx> c(static_cast<std::size_t>(k) + 1, 0.0);
    c.back() = scale;
    return PowerSeries1D(std::move(c));
}

cplx PowerSeries1D::operator()(cplx z) const {
    cplx acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

cplx PowerSeries1D::derivative_at(cplx z, int m) const {
    if (m < 0) throw ParameterError("derivative order must be nonnegative");
    const auto n = static_cast<int>(coeffs.size());
    cplx acc = 0.0;
    for (int k = n - 1; k >= m; --k) {
        double falling = 1.0;
        for (int j = 0; j < m; ++j) falling *= static_cast<double>(k - j);
        acc = acc * z + falling * coeffs[static_cast<std::size_t>(k)];
    }
    return acc;
}

PowerSeries1D PowerSeries1D::derivative(int m) const {
    if (m < 0) throw ParameterError("derivative order must be nonnegative");
    const auto n = static_cast<int>(coeffs.size());
    if (m >= n) return PowerSeries1D({0.0});
    std::vector<cplx> c(static_cast<std::size_t>(n - m));
    for (int k = m; k < n; ++k) {
        double falling = 1.0;
        for (int j = 0; j < m; ++j) falling *= static_cast<double>(k - j);
        c[static_cast<std::size_t>(k - m)] = falling * coeffs[static_cast<std::size_t>(k)];
    }
    return PowerSeries1D(std::move(c));
}

PowerSeries1D PowerSeries1D::operator*(const PowerSeries1D& other) const {
    if (coeffs.empty() || other.coeffs.empty()) return PowerSeries1D({0.0});
    std::vector<cplx> c(coeffs.size() + other.coeffs.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs.size(); ++j) c[i + j] += coeffs[i] * other.coeffs[j];
    return PowerSeries1D(std::move(c));
}

PowerSeries1D& PowerSeries1D::operator*=(cplx s) {
    for (auto& c : coeffs) c *= s;
    return *this;
}

PowerSeries1D PowerSeries1D::rotated(double phi) const {
    PowerSeries1D out = *this;
    for (std::size_t k = 0; k < out.coeffs.size(); ++k)
        out.coeffs[k] *= std::polar(1.0, phi * static_cast<double>(k));
    return out;
}

}  // namespace coronakit
