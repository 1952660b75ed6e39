#include "coronakit/dbar.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <memory>
#include <sstream>

#include <boost/math/special_functions/zeta.hpp>

#include "coronakit/parallel.hpp"
#include "coronakit/quadrature.hpp"

namespace coronakit {

PolarMesh PolarMesh::make(int radial, int angular) {
    if (radial < 2 || angular < 4) throw ParameterError("polar mesh is too coarse");
    PolarMesh m;
    const auto q = gauss_legendre(radial, 0.0, 1.0);
    m.radii = q.nodes;
    m.radial_weights = q.weights;
    m.angular = angular;
    return m;
}

GridField GridField::sample(const PolarMesh& mesh, const std::function<cplx(cplx)>& fn) {
    GridField g{mesh, CMatrix(mesh.radial(), mesh.angular)};
    parallel_for(static_cast<std::size_t>(mesh.radial()), [&](std::size_t i) {
        for (int j = 0; j < mesh.angular; ++j)
            g.values(static_cast<Eigen::Index>(i), j) = fn(mesh.node(static_cast<int>(i), j));
    });
    return g;
}

std::string GridField::to_csv() const {
    std::ostringstream os;
    os << std::setprecision(17) << "r,t,re,im\n";
    for (int i = 0; i < mesh.radial(); ++i)
        for (int j = 0; j < mesh.angular; ++j)
            os << mesh.radii[static_cast<std::size_t>(i)] << ',' << mesh.angle(j) << ',' << values(i, j).real() << ','
               << values(i, j).imag() << '\n';
    return os.str();
}

CauchyPompeiuSolver::CauchyPompeiuSolver(const GridField& g, int sub_nodes) : radii_(g.mesh.radii) {
    const int R = g.mesh.radial(), T = g.mesh.angular;
    if (g.values.rows() != R || g.values.cols() != T) throw ParameterError("field does not match its mesh");
    if (!g.values.allFinite()) throw NumericalError("field has non-finite values");
    bary_.resize(radii_.size());
    for (int i = 0; i < R; ++i) {
        const double x = 2.0 * radii_[static_cast<std::size_t>(i)] - 1.0;
        const double w = 2.0 * g.mesh.radial_weights[static_cast<std::size_t>(i)];
        bary_[static_cast<std::size_t>(i)] = (i % 2 ? -1.0 : 1.0) * std::sqrt((1.0 - x * x) * w);
    }
    modes_.resize(static_cast<std::size_t>(T));
    for (int k = 0; k < T; ++k) modes_[static_cast<std::size_t>(k)] = k < T / 2 ? k : k - T;
    coeffs_.resize(R, T);
    for (int i = 0; i < R; ++i) {
        std::vector<cplx> row(static_cast<std::size_t>(T));
        for (int j = 0; j < T; ++j) row[static_cast<std::size_t>(j)] = g.values(i, j);
        const auto c = fft_coefficients(row);
        for (int k = 0; k < T; ++k) coeffs_(i, k) = c[static_cast<std::size_t>(k)];
    }
    const auto q = gauss_legendre(sub_nodes, 0.0, 1.0);
    sub_nodes_ = q.nodes;
    sub_weights_ = q.weights;
}

RVector CauchyPompeiuSolver::interpolation_row(double rho) const {
    const auto R = static_cast<Eigen::Index>(radii_.size());
    RVector L = RVector::Zero(R);
    double denom = 0.0;
    for (Eigen::Index i = 0; i < R; ++i) {
        const double d = rho - radii_[static_cast<std::size_t>(i)];
        if (d == 0.0) {
            L.setZero();
            L(i) = 1.0;
            return L;
        }
        L(i) = bary_[static_cast<std::size_t>(i)] / d;
        denom += L(i);
    }
    return L / denom;
}

CVector CauchyPompeiuSolver::amplitudes(double r) const {
    const auto T = static_cast<Eigen::Index>(modes_.size());
    const auto Q = static_cast<Eigen::Index>(sub_nodes_.size());
    const auto R = static_cast<Eigen::Index>(radii_.size());
    CVector a = CVector::Zero(T);
    auto accumulate = [&](double lo, double hi, bool inner) {
        if (hi <= lo) return;
        RMatrix L(Q, R);
        std::vector<double> rho(static_cast<std::size_t>(Q)), wt(static_cast<std::size_t>(Q));
        for (Eigen::Index q = 0; q < Q; ++q) {
            rho[static_cast<std::size_t>(q)] = lo + (hi - lo) * sub_nodes_[static_cast<std::size_t>(q)];
            wt[static_cast<std::size_t>(q)] = (hi - lo) * sub_weights_[static_cast<std::size_t>(q)];
            L.row(q) = interpolation_row(rho[static_cast<std::size_t>(q)]).transpose();
        }
        const CMatrix Gs = L.cast<cplx>() * coeffs_;
        for (Eigen::Index k = 0; k < T; ++k) {
            const int m = modes_[static_cast<std::size_t>(k)];
            if (inner && m > 0) continue;
            if (!inner && m < 1) continue;
            cplx s = 0.0;
            for (Eigen::Index q = 0; q < Q; ++q) {
                const double rq = rho[static_cast<std::size_t>(q)];
                const double factor = inner ? std::pow(rq / r, 1 - m) : -std::pow(r / rq, m - 1);
                s += wt[static_cast<std::size_t>(q)] * factor * Gs(q, k);
            }
            a(k) += 2.0 * s;
        }
    };
    if (r > 0.0) accumulate(0.0, r, true);
    if (r < 1.0) accumulate(r, 1.0, false);
    return a;
}

cplx CauchyPompeiuSolver::operator()(cplx z) const {
    const double r = std::abs(z);
    if (r > 1.0 + 1e-14) throw DomainError("Cauchy-Pompeiu evaluation point lies outside the closed disk");
    const CVector a = amplitudes(std::min(r, 1.0));
    const double t = r == 0.0 ? 0.0 : std::arg(z);
    cplx u = 0.0;
    for (std::size_t k = 0; k < modes_.size(); ++k)
        u += a(static_cast<Eigen::Index>(k)) * std::polar(1.0, (modes_[k] - 1) * t);
    return u;
}

std::vector<cplx> CauchyPompeiuSolver::evaluate(const std::vector<cplx>& zs) const {
    std::map<double, std::vector<std::size_t>> by_radius;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        const double r = std::abs(zs[i]);
        if (r > 1.0 + 1e-14) throw DomainError("Cauchy-Pompeiu evaluation point lies outside the closed disk");
        by_radius[std::min(r, 1.0)].push_back(i);
    }
    std::vector<std::pair<double, std::vector<std::size_t>>> groups(by_radius.begin(), by_radius.end());
    std::vector<cplx> out(zs.size());
    parallel_for(groups.size(), [&](std::size_t gi) {
        const double r = groups[gi].first;
        const CVector a = amplitudes(r);
        for (std::size_t idx : groups[gi].second) {
            const double t = r == 0.0 ? 0.0 : std::arg(zs[idx]);
            cplx u = 0.0;
            for (std::size_t k = 0; k < modes_.size(); ++k)
                u += a(static_cast<Eigen::Index>(k)) * std::polar(1.0, (modes_[k] - 1) * t);
            out[idx] = u;
        }
    });
    return out;
}

cplx cauchy_pompeiu_solve(const GridField& g, cplx z) { return CauchyPompeiuSolver(g)(z); }

cplx pompeiu_point_masses(const DiscreteMeasure& mu, cplx z) {
    cplx s = 0.0;
    for (std::size_t k = 0; k < mu.size(); ++k) {
        if (mu.weights[k] == 0.0) continue;
        const cplx d = z - mu.points[k](0);
        if (d == 0.0) throw DomainError("evaluation point coincides with a support point");
        s += mu.weights[k] / d;
    }
    return s / pi;
}

cplx dbar_fd(const std::function<cplx(cplx)>& f, cplx z, double h) {
    const cplx i(0.0, 1.0);
    const cplx dx = (f(z + h) - f(z - h)) / (2.0 * h);
    const cplx dy = (f(z + i * h) - f(z - i * h)) / (2.0 * h);
    return 0.5 * (dx + i * dy);
}

std::vector<cplx> disk_lattice(double spacing, double radius) {
    if (!(spacing > 0.0)) throw ParameterError("lattice spacing must be positive");
    std::vector<cplx> out;
    const int K = static_cast<int>(std::floor(radius / spacing + 1e-9));
    for (int a = -K; a <= K; ++a)
        for (int b = -K; b <= K; ++b) {
            const cplx z(a * spacing, b * spacing);
            if (std::abs(z) <= radius + 1e-12) out.push_back(z);
        }
    return out;
}

double h2_carleson_norm(const DiscreteMeasure& mu) { return box_norm(mu, 0.5, 2.0, 1).value; }

JonesData JonesData::from_measure(const DiscreteMeasure& mu) {
    mu.validate();
    JonesData d;
    d.mu = mu;
    d.carleson_norm = h2_carleson_norm(mu);
    if (d.carleson_norm > 0.0)
        d.nu = mu.scaled(1.0 / (d.carleson_norm * d.carleson_norm));
    else
        d.nu = mu;
    return d;
}

cplx jones_exp_factor(const JonesData& data, cplx z, cplx zeta) {
    const double rz = std::abs(zeta);
    cplx s = 0.0;
    for (std::size_t i = 0; i < data.nu.size(); ++i) {
        const double w = data.nu.weights[i];
        if (w == 0.0) continue;
        const cplx om = data.nu.points[i](0);
        if (std::abs(om) < rz) continue;
        const cplx oz = std::conj(om) * z, oq = std::conj(om) * zeta;
        s += w * (-(1.0 + oz) / (1.0 - oz) + (1.0 + oq) / (1.0 - oq));
    }
    return std::exp(s);
}

cplx jones_kernel(const JonesData& data, cplx z, cplx zeta) {
    if (z == zeta) throw DomainError("Jones kernel is singular at z = zeta");
    if (std::abs(z) > 1.0 + 1e-14 || !(std::abs(zeta) < 1.0)) throw DomainError("Jones kernel arguments out of range");
    const cplx i(0.0, 1.0);
    const cplx base = (2.0 * i / pi) * (1.0 - std::norm(zeta)) / ((z - zeta) * (1.0 - std::conj(zeta) * z));
    return base * jones_exp_factor(data, z, zeta);
}

namespace {

cplx jones_value(const JonesData& data, cplx z) {
    cplx s = 0.0;
    for (std::size_t k = 0; k < data.mu.size(); ++k)
        if (data.mu.weights[k] != 0.0) s += data.mu.weights[k] * jones_kernel(data, z, data.mu.points[k](0));
    return s / cplx(0.0, 2.0);
}

}  // namespace

CVector jones_solve(const JonesData& data, const std::vector<cplx>& eval_points) {
    CVector u(static_cast<Eigen::Index>(eval_points.size()));
    parallel_for(eval_points.size(),
                 [&](std::size_t e) { u(static_cast<Eigen::Index>(e)) = jones_value(data, eval_points[e]); });
    return u;
}

JonesReport jones_check(const JonesData& data, double spacing, int boundary_nodes, double exclusion, double fd_step) {
    JonesReport r;
    r.carleson_norm = data.carleson_norm;
    r.data_mass = data.mu.total_mass();
    std::vector<cplx> boundary(static_cast<std::size_t>(boundary_nodes));
    for (int j = 0; j < boundary_nodes; ++j) boundary[static_cast<std::size_t>(j)] = std::polar(1.0, 2.0 * pi * j / boundary_nodes);
    const CVector ub = jones_solve(data, boundary);
    r.boundary_sup = ub.size() ? ub.cwiseAbs().maxCoeff() : 0.0;

    std::vector<cplx> pts;
    for (cplx z : disk_lattice(spacing, 1.0 - spacing)) {
        bool near = false;
        for (std::size_t k = 0; k < data.mu.size(); ++k)
            if (data.mu.weights[k] != 0.0 && std::abs(z - data.mu.points[k](0)) < exclusion) near = true;
        if (!near) pts.push_back(z);
    }
    r.checked_points = pts.size();
    auto diff = [&](cplx z) { return jones_value(data, z) - pompeiu_point_masses(data.mu, z); };
    std::vector<double> res(pts.size(), 0.0);
    parallel_for(pts.size(), [&](std::size_t i) { res[i] = std::abs(dbar_fd(diff, pts[i], fd_step)); });
    r.fd_residual = res.empty() ? 0.0 : *std::max_element(res.begin(), res.end());
    return r;
}

SobolevReport boundary_sobolev_norm(const std::vector<cplx>& samples, double sigma, double p) {
    if (!(p > 1.0)) throw ParameterError("p must exceed 1");
    if (!(sigma > 0.0) || !(sigma < 1.0 / p)) throw ParameterError("sigma must satisfy 0 < sigma < 1/p");
    const std::size_t n = samples.size();
    if (n < 16 || n % 2) throw ParameterError("boundary samples must have even length >= 16");
    const double q = p - 2.0 + p * sigma;
    const double kernel_exp = 2.0 - p * sigma;

    auto difference_integral = [&](std::size_t stride) {
        const std::size_t m = n / stride;
        const double dt = 2.0 * pi / static_cast<double>(m);
        std::vector<double> denom(m);
        for (std::size_t s = 1; s < m; ++s) denom[s] = std::pow(std::abs(2.0 * std::sin(0.5 * s * dt)), -kernel_exp);
        double total = 0.0, slope = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const cplx fj = samples[j * stride];
            for (std::size_t s = 1; s < m; ++s)
                total += std::pow(std::abs(samples[((j + s) % m) * stride] - fj), p) * denom[s];
            const cplx der = (samples[((j + 1) % m) * stride] - samples[((j + m - 1) % m) * stride]) / (2.0 * dt);
            slope += std::pow(std::abs(der), p);
        }
        // Skipped diagonal cell: the local integrand behaves like |f'(t)|^p |s|^q.
        const double correction = -2.0 * boost::math::zeta(-q) * std::pow(dt, 1.0 + q) * slope * dt;
        return total * dt * dt + correction;
    };

    SobolevReport r;
    const double dt = 2.0 * pi / static_cast<double>(n);
    for (const auto& f : samples) r.lp_term += std::pow(std::abs(f), p) * dt;
    r.difference_integral = difference_integral(1);
    r.difference_integral_half = difference_integral(2);
    const double scale = std::max(std::abs(r.difference_integral), 1e-300);
    r.converged = std::abs(r.difference_integral - r.difference_integral_half) <= 1e-2 * scale ||
                  std::abs(r.difference_integral) < 1e-14;
    r.value = std::pow(r.lp_term + r.difference_integral, 1.0 / p);

    // Poisson-gradient form: int |grad P f|^p (1 - |z|^2)^{p(sigma+1)-2} dA.
    const auto c = fft_coefficients(samples);
    const auto half = static_cast<long>(n / 2);
    const auto rq = gauss_jacobi_unit(static_cast<int>(std::clamp<long>(half / 2, 64, 512)), p * (sigma + 1.0) - 2.0);
    double poisson = 0.0;
    for (std::size_t i = 0; i < rq.size(); ++i) {
        const double r_ = std::sqrt(rq.nodes[i]);
        std::vector<cplx> dz(n, 0.0), dzb(n, 0.0);
        double rp = 1.0;
        for (long m = 1; m < half; ++m) {
            dz[static_cast<std::size_t>(m - 1)] = static_cast<double>(m) * c[static_cast<std::size_t>(m)] * rp;
            dzb[static_cast<std::size_t>((static_cast<long>(n) - (m - 1)) % static_cast<long>(n))] =
                static_cast<double>(m) * c[n - static_cast<std::size_t>(m)] * rp;
            rp *= r_;
        }
        const auto a = fft_synthesize(dz);
        const auto b = fft_synthesize(dzb);
        double ring = 0.0;
        for (std::size_t j = 0; j < n; ++j) ring += std::pow(2.0 * (std::norm(a[j]) + std::norm(b[j])), 0.5 * p);
        // dA = (1/2) ds dt, and the trapezoid in t carries 2 pi / n.
        poisson += rq.weights[i] * 0.5 * ring * (2.0 * pi / static_cast<double>(n));
    }
    r.poisson_integral = poisson;
    r.form_ratio = poisson > 0.0 ? r.difference_integral / poisson : 0.0;
    return r;
}

double certify_lower_bound(const std::vector<PowerSeries1D>& phi, double spacing, int circle_nodes) {
    if (phi.empty()) throw ParameterError("need at least one function");
    auto lower = [&](cplx z) {
        double s = 0.0;
        for (const auto& f : phi) s += std::norm(f(z));
        return std::sqrt(s);
    };
    double c = std::numeric_limits<double>::infinity();
    for (cplx z : disk_lattice(spacing, 1.0)) c = std::min(c, lower(z));
    for (int j = 0; j < circle_nodes; ++j) c = std::min(c, lower(std::polar(1.0, 2.0 * pi * j / circle_nodes)));
    return c;
}

namespace {

double min_modulus(const PowerSeries1D& f, double spacing, int circle_nodes) {
    double c = std::numeric_limits<double>::infinity();
    for (cplx z : disk_lattice(spacing, 1.0)) c = std::min(c, std::abs(f(z)));
    for (int j = 0; j < circle_nodes; ++j) c = std::min(c, std::abs(f(std::polar(1.0, 2.0 * pi * j / circle_nodes))));
    return c;
}

struct SeriesProjection {
    PowerSeries1D series;
    double negative_energy = 0.0;
};

SeriesProjection analytic_projection(const std::vector<cplx>& boundary) {
    const auto c = fft_coefficients(boundary);
    const std::size_t n = c.size();
    SeriesProjection out;
    out.series.coeffs.assign(c.begin(), c.begin() + static_cast<long>(n / 2));
    for (std::size_t k = n / 2; k < n; ++k) out.negative_energy += std::norm(c[k]);
    return out;
}

}  // namespace

CoronaReport koszul_corona_disk(const std::vector<PowerSeries1D>& phi, double c, const KoszulOptions& opt) {
    const std::size_t N = phi.size();
    if (N == 0) throw ParameterError("need at least one function");
    CoronaReport rep;
    rep.c_certified = certify_lower_bound(phi, opt.certify_spacing);
    if (!(rep.c_certified > 0.0)) throw ParameterError("the functions have a common zero on the grid");
    if (c > rep.c_certified * (1.0 + 1e-12))
        throw ParameterError("lower bound c = " + std::to_string(c) + " is violated on the grid (min " +
                             std::to_string(rep.c_certified) + ")");
    const double c_use = c > 0.0 ? c : rep.c_certified;

    std::vector<cplx> boundary(static_cast<std::size_t>(opt.boundary_nodes));
    for (int j = 0; j < opt.boundary_nodes; ++j)
        boundary[static_cast<std::size_t>(j)] = std::polar(1.0, 2.0 * pi * j / opt.boundary_nodes);
    const auto fd_points = disk_lattice(opt.fd_spacing, opt.fd_radius);

    std::function<cplx(std::size_t, cplx)> direct;
    std::vector<std::vector<cplx>> fb(N, std::vector<cplx>(boundary.size(), 0.0));

    for (std::size_t j = 0; j < N && !rep.single_inverse; ++j)
        if (min_modulus(phi[j], opt.certify_spacing, 2048) >= c_use * (1.0 - 1e-12)) {
            rep.single_inverse = true;
            rep.inverse_index = static_cast<long>(j);
        }

    std::vector<std::vector<std::unique_ptr<CauchyPompeiuSolver>>> solvers(N);
    std::vector<PowerSeries1D> dphi(N);
    for (std::size_t k = 0; k < N; ++k) dphi[k] = phi[k].derivative(1);
    auto psi = [&](std::size_t j, cplx z) {
        double S = 0.0;
        for (const auto& f : phi) S += std::norm(f(z));
        return std::conj(phi[j](z)) / S;
    };

    if (rep.single_inverse) {
        const auto j0 = static_cast<std::size_t>(rep.inverse_index);
        direct = [&, j0](std::size_t j, cplx z) { return j == j0 ? 1.0 / phi[j](z) : cplx(0.0); };
        for (std::size_t b = 0; b < boundary.size(); ++b) fb[j0][b] = 1.0 / phi[j0](boundary[b]);
    } else {
        const PolarMesh mesh = PolarMesh::make(opt.radial_nodes, opt.angular_nodes);
        auto dbar_psi = [&](std::size_t j, cplx z) {
            double S = 0.0;
            cplx T = 0.0;
            for (std::size_t k = 0; k < N; ++k) {
                const cplx v = phi[k](z);
                S += std::norm(v);
                T += v * std::conj(dphi[k](z));
            }
            return std::conj(dphi[j](z)) / S - std::conj(phi[j](z)) * T / (S * S);
        };
        for (std::size_t j = 0; j < N; ++j) solvers[j].resize(N);
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t k = j + 1; k < N; ++k) {
                const GridField G = GridField::sample(mesh, [&](cplx z) {
                    return psi(j, z) * dbar_psi(k, z) - psi(k, z) * dbar_psi(j, z);
                });
                solvers[j][k] = std::make_unique<CauchyPompeiuSolver>(G);
                const GridField Gt = GridField::sample(mesh, [&](cplx z) {
                    return psi(k, z) * dbar_psi(j, z) - psi(j, z) * dbar_psi(k, z);
                });
                solvers[k][j] = std::make_unique<CauchyPompeiuSolver>(Gt);
            }
        auto b_values = [&](std::size_t j, std::size_t k, const std::vector<cplx>& zs) {
            return solvers[j][k]->evaluate(zs);
        };
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t k = j + 1; k < N; ++k) {
                const auto bjk = b_values(j, k, boundary);
                const auto bkj = b_values(k, j, boundary);
                for (std::size_t b = 0; b < boundary.size(); ++b)
                    rep.antisymmetry_error = std::max(rep.antisymmetry_error, std::abs(bjk[b] + bkj[b]));
            }
        auto f_values = [&](const std::vector<cplx>& zs) {
            std::vector<std::vector<cplx>> out(N, std::vector<cplx>(zs.size()));
            for (std::size_t j = 0; j < N; ++j)
                for (std::size_t i = 0; i < zs.size(); ++i) out[j][i] = psi(j, zs[i]);
            for (std::size_t j = 0; j < N; ++j)
                for (std::size_t k = j + 1; k < N; ++k) {
                    const auto bjk = b_values(j, k, zs);
                    for (std::size_t i = 0; i < zs.size(); ++i) {
                        out[j][i] += bjk[i] * phi[k](zs[i]);
                        out[k][i] -= bjk[i] * phi[j](zs[i]);
                    }
                }
            return out;
        };
        fb = f_values(boundary);

        // Direct values on the FD lattice and its four shifted copies.
        std::vector<cplx> probe;
        const double h = opt.fd_step;
        const cplx I(0.0, 1.0);
        for (cplx z : fd_points)
            for (cplx s : {cplx(0.0), cplx(h), cplx(-h), I * h, -I * h}) probe.push_back(z + s);
        const auto fv = f_values(probe);
        for (std::size_t p = 0; p < fd_points.size(); ++p) {
            cplx bez = -1.0;
            for (std::size_t j = 0; j < N; ++j) {
                const auto* v = &fv[j][5 * p];
                bez += phi[j](fd_points[p]) * v[0];
                const cplx dx = (v[1] - v[2]) / (2.0 * h), dy = (v[3] - v[4]) / (2.0 * h);
                rep.dbar_residual = std::max(rep.dbar_residual, std::abs(0.5 * (dx + I * dy)));
            }
            rep.residual_direct = std::max(rep.residual_direct, std::abs(bez));
        }
    }

    rep.f.resize(N);
    for (std::size_t j = 0; j < N; ++j) {
        auto proj = analytic_projection(fb[j]);
        rep.negative_frequency_energy += proj.negative_energy;
        rep.f[j] = std::move(proj.series);
    }
    if (rep.single_inverse) {
        for (cplx z : fd_points) {
            cplx bez = -1.0;
            for (std::size_t j = 0; j < N; ++j) bez += phi[j](z) * direct(j, z);
            rep.residual_direct = std::max(rep.residual_direct, std::abs(bez));
        }
    }

    auto lattice = disk_lattice(opt.lattice_spacing, 1.0);
    rep.sup_f.assign(N, 0.0);
    for (cplx z : lattice) {
        cplx bez = -1.0;
        for (std::size_t j = 0; j < N; ++j) {
            const cplx v = rep.f[j](z);
            bez += phi[j](z) * v;
            rep.sup_f[j] = std::max(rep.sup_f[j], std::abs(v));
        }
        rep.residual = std::max(rep.residual, std::abs(bez));
    }
    for (cplx z : boundary)
        for (std::size_t j = 0; j < N; ++j) rep.sup_f[j] = std::max(rep.sup_f[j], std::abs(rep.f[j](z)));
    for (std::size_t j = 0; j < N; ++j)
        rep.kps_norms.push_back(kps_norm_disk(rep.f[j], opt.kps_sigma, opt.kps_p, opt.kps_m, opt.kps_mesh).value);
    return rep;
}

}  // namespace coronakit
