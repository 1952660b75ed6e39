#include "coronakit/imp.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "coronakit/parallel.hpp"

namespace coronakit {

namespace {

void require_disk(cplx z) {
    if (!(std::abs(z) < 1.0)) throw DomainError("slice point must lie in the open unit disk");
}

}  // namespace

void FalsifierConfig::validate() const {
    if (!(std::abs(alpha) < 1.0)) throw ParameterError("|alpha| must be < 1");
    if (n < 2) throw ParameterError("dimension must be at least 2");
    if (lambda_nodes < 512) throw ParameterError("lambda_nodes must be at least 512");
    if (polydisc && n != 2) throw ParameterError("polydisc mode is defined for n = 2");
    if (!(fd_step > 0.0)) throw ParameterError("finite-difference step must be positive");
    for (cplx z : grid) require_disk(z);
}

std::vector<cplx> FalsifierConfig::polar_grid(int rings, int rays, double radius) {
    if (rings < 2 || rays < 1) throw ParameterError("polar grid needs at least two rings and one ray");
    std::vector<cplx> g{0.0};
    for (int i = 1; i < rings; ++i) {
        const double r = radius * i / (rings - 1);
        for (int j = 0; j < rays; ++j) g.push_back(std::polar(r, 2.0 * pi * j / rays));
    }
    return g;
}

FalsifierConfig FalsifierConfig::standard(cplx alpha, int n) {
    FalsifierConfig c;
    c.alpha = alpha;
    c.n = n;
    c.grid = polar_grid(21, 21, 0.8);
    return c;
}

double slice_g(const FalsifierConfig& cfg, cplx z) {
    require_disk(z);
    const double c = std::pow(1.0 - std::norm(cfg.alpha), cfg.n);
    const int L = cfg.lambda_nodes;
    double s = 0.0;
    for (int j = 0; j < L; ++j) {
        const cplx w = std::polar(1.0, 2.0 * pi * j / L) * z;
        const double h2 = std::pow(std::norm(1.0 - cfg.alpha * w), -cfg.n);
        s += std::log1p(c * h2);
    }
    return s / L;
}

double slice_laplacian(const FalsifierConfig& cfg, cplx z) {
    require_disk(z);
    const double c = std::pow(1.0 - std::norm(cfg.alpha), cfg.n);
    const int L = cfg.lambda_nodes;
    double s = 0.0;
    for (int j = 0; j < L; ++j) {
        const cplx w = std::polar(1.0, 2.0 * pi * j / L) * z;
        const cplx d = 1.0 - cfg.alpha * w;
        const double Am1 = c * std::pow(std::norm(d), -cfg.n);
        const double A = 1.0 + Am1;
        s += std::norm(static_cast<double>(cfg.n) * cfg.alpha / d) * Am1 / (A * A);
    }
    return 4.0 * s / L;
}

double slice_laplacian_fd(const FalsifierConfig& cfg, cplx z) {
    const double h = cfg.fd_step;
    const cplx i(0.0, 1.0);
    return (slice_g(cfg, z + h) + slice_g(cfg, z - h) + slice_g(cfg, z + i * h) + slice_g(cfg, z - i * h) -
            4.0 * slice_g(cfg, z)) /
           (h * h);
}

FalsifierReport falsify_report(const FalsifierConfig& cfg) {
    cfg.validate();
    if (cfg.grid.empty()) throw ParameterError("falsifier grid is empty");
    FalsifierReport r;
    r.polydisc_reduces_to_ball_slice = cfg.polydisc && cfg.n == 2;
    const std::size_t P = cfg.grid.size();
    std::vector<double> g(P), lap(P), fd(P);
    parallel_for(P, [&](std::size_t k) {
        g[k] = slice_g(cfg, cfg.grid[k]);
        lap[k] = slice_laplacian(cfg, cfg.grid[k]);
        fd[k] = slice_laplacian_fd(cfg, cfg.grid[k]);
    });
    r.g_min = *std::min_element(g.begin(), g.end());
    r.g_max = *std::max_element(g.begin(), g.end());
    r.g_range = r.g_max - r.g_min;
    r.min_laplacian = *std::min_element(lap.begin(), lap.end());
    r.max_laplacian = *std::max_element(lap.begin(), lap.end());
    for (std::size_t k = 0; k < P; ++k) {
        const double scale = std::max(std::abs(lap[k]), 1e-300);
        if (lap[k] != 0.0 || fd[k] != 0.0)
            r.max_fd_rel_error = std::max(r.max_fd_rel_error, std::abs(lap[k] - fd[k]) / scale);
    }
    r.g_increment = slice_g(cfg, 0.6) - slice_g(cfg, 0.0);
    r.radial_profile_monotone = true;
    double prev = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 90; ++i) {
        const double v = slice_g(cfg, 0.01 * i);
        if (v < prev - 1e-14) r.radial_profile_monotone = false;
        prev = v;
    }
    if (cfg.alpha == 0.0) {
        r.falsified = false;
        r.max_fd_rel_error = 0.0;
        r.conclusion = "constant; no falsification";
        return r;
    }
    r.falsified = r.min_laplacian > 0.0 && r.g_range > 0.0;
    r.conclusion = r.falsified ? "g is not constant and strictly subharmonic: the invertible multiplier property fails"
                               : "no conclusion";
    return r;
}

std::string falsifier_csv(const FalsifierConfig& cfg) {
    cfg.validate();
    std::ostringstream os;
    os << std::setprecision(17) << "re,im,g,lap,lap_fd\n";
    for (cplx z : cfg.grid)
        os << z.real() << ',' << z.imag() << ',' << slice_g(cfg, z) << ',' << slice_laplacian(cfg, z) << ','
           << slice_laplacian_fd(cfg, z) << '\n';
    return os.str();
}

}  // namespace coronakit
