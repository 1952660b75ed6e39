#include "doctest.h"

#include <cmath>

#include "coronakit/dbar.hpp"
#include "corpora.hpp"

using namespace coronakit;
using namespace std::complex_literals;

namespace {

double sup_on(const std::vector<cplx>& zs, const std::function<double(cplx)>& f) {
    double m = 0.0;
    for (cplx z : zs) m = std::max(m, f(z));
    return m;
}

}  // namespace

TEST_CASE("Cauchy-Pompeiu solver") {
    const PolarMesh mesh = PolarMesh::make(64, 128);
    const auto lattice = disk_lattice(0.1, 0.95);
    SUBCASE("zero data") {
        const CauchyPompeiuSolver u(GridField::sample(mesh, [](cplx) { return cplx(0.0); }));
        CHECK(sup_on(lattice, [&](cplx z) { return std::abs(u(z)); }) == 0.0);
    }
    SUBCASE("constant data gives conj z") {
        const CauchyPompeiuSolver u(GridField::sample(mesh, [](cplx) { return cplx(1.0); }));
        CHECK(sup_on(lattice, [&](cplx z) { return std::abs(u(z) - std::conj(z)); }) <= 1e-10);
        for (int j = 0; j < 16; ++j) {
            const cplx z = std::polar(1.0, 0.4 * j);
            CHECK(std::abs(u(z) - std::conj(z)) <= 1e-10);
        }
    }
    SUBCASE("conj zeta data: FD residual and closed form") {
        const CauchyPompeiuSolver u(GridField::sample(mesh, [](cplx w) { return std::conj(w); }));
        const std::function<cplx(cplx)> f = [&](cplx z) { return u(z); };
        CHECK(sup_on(lattice, [&](cplx z) { return std::abs(dbar_fd(f, z) - std::conj(z)); }) <= 1e-3);
        // Inside the disk u0 = conj(z)^2 / 2 (no holomorphic part: the data has a single angular mode).
        CHECK(sup_on(lattice, [&](cplx z) { return std::abs(u(z) - 0.5 * std::conj(z) * std::conj(z)); }) <= 1e-10);
    }
    SUBCASE("smooth non-polynomial data") {
        auto g = [](cplx w) { return std::exp(w) * std::conj(w) / (2.0 - std::conj(w)); };
        const CauchyPompeiuSolver u(GridField::sample(mesh, g));
        const std::function<cplx(cplx)> f = [&](cplx z) { return u(z); };
        CHECK(sup_on(lattice, [&](cplx z) { return std::abs(dbar_fd(f, z) - g(z)); }) <= 1e-3);
        const std::vector<cplx> batch(lattice.begin(), lattice.begin() + 20);
        const auto vals = u.evaluate(batch);
        for (std::size_t i = 0; i < batch.size(); ++i) CHECK(std::abs(vals[i] - u(batch[i])) <= 1e-14);
    }
    CHECK(std::abs(cauchy_pompeiu_solve(GridField::sample(mesh, [](cplx) { return cplx(1.0); }), 0.3i) - -0.3i) <= 1e-10);
}

TEST_CASE("finite differences and lattices") {
    const std::function<cplx(cplx)> f = [](cplx z) { return z * std::conj(z) + z * z; };
    CHECK(std::abs(dbar_fd(f, 0.3 + 0.2i) - (0.3 + 0.2i)) <= 1e-8);
    const auto lat = disk_lattice(0.5, 1.0);
    CHECK(lat.size() == 13);
}

TEST_CASE("H2 Carleson norm") {
    CHECK(h2_carleson_norm(DiscreteMeasure::disk({}, {})) == 0.0);
    const auto origin = DiscreteMeasure::disk({0.0}, {1.0});
    CHECK(h2_carleson_norm(origin) == doctest::Approx(std::sqrt(0.5)));
    for (const auto& [name, mu] : testsupport::carleson_corpus()) {
        CHECK(h2_carleson_norm(mu) > 0.0);
        CHECK(h2_carleson_norm(mu.scaled(9.0)) == doctest::Approx(3.0 * h2_carleson_norm(mu)).epsilon(1e-13));
        const auto data = JonesData::from_measure(mu);
        CHECK(h2_carleson_norm(data.nu) == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("Jones kernel") {
    const JonesData empty = JonesData::from_measure(DiscreteMeasure::disk({}, {}));
    const cplx z = 0.3 - 0.5i, zeta = -0.2 + 0.1i;
    const cplx base = (2.0i / pi) * (1.0 - std::norm(zeta)) / ((z - zeta) * (1.0 - std::conj(zeta) * z));
    CHECK(std::abs(jones_kernel(empty, z, zeta) - base) <= 1e-15 * std::abs(base));
    CHECK_THROWS_AS(jones_kernel(empty, zeta, zeta), DomainError);
    CHECK(jones_solve(empty, {0.1, 0.5i})(0) == cplx(0.0));

    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (const auto& [name, mu] : testsupport::carleson_corpus()) {
        const auto data = JonesData::from_measure(mu);
        const double mass = data.nu.total_mass();
        for (int trial = 0; trial < 20; ++trial) {
            const cplx zz = std::polar(std::sqrt(u(rng)), 2.0 * pi * u(rng));
            const cplx q = std::polar(0.99 * std::sqrt(u(rng)), 2.0 * pi * u(rng));
            // Re of each bracket is at most 2 Re (1 + conj(w) zeta)/(1 - conj(w) zeta) <= 2 (1 + |zeta|)/(1 - |zeta|).
            const double bound = std::exp(2.0 * mass * (1.0 + std::abs(q)) / (1.0 - std::abs(q)));
            CHECK(std::abs(jones_exp_factor(data, zz, q)) <= bound * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("Jones solutions") {
    SUBCASE("single point mass") {
        const auto mu = DiscreteMeasure::disk({0.4 + 0.2i}, {0.3});
        const auto data = JonesData::from_measure(mu);
        const auto u = jones_solve(data, {0.1, -0.5i});
        CHECK(std::abs(u(0) - 0.3 * jones_kernel(data, 0.1, 0.4 + 0.2i) / 2.0i) <= 1e-15);
    }
    for (const auto& [name, mu] : testsupport::carleson_corpus()) {
        const auto data = JonesData::from_measure(mu);
        const auto rep = jones_check(data);
        INFO(name, " fd_residual=", rep.fd_residual, " boundary_sup=", rep.boundary_sup);
        CHECK(std::isfinite(rep.boundary_sup));
        CHECK(rep.fd_residual <= 1e-3 * std::max(1.0, rep.data_mass));
        CHECK(rep.checked_points > 0);
        CHECK(rep.boundary_sup <= 100.0 * rep.carleson_norm);
    }
}

TEST_CASE("boundary Sobolev norm") {
    const int n = 1024;
    auto samples = [&](const std::function<cplx(double)>& f) {
        std::vector<cplx> v(n);
        for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = f(2.0 * pi * j / n);
        return v;
    };
    SUBCASE("constants") {
        const auto r = boundary_sobolev_norm(samples([](double) { return cplx(0.7); }), 0.25, 2.0);
        CHECK(r.difference_integral == 0.0);
        CHECK(r.value == doctest::Approx(0.7 * std::sqrt(2.0 * pi)).epsilon(1e-13));
        CHECK(r.converged);
    }
    SUBCASE("identity on the circle") {
        for (double p : {2.0, 3.0})
            for (double sigma : {0.1, 0.25}) {
                if (!(sigma < 1.0 / p)) continue;
                const double q = p - 2.0 + p * sigma;
                const double want = 2.0 * pi * 2.0 * pi * std::tgamma(1.0 + q) / std::pow(std::tgamma(1.0 + 0.5 * q), 2);
                const auto r = boundary_sobolev_norm(samples([](double t) { return std::polar(1.0, t); }), sigma, p);
                CHECK(r.difference_integral == doctest::Approx(want).epsilon(1e-6));
                CHECK(r.converged);
            }
    }
    SUBCASE("two-form comparability") {
        const std::vector<std::function<cplx(double)>> corpus{
            [](double t) { return std::polar(1.0, t); },
            [](double t) { return std::polar(1.0, 3.0 * t) + 0.5; },
            [](double t) { return 1.0 / (2.0 - std::polar(1.0, t)); },
            [](double t) { return std::exp(std::polar(1.0, t)); },
            [](double t) { return std::polar(1.0, t) + 0.3 * std::polar(1.0, -2.0 * t); },
        };
        double lo = 1e300, hi = 0.0;
        for (const auto& f : corpus) {
            const auto r = boundary_sobolev_norm(samples(f), 0.25, 2.0);
            CHECK(r.converged);
            lo = std::min(lo, r.form_ratio);
            hi = std::max(hi, r.form_ratio);
        }
        MESSAGE("difference/Poisson form ratio range [", lo, ", ", hi, "]");
        CHECK(lo > 0.0);
        CHECK(hi / lo < 100.0);
    }
    CHECK_THROWS_AS(boundary_sobolev_norm(std::vector<cplx>(64, 1.0), 0.6, 2.0), ParameterError);
    CHECK_THROWS_AS(boundary_sobolev_norm(std::vector<cplx>(15, 1.0), 0.2, 2.0), ParameterError);
}

TEST_CASE("Koszul corona construction") {
    SUBCASE("one invertible function") {
        const std::vector<PowerSeries1D> phi{PowerSeries1D({2.0, 1.0})};
        const auto rep = koszul_corona_disk(phi, 1.0);
        CHECK(rep.single_inverse);
        CHECK(rep.residual <= 1e-12);
        CHECK(rep.sup_f[0] == doctest::Approx(1.0).epsilon(1e-12));
        for (int k = 0; k < 10; ++k) CHECK(std::abs(rep.f[0].coeffs[static_cast<std::size_t>(k)] - std::pow(-0.5, k) / 2.0) <= 1e-12);
    }
    SUBCASE("first entry invertible") {
        const std::vector<PowerSeries1D> phi{PowerSeries1D::constant(1.0), PowerSeries1D::monomial(1)};
        const auto rep = koszul_corona_disk(phi, 1.0);
        CHECK(rep.single_inverse);
        CHECK(rep.inverse_index == 0);
        CHECK(rep.residual <= 1e-14);
        CHECK(rep.sup_f[1] == 0.0);
    }
    SUBCASE("corona pair z^2 and 1 - z") {
        const std::vector<PowerSeries1D> phi{PowerSeries1D::monomial(2), PowerSeries1D({1.0, -1.0})};
        const double c = certify_lower_bound(phi);
        CHECK(c > 0.3);
        const auto rep = koszul_corona_disk(phi, c);
        MESSAGE("residual=", rep.residual, " direct=", rep.residual_direct, " dbar=", rep.dbar_residual,
                " neg=", rep.negative_frequency_energy, " antisym=", rep.antisymmetry_error);
        CHECK_FALSE(rep.single_inverse);
        CHECK(rep.residual <= 1e-4);
        CHECK(rep.residual_direct <= 1e-4);
        CHECK(rep.dbar_residual <= 1e-4);
        CHECK(rep.antisymmetry_error <= 1e-10);
        for (double s : rep.sup_f) CHECK(std::isfinite(s));
        for (double k : rep.kps_norms) CHECK(std::isfinite(k));
        CHECK_THROWS_AS(koszul_corona_disk(phi, 2.0 * c), ParameterError);
    }
    SUBCASE("common zero is rejected") {
        const std::vector<PowerSeries1D> phi{PowerSeries1D::monomial(1), PowerSeries1D::monomial(2)};
        CHECK_THROWS_AS(koszul_corona_disk(phi, 0.1), ParameterError);
    }
}
