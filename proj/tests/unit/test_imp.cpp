#include "doctest.h"

#include "coronakit/imp.hpp"

using namespace coronakit;
using namespace std::complex_literals;

TEST_CASE("closed forms at the origin and for alpha = 0") {
    FalsifierConfig cfg = FalsifierConfig::standard(0.5, 2);
    CHECK(slice_g(cfg, 0.0) == doctest::Approx(std::log(1.5625)).epsilon(1e-14));
    FalsifierConfig c3 = FalsifierConfig::standard(0.3 + 0.4i, 3);
    CHECK(slice_g(c3, 0.0) == doctest::Approx(std::log(1.0 + std::pow(0.75, 3))).epsilon(1e-14));
    FalsifierConfig zero = FalsifierConfig::standard(0.0, 2);
    for (cplx z : {cplx(0.0), cplx(0.5, 0.2), cplx(-0.7)}) {
        CHECK(slice_g(zero, z) == doctest::Approx(std::log(2.0)).epsilon(1e-13));
        CHECK(slice_laplacian(zero, z) == 0.0);
    }
}

TEST_CASE("rotation invariance") {
    for (cplx alpha : {cplx(0.5), cplx(0.2, -0.6)}) {
        const auto cfg = FalsifierConfig::standard(alpha, 2);
        for (double r : {0.1, 0.45, 0.8})
            for (double phi : {0.3, 2.1, -1.4}) {
                const cplx z = std::polar(r, phi);
                CHECK(std::abs(slice_g(cfg, z) - slice_g(cfg, r)) <= 1e-10);
                CHECK(std::abs(slice_laplacian(cfg, z) - slice_laplacian(cfg, r)) <= 1e-10);
            }
    }
}

TEST_CASE("analytic Laplacian matches finite differences") {
    for (double a : {0.3, 0.5, 0.7})
        for (int n : {2, 3}) {
            const auto cfg = FalsifierConfig::standard(a, n);
            double worst = 0.0;
            for (cplx z : cfg.grid) {
                const double lap = slice_laplacian(cfg, z);
                CHECK(lap > 0.0);
                worst = std::max(worst, std::abs(lap - slice_laplacian_fd(cfg, z)) / std::abs(lap));
            }
            CHECK(worst <= 1e-4);
        }
}

TEST_CASE("quadrature convergence") {
    auto cfg = FalsifierConfig::standard(0.7, 3);
    cfg.lambda_nodes = 1024;
    auto fine = cfg;
    fine.lambda_nodes = 2048;
    for (double r : {0.0, 0.4, 0.8}) CHECK(std::abs(slice_g(cfg, r) - slice_g(fine, r)) <= 1e-10);
}

TEST_CASE("falsification report") {
    const auto rep = falsify_report(FalsifierConfig::standard(0.5, 2));
    CHECK(rep.falsified);
    CHECK(rep.min_laplacian > 0.0);
    CHECK(rep.g_increment > 0.0);
    CHECK(rep.g_range > 0.0);
    CHECK(rep.max_fd_rel_error <= 1e-4);
    CHECK(rep.radial_profile_monotone);
    CHECK_FALSE(rep.polydisc_reduces_to_ball_slice);

    auto poly = FalsifierConfig::standard(0.5, 2);
    poly.polydisc = true;
    CHECK(falsify_report(poly).polydisc_reduces_to_ball_slice);

    const auto none = falsify_report(FalsifierConfig::standard(0.0, 2));
    CHECK_FALSE(none.falsified);
    CHECK(none.conclusion == "constant; no falsification");
}

TEST_CASE("grid and validation") {
    const auto grid = FalsifierConfig::polar_grid(21, 21, 0.8);
    CHECK(grid.size() == 1 + 20 * 21);
    double rmax = 0.0;
    for (cplx z : grid) rmax = std::max(rmax, std::abs(z));
    CHECK(rmax == doctest::Approx(0.8));
    auto bad = FalsifierConfig::standard(1.0, 2);
    CHECK_THROWS_AS(bad.validate(), ParameterError);
    auto low = FalsifierConfig::standard(0.5, 1);
    CHECK_THROWS_AS(low.validate(), ParameterError);
    auto nodes = FalsifierConfig::standard(0.5, 2);
    nodes.lambda_nodes = 100;
    CHECK_THROWS_AS(nodes.validate(), ParameterError);
    const auto cfg = FalsifierConfig::standard(0.5, 2);
    CHECK_THROWS_AS(slice_g(cfg, 1.0), DomainError);
    auto poly3 = FalsifierConfig::standard(0.5, 3);
    poly3.polydisc = true;
    CHECK_THROWS_AS(poly3.validate(), ParameterError);
}
