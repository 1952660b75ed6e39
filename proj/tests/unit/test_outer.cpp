#include "doctest.h"

#include "coronakit/outer.hpp"
#include "coronakit/quadrature.hpp"
#include "test_support.hpp"

using namespace coronakit;
using namespace std::complex_literals;

namespace {

ShiftConfig make_shift(std::vector<cplx> a, std::vector<double> theta) {
    ShiftConfig s;
    for (cplx z : a) s.base_points.push_back(make_point(z));
    s.theta = std::move(theta);
    return s;
}

// <F z^i, F z^j> for i >= j equals theta_0 delta_ij + sum_m theta_m a_m^{i-j} (Poisson integral of e^{idt}).
cplx closed_form_gram(const ShiftConfig& s, int d) {
    cplx v = d == 0 ? s.theta[0] : 0.0;
    for (std::size_t m = 0; m < s.base_points.size(); ++m) {
        const cplx a = s.base_points[m](0);
        v += s.theta[m + 1] * (d >= 0 ? std::pow(a, d) : std::pow(std::conj(a), -d));
    }
    return v;
}

}  // namespace

TEST_CASE("trivial shift gives the constant one") {
    const auto F = construct_outer(ShiftConfig::unshifted(), 1024);
    for (const auto& c : F.log_coeffs) CHECK(c == cplx(0.0));
    CHECK(F(0.3 + 0.2i) == cplx(1.0));
    const auto withbase = construct_outer(make_shift({0.5}, {1.0, 0.0}), 256);
    for (const auto& c : withbase.log_coeffs) CHECK(c == cplx(0.0));
}

TEST_CASE("single shift reproduces the normalized Szego kernel") {
    const cplx a = 0.3;
    const auto F = construct_outer(make_shift({a}, {0.0, 1.0}), 4096);
    const double scale = std::sqrt(1.0 - std::norm(a));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const cplx z = std::polar(0.1 + 0.11 * i, 2.0 * pi * j / 8.0);
            CHECK(std::abs(F(z) - scale / (1.0 - std::conj(a) * z)) <= 1e-8);
        }
}

TEST_CASE("norm, boundary modulus and inner-product identity") {
    const auto s = make_shift({0.3, -0.5i}, {0.2, 0.5, 0.3});
    const auto F = construct_outer(s, 4096);
    const auto rep = verify_outer_identity(F, s, 8);
    CHECK(rep.boundary_rel_error <= 1e-6);
    CHECK(std::abs(rep.h2_norm - 1.0) <= 1e-6);
    CHECK(rep.max_discrepancy <= 1e-7);

    // Independent closed form for the left-hand side.
    const auto fb = F.boundary_values();
    const auto t = uniform_angles(F.nodes);
    for (int d = -8; d <= 8; ++d) {
        cplx lhs = 0.0;
        for (std::size_t j = 0; j < fb.size(); ++j) lhs += std::norm(fb[j]) * std::polar(1.0, d * t[j]);
        lhs /= static_cast<double>(fb.size());
        CHECK(std::abs(lhs - closed_form_gram(s, d)) <= 1e-7);
    }
    const double wmax_log = [&] {
        double m = 0.0;
        for (double w : F.weight) m = std::max(m, std::abs(std::log(w)));
        return m;
    }();
    CHECK(rep.min_abs_boundary >= rep.max_abs_boundary * std::exp(-wmax_log) - 1e-12);
    CHECK(rep.min_abs_boundary >= std::exp(-0.5 * wmax_log) - 1e-9);
}

TEST_CASE("random shifts") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const int M = 1 + trial % 4;
        std::vector<cplx> a;
        for (int m = 0; m < M; ++m) a.push_back(testsupport::random_disk(rng, 0.8));
        std::exponential_distribution<double> e(1.0);
        std::vector<double> th(static_cast<std::size_t>(M) + 1);
        double sum = 0.0;
        for (auto& x : th) sum += (x = e(rng));
        for (auto& x : th) x /= sum;
        const auto s = make_shift(a, th);
        const auto F = construct_outer(s, 4096);
        const auto rep = verify_outer_identity(F, s, 8);
        CHECK(rep.boundary_rel_error <= 1e-6);
        CHECK(std::abs(rep.h2_norm - 1.0) <= 1e-6);
        CHECK(rep.max_discrepancy <= 1e-7);
        CHECK(F(0.0).imag() == doctest::Approx(0.0));
        CHECK(F(0.0).real() > 0.0);

        // Uniqueness up to phase: a finer construction agrees after alignment at the origin.
        const auto G = construct_outer(s, 8192);
        const cplx phase = std::polar(1.0, std::arg(G(0.0) / F(0.0)));
        for (int k = 0; k < 16; ++k) {
            const cplx z = std::polar(0.05 * k, 0.7 * k);
            CHECK(std::abs(G(z) - phase * F(z)) <= 1e-8);
        }
    }
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(construct_outer(make_shift({0.3}, {0.5, 0.6}), 4096), ParameterError);
    CHECK_THROWS_AS(construct_outer(ShiftConfig::unshifted(), 1000), ParameterError);
    CHECK_THROWS_AS(construct_outer(ShiftConfig::unshifted(), 128), ParameterError);
    CHECK_THROWS_AS(construct_outer(make_shift({1.0}, {0.5, 0.5}), 4096), DomainError);
    const auto F = construct_outer(ShiftConfig::unshifted(), 256);
    CHECK_THROWS_AS(F(1.5), DomainError);
    const std::string csv = outer_profile_csv(F);
    CHECK(csv.rfind("t,w,abs_F_sq,rel_error\n", 0) == 0);
}
