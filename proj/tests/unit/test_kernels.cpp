#include "doctest.h"

#include "coronakit/kernels.hpp"
#include "test_support.hpp"

using namespace coronakit;
using testsupport::binomial_series;
using namespace std::complex_literals;

namespace {

Point pt(std::initializer_list<cplx> xs) {
    Point p(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (cplx x : xs) p(i++) = x;
    return p;
}

}  // namespace

TEST_CASE("closed-form kernel values") {
    CHECK(std::abs(eval_kernel(KernelSpec::of(KernelFamily::hardy_polydisc, 2), pt({0.0, 0.0}), pt({0.3, -0.4i})) -
                   1.0) < 1e-15);
    CHECK(std::abs(eval_kernel(KernelSpec::of(KernelFamily::bergman_ball, 1), pt({0.5}), pt({0.5})) - 16.0 / 9.0) <
          1e-14);
    CHECK(std::abs(eval_kernel(KernelSpec::szego(), pt({0.0}), pt({0.7i})) - 1.0) < 1e-15);

    // Hardy ball n = 2: (1 - <x, y>)^{-2} by hand.
    const cplx inner = 0.2 * std::conj(cplx(0.1, 0.3)) + cplx(0.0, 0.4) * std::conj(cplx(-0.2, 0.0));
    CHECK(std::abs(eval_kernel(KernelSpec::of(KernelFamily::hardy_ball, 2), pt({0.2, 0.4i}), pt({{0.1, 0.3}, -0.2})) -
                   1.0 / ((1.0 - inner) * (1.0 - inner))) < 1e-14);
}

TEST_CASE("normalized kernels and distances") {
    const auto sz = KernelSpec::szego();
    CHECK(std::abs(eval_normalized_kernel(sz, pt({0.0}), pt({0.45 - 0.2i})) - 1.0) < 1e-15);
    CHECK(std::abs(eval_normalized_kernel(sz, pt({0.6}), pt({0.0})) - 0.8) < 1e-15);
    for (double r : {0.1, 0.5, 0.93}) {
        const cplx a = std::polar(r, 0.7);
        CHECK(kernel_distance(sz, pt({0.0}), pt({a})) == doctest::Approx(r).epsilon(1e-12));
    }
    std::mt19937_64 rng(11);
    for (auto fam : all_kernel_families()) {
        const auto spec = testsupport::family_spec(fam);
        const Kernel k(spec);
        for (int trial = 0; trial < 20; ++trial) {
            const Point x = testsupport::random_point(spec.domain(), rng, 0.85);
            const Point y = testsupport::random_point(spec.domain(), rng, 0.85);
            CHECK(std::abs(k.normalized(x, x) - std::sqrt(k.diagonal(x))) < 1e-12 * std::sqrt(k.diagonal(x)));
            CHECK(k.distance(x, x) == doctest::Approx(0.0).epsilon(1e-7));
            const double dxy = k.distance(x, y), dyx = k.distance(y, x);
            CHECK(dxy >= 0.0);
            CHECK(dxy <= 1.0);
            CHECK(std::abs(dxy - dyx) < 1e-12);
        }
    }
}

TEST_CASE("hermitian symmetry and positive diagonal") {
    std::mt19937_64 rng(7);
    for (auto fam : all_kernel_families()) {
        const auto spec = testsupport::family_spec(fam);
        const Kernel k(spec);
        for (int trial = 0; trial < 50; ++trial) {
            const Point x = testsupport::random_point(spec.domain(), rng, 0.9);
            const Point y = testsupport::random_point(spec.domain(), rng, 0.9);
            const cplx kxy = k(x, y), kyx = k(y, x);
            CHECK(std::abs(kxy - std::conj(kyx)) <= 1e-13 * std::abs(kxy));
            CHECK(k(x, x).real() > 0.0);
            CHECK(std::abs(k(x, x).imag()) <= 1e-14 * k(x, x).real());
        }
    }
}

TEST_CASE("domain and parameter validation") {
    CHECK_THROWS_AS(eval_kernel(KernelSpec::szego(), pt({1.0}), pt({0.0})), DomainError);
    CHECK_THROWS_AS(eval_kernel(KernelSpec::of(KernelFamily::hardy_ball, 2), pt({0.8, 0.8}), pt({0.0, 0.0})),
                    DomainError);
    CHECK_NOTHROW(eval_kernel(KernelSpec::of(KernelFamily::hardy_polydisc, 2), pt({0.8, 0.8}), pt({0.0, 0.0})));
    CHECK_THROWS_AS(eval_kernel(KernelSpec::szego(), pt({0.1, 0.1}), pt({0.0})), DomainError);
    CHECK_THROWS_AS(Kernel(KernelSpec::besov(0.5, 1.0, 0.0)), ParameterError);
    CHECK_THROWS_AS(Kernel(KernelSpec::besov(0.5, 2.0, -1.0)), ParameterError);
    CHECK_THROWS_AS(Kernel(KernelSpec::besov(0.0, 2.0, 0.0)), ParameterError);
    CHECK_THROWS_AS(kernel_family_from_string("bergman-annulus"), ParameterError);
    CHECK(kernel_family_from_string("besov-sobolev-disk") == KernelFamily::besov_sobolev_disk);
}

TEST_CASE("radial transforms") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    PowerSeries1D s;
    for (int k = 0; k < 40; ++k) s.coeffs.emplace_back(u(rng), u(rng));

    SUBCASE("t = 0 is the identity") {
        const auto out = radial_coeff_transform(0.37, 0.0, 2, s);
        for (std::size_t k = 0; k < s.size(); ++k) CHECK(out.coeffs[k] == s.coeffs[k]);
    }
    SUBCASE("round trip") {
        std::uniform_real_distribution<double> g(-0.9, 3.0), t(-0.5, 3.0);
        for (int trial = 0; trial < 100; ++trial) {
            const double gamma = g(rng), tt = t(rng);
            const auto back = radial_coeff_transform(gamma, tt, 1, radial_coeff_transform(gamma, tt, 1, s), true);
            for (std::size_t k = 0; k < s.size(); ++k) CHECK(std::abs(back.coeffs[k] - s.coeffs[k]) < 1e-12);
        }
    }
    SUBCASE("raises the exponent of the Bergman-type kernel") {
        const auto b2 = binomial_series(2.0, 64), b3 = binomial_series(3.0, 64);
        PowerSeries1D in;
        for (double c : b2) in.coeffs.emplace_back(c);
        const auto out = radial_coeff_transform(0.0, 1.0, 1, in);
        for (std::size_t k = 0; k <= 64; ++k) CHECK(std::abs(out.coeffs[k].real() - b3[k]) <= 1e-12 * b3[k]);
    }
    SUBCASE("exponent identity for random parameters") {
        std::uniform_real_distribution<double> g(-0.8, 2.0), t(0.0, 2.5);
        std::uniform_int_distribution<int> nd(1, 3);
        for (int trial = 0; trial < 20; ++trial) {
            const int n = nd(rng);
            const double gamma = g(rng), tt = t(rng);
            const double s0 = n + 1 + gamma;
            const auto from = binomial_series(s0, 64), to = binomial_series(s0 + tt, 64);
            PowerSeries1D in;
            for (double c : from) in.coeffs.emplace_back(c);
            const auto out = radial_coeff_transform(gamma, tt, n, in);
            for (std::size_t k = 0; k <= 64; ++k) CHECK(std::abs(out.coeffs[k].real() - to[k]) <= 1e-12 * to[k]);
        }
    }
    SUBCASE("Gamma poles are rejected") {
        CHECK_THROWS_AS(radial_multiplier(-2.0, 0.5, 1, 0), ParameterError);
        CHECK_THROWS_AS(radial_multiplier(0.0, -3.0, 1, 0), ParameterError);
        CHECK_NOTHROW(radial_multiplier(-0.5, 0.5, 1, 10));
    }
    SUBCASE("large indices stay finite") {
        const double m = radial_multiplier(0.3, 1.7, 1, 10000);
        CHECK(std::isfinite(m));
        CHECK(m > 0.0);
    }
}

TEST_CASE("Besov-Sobolev kernel coefficients") {
    auto closed_form = [](double sigma, double alpha, double p, int K) {
        const double A = 2.0 + alpha, pp = p / (p - 1.0);
        std::vector<double> c(static_cast<std::size_t>(K) + 1);
        c[0] = 1.0;
        for (int k = 0; k < K; ++k)
            c[static_cast<std::size_t>(k) + 1] =
                c[static_cast<std::size_t>(k)] * (A / pp + sigma + k) * (A / p + sigma + k) / ((k + 1.0) * (A + k));
        return c;
    };
    for (double sigma : {0.25, 0.5, 1.0})
        for (double alpha : {-0.5, 0.0, 1.5})
            for (double p : {1.5, 2.0, 4.0}) {
                const auto got = besov_kernel_coeffs(sigma, alpha, p, 128);
                const auto want = closed_form(sigma, alpha, p, 128);
                for (std::size_t k = 0; k <= 128; ++k)
                    CHECK(std::abs(got.coeffs[k].real() - want[k]) <= 1e-11 * want[k]);
            }

    SUBCASE("half order at p = 2 is not exactly the Szego kernel") {
        for (double alpha : {-0.5, 0.0, 2.0}) {
            const double A = 2.0 + alpha;
            const auto c = besov_kernel_coeffs(0.5, alpha, 2.0, 4);
            CHECK(c.coeffs[0].real() == doctest::Approx(1.0));
            CHECK(c.coeffs[1].real() == doctest::Approx((A + 1.0) * (A + 1.0) / (4.0 * A)).epsilon(1e-13));
            CHECK(c.coeffs[1].real() > 1.0);
        }
    }
    SUBCASE("growth exponent 2 sigma") {
        const auto c = besov_kernel_coeffs(1.0, 0.0, 2.0, 256);
        const double ratio = c.coeffs[201].real() / c.coeffs[200].real();
        CHECK(std::abs(ratio - 202.0 / 201.0) <= 0.01 * 202.0 / 201.0);
        // log-log slope of c_k is 2 sigma - 1.
        for (double sigma : {0.25, 0.75}) {
            const auto d = besov_kernel_coeffs(sigma, 0.0, 2.0, 4096);
            const double slope = std::log(d.coeffs[4096].real() / d.coeffs[2048].real()) / std::log(2.0);
            CHECK(slope == doctest::Approx(2.0 * sigma - 1.0).epsilon(0.01));
        }
    }
    SUBCASE("value at w = 0 is the constant c_0") {
        const Kernel k(KernelSpec::besov(0.3, 2.5, 0.5, 64));
        const Point zero = Point::Zero(1);
        for (cplx z : {cplx(0.3, 0.1), cplx(-0.7, 0.2)})
            CHECK(std::abs(k(make_point(z), zero) - k.besov_coefficients()[0]) < 1e-15);
    }
    CHECK_THROWS_AS(besov_kernel_coeffs(-0.1, 0.0, 2.0, 8), ParameterError);
    CHECK_THROWS_AS(besov_kernel_coeffs(0.5, 0.0, 1.0, 8), ParameterError);
}

TEST_CASE("approximate normalized Besov kernel") {
    Point a = Point::Zero(2), z = Point::Zero(2);
    CHECK(std::abs(approx_normalized_besov_kernel(0.5, a, z) - 1.0) < 1e-15);
    a(0) = 0.6;
    CHECK(std::abs(approx_normalized_besov_kernel(0.5, a, z) - 0.8) < 1e-15);
}
