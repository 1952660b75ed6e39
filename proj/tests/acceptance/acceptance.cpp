// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coronakit/besov.hpp"
#include "coronakit/carleson.hpp"
#include "coronakit/convex_poisson.hpp"
#include "coronakit/dbar.hpp"
#include "coronakit/imp.hpp"
#include "coronakit/kernels.hpp"
#include "coronakit/outer.hpp"
#include "coronakit/rescaling.hpp"
#include "coronakit/rkhs.hpp"
#include "corpora.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace coronakit;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

CVector random_values(std::mt19937_64& rng, Eigen::Index n) {
    std::normal_distribution<double> g(0.0, 1.0);
    CVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = cplx(g(rng), g(rng));
    return v;
}

std::vector<double> random_theta(std::mt19937_64& rng, std::size_t dim) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> t(dim);
    double s = 0.0;
    for (auto& x : t) s += (x = e(rng));
    for (auto& x : t) x /= s;
    return t;
}

double gauge_distance(const CVector& a, const CVector& b) {
    const cplx phase = std::polar(1.0, std::arg(a(0) / b(0)));
    return (a - phase * b).cwiseAbs().maxCoeff() / b.cwiseAbs().maxCoeff();
}

KernelFamily family_at(int i) {
    const auto& all = all_kernel_families();
    return all[static_cast<std::size_t>(i) % all.size()];
}

Outcome kernel_positivity() {
    std::mt19937_64 rng(101);
    double worst = std::numeric_limits<double>::infinity();
    int sets = 0;
    for (auto fam : all_kernel_families()) {
        const auto spec = testsupport::family_spec(fam);
        std::uniform_int_distribution<int> sz(1, 12);
        for (int trial = 0; trial < 50; ++trial, ++sets) {
            const auto pts = testsupport::random_points(spec.domain(), rng, sz(rng), 0.95);
            const auto G = build_gram(spec, pts);
            worst = std::min(worst, G.min_eigenvalue / G.max_eigenvalue);
        }
    }
    return {worst >= -1e-10, std::to_string(sets) + " Gram matrices, worst min/max eigenvalue = " + fmt(worst)};
}

Outcome rescaling_round_trip() {
    std::mt19937_64 rng(102);
    std::uniform_real_distribution<double> mod(0.2, 3.0), ph(-pi, pi);
    double psi_err = 0.0, dist_err = 0.0;
    int accepted = 0, rejected_named = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto spec = testsupport::family_spec(family_at(trial));
        const int n = 3 + trial % 8;
        const auto pts = testsupport::random_points(spec.domain(), rng, n, 0.8, 0.05);
        const CMatrix k = gram_entries(Kernel(spec), pts.points);
        CVector psi(n);
        for (int i = 0; i < n; ++i) psi(i) = std::polar(mod(rng), ph(rng));
        const CMatrix K = apply_rescaling(k, psi);
        const auto res = check_rescaling(K, k);
        if (res.is_rescaling && res.witness) {
            ++accepted;
            psi_err = std::max(psi_err, gauge_distance(res.witness->psi, psi));
            for (Eigen::Index i = 0; i < n; ++i)
                for (Eigen::Index j = 0; j < n; ++j)
                    dist_err = std::max(dist_err,
                                        std::abs(matrix_kernel_distance(K, i, j) - matrix_kernel_distance(k, i, j)));
        }
        std::uniform_int_distribution<int> idx(0, n - 1);
        const int i = idx(rng);
        int j = idx(rng);
        while (j == i) j = idx(rng);
        CMatrix bad = K;
        bad(i, j) *= 1.0 + 1e-3;
        bad(j, i) = std::conj(bad(i, j));
        const auto rej = check_rescaling(bad, k);
        if (!rej.is_rescaling && rej.violation && rej.violation->kind == "modulus" &&
            ((rej.violation->i == i && rej.violation->j == j) || (rej.violation->i == j && rej.violation->j == i)))
            ++rejected_named;
    }
    const bool ok = accepted == 100 && rejected_named == 100 && psi_err <= 1e-8 && dist_err <= 1e-10;
    return {ok, "accepted " + std::to_string(accepted) + "/100, perturbed rejected with pair " +
                    std::to_string(rejected_named) + "/100, psi error " + fmt(psi_err) + ", distance error " +
                    fmt(dist_err)};
}

Outcome h_poisson() {
    std::mt19937_64 rng(103);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto spec = testsupport::family_spec(family_at(trial));
        const Kernel k(spec);
        const auto pts = testsupport::random_points(spec.domain(), rng, 4 + trial % 7, 0.9, 0.3);
        const auto G = build_gram(spec, pts);
        const std::size_t ia = static_cast<std::size_t>(trial) % pts.size();
        const CVector kt = normalized_kernel_values(k, pts[ia], pts);
        const CVector f = random_values(rng, static_cast<Eigen::Index>(pts.size()));
        const cplx got = interpolant_inner_product(G.entries, kt.cwiseProduct(f), kt);
        const cplx want = f(static_cast<Eigen::Index>(ia));
        worst = std::max(worst, std::abs(got - want) / std::max(1.0, std::abs(want)));
    }
    return {worst <= 1e-9, "50 instances, worst relative error " + fmt(worst)};
}

Outcome shift_invariance() {
    std::mt19937_64 rng(104);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto spec = testsupport::family_spec(family_at(trial));
        const Kernel k(spec);
        const auto pts = testsupport::random_points(spec.domain(), rng, 4 + trial % 6, 0.9, 0.15);
        const auto G = build_gram(spec, pts);
        const CVector phi = random_values(rng, static_cast<Eigen::Index>(pts.size()));
        const Point a = testsupport::random_point(spec.domain(), rng, 0.9);
        const CMatrix Ga = shifted_gram(G.entries, normalized_kernel_values(k, a, pts));
        const double v = restricted_multiplier_norm(G.entries, phi).value;
        const double va = restricted_multiplier_norm(Ga, phi).value;
        worst = std::max(worst, std::abs(v - va) / v);
    }
    return {worst <= 1e-9, "50 instances, worst relative difference " + fmt(worst)};
}

Outcome constant_norm_one() {
    std::mt19937_64 rng(105);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto spec = testsupport::family_spec(family_at(trial));
        auto pts = testsupport::random_points(spec.domain(), rng, 7, 0.85, 0.2);
        pts.points.push_back(Point::Zero(spec.domain().dim));
        const std::size_t M = 1 + static_cast<std::size_t>(trial) % 3;
        const ShiftConfig shift{{pts.points.begin(), pts.points.begin() + static_cast<long>(M)},
                                random_theta(rng, M + 1)};
        const auto r = convex_shift_norm(spec, pts, shift, SampleFunction::constant(pts, 1.0));
        worst = std::max(worst, std::abs(r.value - 1.0));
    }
    return {worst <= 1e-10, "50 shifts, worst |norm - 1| = " + fmt(worst)};
}

Outcome divide_by_kernel_check() {
    std::mt19937_64 rng(106);
    double norm_err = 0.0, residual = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto spec = testsupport::family_spec(family_at(trial));
        const Kernel k(spec);
        const auto pts = testsupport::random_points(spec.domain(), rng, 8, 0.9, 0.25);
        const Eigen::Index P = static_cast<Eigen::Index>(pts.size());
        const int N = 2 + trial % 2;
        CMatrix phi(P, N);
        for (int l = 0; l < N; ++l) phi.col(l) = random_values(rng, P);
        const Point a = testsupport::random_point(spec.domain(), rng, 0.9);
        const CVector kt = normalized_kernel_values(k, a, pts);
        const SampleFunction sphi{pts, phi};
        const auto f = solve_bezout_min_norm(BezoutProblem{spec, pts, sphi, kt, ShiftConfig::unshifted(), 0.0});
        const auto g = divide_by_kernel(spec, pts, sphi, a, f);
        residual = std::max(residual, g.residual);
        const auto G = build_gram(spec, pts);
        for (int l = 0; l < N; ++l) {
            const double fl = min_norm_interpolation(G, SampleFunction::scalar(pts, f.g.values.col(l))).value;
            norm_err = std::max(norm_err, std::abs(g.per_channel_norms[static_cast<std::size_t>(l)] - fl) /
                                              std::max(1.0, fl));
        }
    }
    return {norm_err <= 1e-12 && residual <= 1e-12,
            "20 solves, worst norm mismatch " + fmt(norm_err) + ", worst residual " + fmt(residual)};
}

Outcome minimax() {
    std::mt19937_64 rng(107);
    double worst_gap = 0.0, worst_duality = -std::numeric_limits<double>::infinity();
    bool all_converged = true;
    for (int trial = 0; trial < 20; ++trial) {
        const auto spec = testsupport::family_spec(family_at(trial));
        const int P = 8 + trial % 8;
        const int N = 1 + trial % 3;
        const int M = 1 + (trial / 3) % 3;
        const auto pts = testsupport::random_points(spec.domain(), rng, P, 0.9, 0.1);
        CMatrix phi(P, N);
        for (int l = 0; l < N; ++l) phi.col(l) = random_values(rng, P);
        if (N == 1)
            for (Eigen::Index i = 0; i < P; ++i)
                if (std::abs(phi(i, 0)) < 0.2) phi(i, 0) = std::polar(0.2, std::arg(phi(i, 0)));
        std::vector<Point> base;
        for (int m = 0; m < M; ++m) base.push_back(testsupport::random_point(spec.domain(), rng, 0.8));
        const SampleFunction sphi{pts, phi};
        const auto r = saddle_value(spec, pts, sphi, base);
        all_converged = all_converged && r.converged;

        const auto Q = testsupport::oracle_forms(spec, pts, base);
        const CVector ones = CVector::Ones(P);
        auto V = [&](const std::vector<double>& t) { return testsupport::closed_form_value(Q, phi, ones, t); };
        const auto scan = testsupport::simplex_scan(static_cast<std::size_t>(M) + 1, 64, V);
        worst_gap = std::max(worst_gap, std::abs(r.value - scan.value) / scan.value);

        const ShiftedForms forms(spec, pts, base);
        std::normal_distribution<double> g(0.0, 0.3);
        const Eigen::VectorXd phinorm2 = phi.rowwise().squaredNorm();
        for (int c = 0; c < 20; ++c) {
            CMatrix h(P, N);
            for (Eigen::Index i = 0; i < P; ++i) {
                CVector u(N);
                for (int l = 0; l < N; ++l) u(l) = cplx(g(rng), g(rng));
                const cplx s = phi.row(i).transpose().cwiseProduct(u).sum();
                for (int l = 0; l < N; ++l) h(i, l) = u(l) - s * std::conj(phi(i, l)) / phinorm2(i);
            }
            const CMatrix cand = r.g_star.g.values + h;
            if (bezout_residual(phi, cand, ones) > 1e-10) return {false, "competitor construction infeasible"};
            const auto comps = forms.component_values(cand);
            const double w = *std::max_element(comps.begin(), comps.end());
            worst_duality = std::max(worst_duality, (r.value - w) / w);
        }
    }
    const bool ok = all_converged && worst_gap <= 1e-6 && worst_duality <= 1e-9;
    return {ok, "20 instances, worst |saddle - scan|/scan = " + fmt(worst_gap) +
                    ", max (value - competitor)/competitor = " + fmt(worst_duality) +
                    (all_converged ? "" : ", not all converged")};
}

Outcome outer() {
    std::mt19937_64 rng(108);
    double boundary = 0.0, norm = 0.0, identity = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const int M = 1 + trial % 4;
        ShiftConfig s;
        for (int m = 0; m < M; ++m) s.base_points.push_back(make_point(testsupport::random_disk(rng, 0.8)));
        s.theta = random_theta(rng, static_cast<std::size_t>(M) + 1);
        const auto F = construct_outer(s, 4096);
        const auto rep = verify_outer_identity(F, s, 8);
        boundary = std::max(boundary, rep.boundary_rel_error);
        norm = std::max(norm, std::abs(rep.h2_norm - 1.0));
        identity = std::max(identity, rep.max_discrepancy);
    }
    const auto one = construct_outer(ShiftConfig::vertex({make_point(0.4), make_point(cplx(0.0, -0.6))}, 0), 4096);
    bool exact = true;
    for (const auto& c : one.log_coeffs) exact = exact && c == cplx(0.0);
    for (int j = 0; j < 16; ++j) exact = exact && one(std::polar(0.06 * j, 0.9 * j)) == cplx(1.0);
    const bool ok = boundary <= 1e-6 && norm <= 1e-6 && identity <= 1e-7 && exact;
    return {ok, "boundary error " + fmt(boundary) + ", |norm - 1| " + fmt(norm) + ", monomial identity " +
                    fmt(identity) + ", theta = e0 exact: " + (exact ? "yes" : "no")};
}

Outcome imp() {
    const auto rep = falsify_report(FalsifierConfig::standard(0.5, 2));
    const bool ok = rep.min_laplacian > 0.0 && rep.g_increment > 0.0 && rep.max_fd_rel_error <= 1e-4;
    return {ok, "min Laplacian " + fmt(rep.min_laplacian) + ", g(0.6) - g(0) = " + fmt(rep.g_increment) +
                    ", FD agreement " + fmt(rep.max_fd_rel_error)};
}

Outcome carleson() {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    std::ostringstream ratios;
    for (const auto& [name, mu] : testsupport::carleson_corpus()) {
        const auto probes = default_probe_grid(mu);
        for (double sigma : {0.25, 0.5, 1.0}) {
            const double ratio = testing_norm(mu, sigma, 2.0, probes) / box_norm(mu, sigma, 2.0).value;
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
            ratios << "    " << name << " sigma=" << sigma << " ratio=" << ratio << '\n';
        }
    }
    std::printf("  testing/box ratios:\n%s", ratios.str().c_str());
    return {lo >= 1.0 / 32.0 && hi <= 32.0, "36 ratios in [" + fmt(lo) + ", " + fmt(hi) + "]"};
}

Outcome besov() {
    const BesovParams bp{0.5, 2.0, 0.0, 1};
    const auto c = besov_kernel_coeffs(bp.sigma, bp.alpha, bp.p, 256);
    PowerSeries1D kw;
    double pw = 1.0;
    for (std::size_t k = 0; k < c.size(); ++k, pw *= 0.4) kw.coeffs.push_back(c.coeffs[k] * pw);
    const cplx v = besov_pairing_disk(PowerSeries1D::monomial(2), kw, bp).value;
    const double err = std::abs(v - 0.16);
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const auto& [name, f] : testsupport::algebra_corpus())
        for (double sigma : {0.25, 0.5}) {
            const double n1 = besov_norm_disk(f, {sigma, 2.0, 0.0, 1});
            for (int m : {2, 3}) {
                const double r = besov_norm_disk(f, {sigma, 2.0, 0.0, m}) / n1;
                lo = std::min(lo, r);
                hi = std::max(hi, r);
            }
        }
    const bool ok = err <= 1e-8 && std::isfinite(lo) && std::isfinite(hi) && lo > 0.0;
    return {ok, "|<z^2, k_0.4> - 0.16| = " + fmt(err) + ", norm ratios across m in [" + fmt(lo) + ", " + fmt(hi) + "]"};
}

Outcome algebra() {
    double C = 0.0;
    bool finite = true;
    for (const auto& [name, phi] : testsupport::algebra_corpus()) {
        const double a = kps_norm_disk(phi, 0.25, 2.0, 1).value;
        const double b = kps_norm_disk(phi * phi, 0.25, 2.0, 1).value;
        finite = finite && std::isfinite(a) && std::isfinite(b) && a > 0.0;
        C = std::max(C, b / (a * a));
    }
    return {finite && std::isfinite(C), "10 functions, empirical C = " + fmt(C)};
}

Outcome dbar_suite() {
    const PolarMesh mesh = PolarMesh::make(64, 128);
    const CauchyPompeiuSolver u(GridField::sample(mesh, [](cplx) { return cplx(1.0); }));
    double cp = 0.0;
    for (cplx z : disk_lattice(0.05, 1.0)) cp = std::max(cp, std::abs(u(z) - std::conj(z)));
    double fd = 0.0, sup = 0.0;
    bool finite = true;
    for (const auto& [name, mu] : testsupport::carleson_corpus()) {
        const auto rep = jones_check(JonesData::from_measure(mu));
        fd = std::max(fd, rep.fd_residual);
        sup = std::max(sup, rep.boundary_sup);
        finite = finite && std::isfinite(rep.boundary_sup);
    }
    const bool ok = cp <= 1e-10 && fd <= 1e-3 && finite;
    return {ok, "Cauchy-Pompeiu error " + fmt(cp) + ", Jones minus Pompeiu FD residual " + fmt(fd) +
                    ", max Jones boundary sup " + fmt(sup)};
}

Outcome corona() {
    const std::vector<PowerSeries1D> phi{PowerSeries1D::monomial(2), PowerSeries1D({1.0, -1.0})};
    const double c = certify_lower_bound(phi);
    const auto rep = koszul_corona_disk(phi, c);
    bool finite = true;
    std::string sups, kps;
    for (double s : rep.sup_f) {
        finite = finite && std::isfinite(s);
        sups += (sups.empty() ? "" : ", ") + fmt(s);
    }
    for (double k : rep.kps_norms) {
        finite = finite && std::isfinite(k);
        kps += (kps.empty() ? "" : ", ") + fmt(k);
    }
    return {rep.residual <= 1e-4 && finite, "c = " + fmt(c) + ", residual " + fmt(rep.residual) + ", sup |f| = (" +
                                                sups + "), kps norms = (" + kps + ")"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"kernel positivity", kernel_positivity},
        {"rescaling round trip", rescaling_round_trip},
        {"restricted H-Poisson identity", h_poisson},
        {"multiplier norm shift invariance", shift_invariance},
        {"constant has norm one", constant_norm_one},
        {"divide by kernel", divide_by_kernel_check},
        {"minimax", minimax},
        {"outer function", outer},
        {"IMP falsification", imp},
        {"weak Carleson comparability", carleson},
        {"Besov reproducing", besov},
        {"K_p^sigma algebra", algebra},
        {"dbar suite", dbar_suite},
        {"corona end to end", corona},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!out.pass) ++failures;
        std::printf("%s criterion %zu: %s (%s) [%.1f s]\n", out.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), out.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
