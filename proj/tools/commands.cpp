#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>

#include "coronakit/besov.hpp"
#include "coronakit/carleson.hpp"
#include "coronakit/convex_poisson.hpp"
#include "coronakit/dbar.hpp"
#include "coronakit/imp.hpp"
#include "coronakit/outer.hpp"
#include "coronakit/rescaling.hpp"
#include "coronakit/rkhs.hpp"

namespace coronakit::cli {

void Context::check(const std::string& name, double value, double tolerance) {
    auto& s = summary[name];
    const bool ok = value <= tolerance;
    if (s.runs == 0 || !(value <= s.worst)) s.worst = value;
    s.tolerance = tolerance;
    ++s.runs;
    if (!ok) ++s.failures;
}

void Context::check_true(const std::string& name, bool ok) { check(name, ok ? 0.0 : 1.0, 0.0); }

bool Context::all_passed() const {
    return std::all_of(summary.begin(), summary.end(), [](const auto& kv) { return kv.second.failures == 0; });
}

json Context::summary_json() const {
    json out = json::array();
    for (const auto& [name, s] : summary) {
        json worst = std::isfinite(s.worst) ? json(s.worst) : json(std::isnan(s.worst) ? "nan" : "inf");
        out.push_back({{"name", name},
                       {"worst", worst},
                       {"tolerance", s.tolerance},
                       {"runs", s.runs},
                       {"failures", s.failures},
                       {"pass", s.failures == 0}});
    }
    return out;
}

namespace {

json finite_or_string(double x) { return std::isfinite(x) ? json(x) : json(std::isnan(x) ? "nan" : "inf"); }

json real_list(const std::vector<double>& v) {
    json out = json::array();
    for (double x : v) out.push_back(finite_or_string(x));
    return out;
}

void write_text(const json& in, const std::string& key, const std::string& text) {
    if (!in.contains(key)) return;
    const std::string path = in.at(key).get<std::string>();
    std::ofstream os(path);
    if (!os) throw SchemaError("cannot write '" + path + "'");
    os << text;
}

CVector random_vector(std::mt19937_64& rng, Eigen::Index n) {
    std::normal_distribution<double> g(0.0, 1.0);
    CVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = cplx(g(rng), g(rng));
    return v;
}

std::vector<double> random_simplex(std::mt19937_64& rng, std::size_t dim) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> t(dim);
    double s = 0.0;
    for (auto& x : t) s += (x = e(rng));
    for (auto& x : t) x /= s;
    return t;
}

Point random_point_in(const DomainSpec& d, std::mt19937_64& rng, double rmax) {
    PointSet one = parse_point_set(json{{"random", 1}, {"rmax", rmax}}, d, rng);
    return one.points[0];
}

KernelSpec kernel_of(const json& in, const Context& ctx) { return parse_kernel(require(in, "kernel"), ctx.trunc); }

PointSet points_of(const json& in, const KernelSpec& spec, Context& ctx, const char* key = "points") {
    return parse_point_set(require(in, key), spec.domain(), ctx.rng);
}

/// Channels from a list, or {"random": N} Gaussian channels.
CMatrix channels_of(const json& j, std::size_t points, Context& ctx) {
    if (j.is_object()) {
        const int N = require(j, "random").get<int>();
        if (N < 1) throw SchemaError("random channel count must be positive");
        CMatrix m(static_cast<Eigen::Index>(points), N);
        for (int l = 0; l < N; ++l) m.col(l) = random_vector(ctx.rng, static_cast<Eigen::Index>(points));
        return m;
    }
    return parse_channels(j, points);
}

/// Base points given explicitly, as {"sample": i}, or as {"random": true, "rmax": r}.
std::vector<Point> base_points_of(const json& j, const PointSet& pts, Context& ctx) {
    if (!j.is_array()) throw SchemaError("base_points must be a list");
    std::vector<Point> out;
    for (const auto& e : j) {
        if (e.is_object() && e.contains("sample")) {
            const auto i = e.at("sample").get<std::size_t>();
            if (i >= pts.size()) throw SchemaError("base point refers to a missing sample point");
            out.push_back(pts[i]);
        } else if (e.is_object() && e.contains("random")) {
            out.push_back(random_point_in(pts.domain, ctx.rng, e.value("rmax", 0.8)));
        } else {
            out.push_back(parse_point(e, pts.domain));
        }
    }
    for (const auto& a : out) pts.domain.require_inside(a);
    return out;
}

ShiftConfig shift_of(const json& in, const PointSet& pts, Context& ctx) {
    if (!in.contains("shift")) return ShiftConfig::unshifted();
    const json& s = in.at("shift");
    ShiftConfig out;
    out.base_points = base_points_of(s.value("base_points", json::array()), pts, ctx);
    const json& th = require(s, "theta");
    out.theta = th.is_string() && th.get<std::string>() == "random" ? random_simplex(ctx.rng, out.size() + 1)
                                                                     : parse_real_list(th);
    try {
        out.validate(pts.domain);
    } catch (const ParameterError& e) {
        throw SchemaError(e.what());
    }
    return out;
}

json shift_json(const ShiftConfig& s) {
    json bp = json::array();
    for (const auto& a : s.base_points) bp.push_back(to_json(a, true));
    return {{"base_points", bp}, {"theta", s.theta}};
}

json points_json(const PointSet& ps) {
    json out = json::array();
    for (const auto& p : ps.points) out.push_back(to_json(p, ps.domain.dim == 1));
    return out;
}

// kernel-eval ---------------------------------------------------------------

json kernel_eval(const json& in, Context& ctx) {
    const auto spec = kernel_of(in, ctx);
    const auto x = points_of(in, spec, ctx, "x");
    const auto y = in.contains("y") ? points_of(in, spec, ctx, "y") : x;
    const Kernel k(spec);
    CMatrix vals(static_cast<Eigen::Index>(x.size()), static_cast<Eigen::Index>(y.size()));
    CMatrix normalized = vals;
    RMatrix dist(vals.rows(), vals.cols());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) {
            const auto a = static_cast<Eigen::Index>(i), b = static_cast<Eigen::Index>(j);
            vals(a, b) = k(x[i], y[j]);
            normalized(a, b) = k.normalized(y[j], x[i]);
            dist(a, b) = k.distance(x[i], y[j]);
        }
    json d = json::array();
    for (Eigen::Index i = 0; i < dist.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < dist.cols(); ++j) row.push_back(dist(i, j));
        d.push_back(row);
    }
    json out{{"kernel", to_string(spec.family)}, {"values", to_json(vals)}, {"normalized", to_json(normalized)},
             {"distance", d}};
    if (spec.family == KernelFamily::besov_sobolev_disk) out["series_coefficients"] = k.besov_coefficients();
    return out;
}

// gram ------------------------------------------------------------------------

json gram(const json& in, Context& ctx) {
    const auto spec = kernel_of(in, ctx);
    const auto pts = points_of(in, spec, ctx);
    const auto G = build_gram(spec, pts, ctx.tol);
    const double ratio = G.max_eigenvalue > 0.0 ? G.min_eigenvalue / G.max_eigenvalue : 0.0;
    ctx.check("psd", -ratio, ctx.tol.psd_tol);
    json out{{"kernel", to_string(spec.family)},
             {"size", G.size()},
             {"min_eigenvalue", G.min_eigenvalue},
             {"max_eigenvalue", G.max_eigenvalue},
             {"min_max_ratio", ratio},
             {"tikhonov_shift", G.tikhonov_shift(ctx.tol)},
             {"warnings", G.warnings}};
    if (in.value("include_entries", true)) {
        out["points"] = points_json(pts);
        out["entries"] = to_json(G.entries);
    }
    if (in.contains("poisson")) {
        // <k~_a f, k~_a>_H = f(a) for the minimum-norm interpolants.
        const json& pj = in.at("poisson");
        const std::size_t ia = pj.value("a_index", std::size_t{0}) % std::max<std::size_t>(pts.size(), 1);
        const CVector f = pj.contains("f") ? parse_cvector(pj.at("f"))
                                           : random_vector(ctx.rng, static_cast<Eigen::Index>(pts.size()));
        if (f.size() != G.size()) throw SchemaError("poisson.f must list one value per sample point");
        const CVector kt = normalized_kernel_values(Kernel(spec), pts[ia], pts);
        const cplx got = interpolant_inner_product(G.entries, kt.cwiseProduct(f), kt, ctx.tol);
        const cplx want = f(static_cast<Eigen::Index>(ia));
        const double err = std::abs(got - want) / std::max(1.0, std::abs(want));
        ctx.check("poisson", err, ctx.checks["poisson"]);
        out["poisson"] = {{"a_index", ia}, {"inner_product", to_json(got)}, {"f_at_a", to_json(want)},
                          {"relative_error", err}};
    }
    return out;
}

// mult-norm / kmult-norm -----------------------------------------------------

json mult_norm(const json& in, Context& ctx) {
    const auto spec = kernel_of(in, ctx);
    const auto pts = points_of(in, spec, ctx);
    const CMatrix phi = channels_of(require(in, "phi"), pts.size(), ctx);
    const auto G = build_gram(spec, pts, ctx.tol);
    json out{{"kernel", to_string(spec.family)}, {"channels", phi.cols()}};
    if (phi.cols() == 1) {
        const auto r = restricted_multiplier_norm(G.entries, phi.col(0), ctx.tol);
        out["norm"] = r.value;
        out["sup_samples"] = phi.cwiseAbs().maxCoeff();
        if (in.contains("shift_point")) {
            const json& sp = in.at("shift_point");
            const Point a = sp.is_object() ? random_point_in(spec.domain(), ctx.rng, sp.value("rmax", 0.9))
                                           : parse_point(sp, spec.domain());
            spec.domain().require_inside(a);
            const CMatrix Ga = shifted_gram(G.entries, normalized_kernel_values(Kernel(spec), a, pts));
            const double va = restricted_multiplier_norm(Ga, phi.col(0), ctx.tol).value;
            const double rel = std::abs(va - r.value) / std::max(r.value, std::numeric_limits<double>::min());
            ctx.check("shift_invariance", rel, ctx.checks["shift_invariance"]);
            out["shift_point"] = to_json(a, true);
            out["shifted_norm"] = va;
            out["relative_difference"] = rel;
        }
    } else {
        const auto vn = restricted_vector_norms(G.entries, phi, ctx.tol);
        out["row"] = vn.row;
        out["column"] = vn.column;
        out["max"] = vn.max;
    }
    return out;
}

json kmult_norm(const json& in, Context& ctx) {
    const auto spec = kernel_of(in, ctx);
    const auto pts = points_of(in, spec, ctx);
    const CMatrix phi = channels_of(require(in, "phi"), pts.size(), ctx);
    const auto probes = points_of(in, spec, ctx, "probes");
    const auto r = kernel_multiplier_norm_lower(spec, pts, SampleFunction{pts, phi}, probes, ctx.tol);
    return {{"kernel", to_string(spec.family)},
            {"lower_bound", r.value},
            {"attained_at", r.attained_at},
            {"probe_count", probes.size()}};
}

// rescale-check -----------------------------------------------------------------

double gauge_distance(const CVector& a, const CVector& b) {
    const cplx phase = std::polar(1.0, std::arg(a(0) / b(0)));
    return (a - phase * b).cwiseAbs().maxCoeff() / b.cwiseAbs().maxCoeff();
}

json rescaling_json(const RescalingResult& r) {
    json out{{"is_rescaling", r.is_rescaling}};
    if (r.witness) {
        out["psi"] = to_json(r.witness->psi);
        out["theta"] = std::vector<double>(r.witness->theta.data(), r.witness->theta.data() + r.witness->theta.size());
    }
    if (r.violation)
        out["violation"] = {{"kind", r.violation->kind},
                            {"i", r.violation->i},
                            {"j", r.violation->j},
                            {"l", r.violation->l},
                            {"discrepancy", r.violation->discrepancy}};
    return out;
}

json rescale_check(const json& in, Context& ctx) {
    const double tol = ctx.checks["rescaling"];
    if (in.contains("K")) {
        const CMatrix K = parse_cmatrix(in.at("K")), k = parse_cmatrix(require(in, "k"));
        return rescaling_json(check_rescaling(K, k, tol, ctx.tol.cocycle_tol));
    }
    const auto spec = kernel_of(in, ctx);
    const auto pts = points_of(in, spec, ctx);
    const CMatrix k = build_gram(spec, pts, ctx.tol).entries;
    const auto n = static_cast<Eigen::Index>(pts.size());
    CVector psi(n);
    if (in.contains("psi") && in.at("psi").is_array()) {
        psi = parse_cvector(in.at("psi"));
        if (psi.size() != n) throw SchemaError("psi must list one value per sample point");
    } else {
        std::uniform_real_distribution<double> mod(0.2, 3.0), ph(-pi, pi);
        for (Eigen::Index i = 0; i < n; ++i) psi(i) = std::polar(mod(ctx.rng), ph(ctx.rng));
    }
    const CMatrix K = apply_rescaling(k, psi);
    const auto res = check_rescaling(K, k, tol, ctx.tol.cocycle_tol);
    json out = rescaling_json(res);
    ctx.check_true("forged_accepted", res.is_rescaling);
    if (res.witness) {
        const double e = gauge_distance(res.witness->psi, psi);
        double d = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                d = std::max(d, std::abs(matrix_kernel_distance(K, i, j) - matrix_kernel_distance(k, i, j)));
        ctx.check("psi_recovery", e, tol);
        ctx.check("distance_preserved", d, ctx.checks["distance"]);
        out["psi_error"] = e;
        out["distance_error"] = d;
    }
    if (in.contains("perturb") && n >= 2) {
        const json& pj = in.at("perturb");
        long i = pj.value("i", -1L), j = pj.value("j", -1L);
        if (i < 0 || j < 0) {
            std::uniform_int_distribution<long> idx(0, n - 1);
            i = idx(ctx.rng);
            do j = idx(ctx.rng);
            while (j == i);
        }
        if (i == j || i >= n || j >= n) throw SchemaError("perturb needs two distinct valid indices");
        CMatrix bad = K;
        bad(i, j) *= 1.0 + pj.value("factor", 1e-3);
        bad(j, i) = std::conj(bad(i, j));
        const auto rej = check_rescaling(bad, k, tol, ctx.tol.cocycle_tol);
        const bool named = rej.violation && ((rej.violation->i == i && rej.violation->j == j) ||
                                             (rej.violation->i == j && rej.violation->j == i));
        ctx.check_true("perturbed_rejected_with_pair", !rej.is_rescaling && named);
        out["perturbed"] = rescaling_json(rej);
        out["perturbed"]["pair"] = {i, j};
    }
    return out;
}

// bezout ----------------------------------------------------------------------

json solution_json(const BezoutSolution& s) {
    return {{"g", to_json(s.g.values)},
            {"norm", s.norm},
            {"objective", s.objective},
            {"residual", s.residual},
            {"per_channel_norms", s.per_channel_norms},
            {"components", s.components}};
}

bool contains_point(const PointSet& pts, const Point& a) {
    return std::any_of(pts.points.begin(), pts.points.end(), [&](const Point& p) { return (p - a).norm() == 0.0; });
}

json bezout(const json& in, Context& ctx) {
    const auto spec = kernel_of(in, ctx);
    const auto pts = points_of(in, spec, ctx);
    const CMatrix phi = channels_of(require(in, "phi"), pts.size(), ctx);
    const ShiftConfig shift = shift_of(in, pts, ctx);
    const SampleFunction sphi{pts, phi};
    json out{{"kernel", to_string(spec.family)}, {"shift", shift_json(shift)}};

    if (in.contains("divide_by_kernel_at")) {
        const json& aj = in.at("divide_by_kernel_at");
        const Point a = aj.is_object() ? random_point_in(spec.domain(), ctx.rng, aj.value("rmax", 0.9))
                                       : parse_point(aj, spec.domain());
        const CVector kt = normalized_kernel_values(Kernel(spec), a, pts);
        const auto f = solve_bezout_min_norm(BezoutProblem{spec, pts, sphi, kt, ShiftConfig::unshifted(), 0.0}, ctx.tol);
        const auto g = divide_by_kernel(spec, pts, sphi, a, f, ctx.tol);
        const auto G = build_gram(spec, pts, ctx.tol);
        double worst = 0.0;
        std::vector<double> fnorms;
        for (Eigen::Index l = 0; l < phi.cols(); ++l) {
            const double fl = min_norm_interpolation(G, SampleFunction::scalar(pts, f.g.values.col(l)), ctx.tol).value;
            fnorms.push_back(fl);
            worst = std::max(worst, std::abs(g.per_channel_norms[static_cast<std::size_t>(l)] - fl) / std::max(1.0, fl));
        }
        ctx.check("divide_norm", worst, ctx.checks["divide_norm"]);
        ctx.check("divide_residual", g.residual, ctx.checks["zero_residual"]);
        out["a"] = to_json(a, true);
        out["f"] = solution_json(f);
        out["g"] = solution_json(g);
        out["f_channel_norms"] = fnorms;
        out["norm_mismatch"] = worst;
        return out;
    }

    const CVector rhs = in.contains("rhs") ? parse_cvector(in.at("rhs")) : CVector::Ones(static_cast<Eigen::Index>(pts.size()));
    const auto s = solve_bezout_min_norm(BezoutProblem{spec, pts, sphi, rhs, shift, in.value("lower_bound_c", 0.0)}, ctx.tol);
    ctx.check("bezout_residual", s.residual, ctx.tol.bezout_residual * (1.0 + rhs.cwiseAbs().maxCoeff()));
    out["solution"] = solution_json(s);

    bool has_origin = contains_point(pts, Point::Zero(spec.domain().dim));
    for (const auto& a : shift.base_points) has_origin = has_origin && contains_point(pts, a);
    const double one = convex_shift_norm(spec, pts, shift, SampleFunction::constant(pts, 1.0), ctx.tol).value;
    out["norm_of_one"] = one;
    if (has_origin) ctx.check("constant_norm", std::abs(one - 1.0), ctx.checks["constant_norm"]);
    return out;
}

// saddle ----------------------------------------------------------------------

struct Scan {
    double grid = -std::numeric_limits<double>::infinity();
    double value = -std::numeric_limits<double>::infinity();
    std::vector<double> theta;
};

void for_each_grid_point(std::size_t dim, int res, const std::function<void(const std::vector<double>&)>& fn) {
    std::vector<int> c(dim, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == dim) {
            c[i] = left;
            std::vector<double> t(dim);
            for (std::size_t m = 0; m < dim; ++m) t[m] = static_cast<double>(c[m]) / res;
            fn(t);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            c[i] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, res);
}

/// Grid scan at resolution 1/res followed by pairwise coordinate refinement around the best node.
Scan simplex_scan(std::size_t dim, int res, const std::function<double(const std::vector<double>&)>& V) {
    Scan s;
    for_each_grid_point(dim, res, [&](const std::vector<double>& t) {
        const double v = V(t);
        if (v > s.grid) {
            s.grid = v;
            s.theta = t;
        }
    });
    s.value = s.grid;
    for (double h = 1.0 / res; h > 1e-12; h *= 0.5) {
        bool moved = true;
        while (moved) {
            moved = false;
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) {
                    if (i == j) continue;
                    const double step = std::min(h, s.theta[j]);
                    if (step <= 0.0) continue;
                    auto t = s.theta;
                    t[i] += step;
                    t[j] -= step;
                    const double v = V(t);
                    if (v > s.value) {
                        s.value = v;
                        s.theta = t;
                        moved = true;
                    }
                }
        }
    }
    return s;
}

json saddle(const json& in, Context& ctx) {
    const auto spec = kernel_of(in, ctx);
    const auto pts = points_of(in, spec, ctx);
    CMatrix phi = channels_of(require(in, "phi"), pts.size(), ctx);
    if (in.contains("phi_floor")) {
        const double fl = in.at("phi_floor").get<double>();
        for (Eigen::Index i = 0; i < phi.rows(); ++i) {
            const double n = phi.row(i).norm();
            if (n < fl) phi.row(i) *= fl / std::max(n, std::numeric_limits<double>::min());
        }
    }
    const auto base = base_points_of(in.value("base_points", json::array()), pts, ctx);
    SaddleOptions opt;
    opt.max_iterations = in.value("max_iterations", opt.max_iterations);
    const SampleFunction sphi{pts, phi};
    const auto r = saddle_value(spec, pts, sphi, base, opt, ctx.tol);
    ctx.check_true("saddle_converged", r.converged);
    json out{{"kernel", to_string(spec.family)},
             {"value", r.value},
             {"theta_star", r.theta_star.theta},
             {"upper_bound", r.upper_bound},
             {"duality_gap", r.duality_gap},
             {"iterations", r.iterations},
             {"converged", r.converged},
             {"g_star", to_json(r.g_star.g.values)}};

    const ShiftedForms forms(spec, pts, base, ctx.tol);
    const CVector ones = CVector::Ones(static_cast<Eigen::Index>(pts.size()));
    const int res = in.value("scan_resolution", 0);
    if (res > 0) {
        auto V = [&](const std::vector<double>& t) { return solve_bezout_min_norm(forms, phi, ones, t, ctx.tol).objective; };
        const auto scan = simplex_scan(base.size() + 1, res, V);
        const double rel = std::abs(r.value - scan.value) / scan.value;
        ctx.check("saddle_scan", rel, ctx.checks["saddle_scan"]);
        out["scan"] = {{"resolution", res}, {"grid_max", scan.grid}, {"refined_max", scan.value},
                       {"theta", scan.theta}, {"relative_difference", rel}};
    }
    const int competitors = in.value("competitors", 0);
    if (competitors > 0) {
        std::normal_distribution<double> g(0.0, 0.3);
        const Eigen::VectorXd n2 = phi.rowwise().squaredNorm();
        double worst = -std::numeric_limits<double>::infinity();
        for (int c = 0; c < competitors; ++c) {
            CMatrix h(phi.rows(), phi.cols());
            for (Eigen::Index i = 0; i < phi.rows(); ++i) {
                CVector u(phi.cols());
                for (Eigen::Index l = 0; l < phi.cols(); ++l) u(l) = cplx(g(ctx.rng), g(ctx.rng));
                const cplx s = phi.row(i).transpose().cwiseProduct(u).sum();
                for (Eigen::Index l = 0; l < phi.cols(); ++l) h(i, l) = u(l) - s * std::conj(phi(i, l)) / n2(i);
            }
            const CMatrix cand = r.g_star.g.values + h;
            const auto comps = forms.component_values(cand);
            const double w = *std::max_element(comps.begin(), comps.end());
            worst = std::max(worst, (r.value - w) / w);
        }
        ctx.check("duality", worst, ctx.checks["duality"]);
        out["weak_duality"] = {{"competitors", competitors}, {"max_relative_excess", worst}};
    }
    return out;
}

// outer -----------------------------------------------------------------------

json outer(const json& in, Context& ctx) {
    const DomainSpec disk{DomainKind::disk, 1};
    PointSet none;
    none.domain = disk;
    const ShiftConfig shift = shift_of(json{{"shift", in.contains("shift") ? in.at("shift") : in}}, none, ctx);
    const int nodes = ctx.nodes > 0 ? ctx.nodes : in.value("nodes", 4096);
    const int degree = in.value("degree", 8);
    const auto F = construct_outer(shift, nodes);
    const auto rep = verify_outer_identity(F, shift, degree);
    ctx.check("outer_boundary", rep.boundary_rel_error, ctx.checks["outer_boundary"]);
    ctx.check("outer_norm", std::abs(rep.h2_norm - 1.0), ctx.checks["outer_norm"]);
    ctx.check("outer_identity", rep.max_discrepancy, ctx.checks["outer_identity"]);
    bool trivial = std::all_of(shift.theta.begin() + 1, shift.theta.end(), [](double t) { return t == 0.0; });
    if (trivial) {
        const bool exact = std::all_of(F.log_coeffs.begin(), F.log_coeffs.end(), [](cplx c) { return c == cplx(0.0); });
        ctx.check_true("unshifted_is_one", exact);
    }
    write_text(in, "csv_output", outer_profile_csv(F));
    std::vector<cplx> head(F.log_coeffs.begin(), F.log_coeffs.begin() + std::min<std::ptrdiff_t>(33, F.log_coeffs.size()));
    return {{"shift", shift_json(shift)},
            {"nodes", nodes},
            {"degree", degree},
            {"F_at_0", to_json(F(0.0))},
            {"log_coeffs_head", to_json(PowerSeries1D(head))},
            {"boundary_rel_error", rep.boundary_rel_error},
            {"h2_norm", rep.h2_norm},
            {"max_discrepancy", rep.max_discrepancy},
            {"worst_pair", {rep.worst_i, rep.worst_j}},
            {"min_abs_boundary", rep.min_abs_boundary},
            {"max_abs_boundary", rep.max_abs_boundary}};
}

// imp-falsify -------------------------------------------------------------------

json imp_falsify(const json& in, Context& ctx) {
    auto cfg = FalsifierConfig::standard(parse_complex(in.value("alpha", json(0.5))), in.value("n", 2));
    cfg.polydisc = in.value("polydisc", false);
    if (ctx.nodes > 0) cfg.lambda_nodes = ctx.nodes;
    cfg.fd_step = in.value("fd_step", cfg.fd_step);
    if (in.contains("grid")) {
        const json& g = in.at("grid");
        cfg.grid = FalsifierConfig::polar_grid(g.value("rings", 21), g.value("rays", 21), g.value("radius", 0.8));
    }
    const auto rep = falsify_report(cfg);
    if (std::abs(cfg.alpha) > 0.0) {
        ctx.check("laplacian_positive", -rep.min_laplacian, 0.0);
        ctx.check("g_increment_positive", -rep.g_increment, 0.0);
    }
    ctx.check("imp_fd", rep.max_fd_rel_error, ctx.checks["imp_fd"]);
    write_text(in, "csv_output", falsifier_csv(cfg));
    return {{"alpha", to_json(cfg.alpha)},
            {"n", cfg.n},
            {"polydisc", cfg.polydisc},
            {"lambda_nodes", cfg.lambda_nodes},
            {"grid_points", cfg.grid.size()},
            {"falsified", rep.falsified},
            {"conclusion", rep.conclusion},
            {"min_laplacian", rep.min_laplacian},
            {"max_laplacian", rep.max_laplacian},
            {"g_min", rep.g_min},
            {"g_max", rep.g_max},
            {"g_range", rep.g_range},
            {"g_increment", rep.g_increment},
            {"max_fd_rel_error", rep.max_fd_rel_error},
            {"radial_profile_monotone", rep.radial_profile_monotone},
            {"polydisc_reduces_to_ball_slice", rep.polydisc_reduces_to_ball_slice}};
}

// carleson --------------------------------------------------------------------

json carleson_one(const std::string& name, const DiscreteMeasure& mu, const std::vector<double>& sigmas, double p,
                  Context& ctx) {
    const auto probes = default_probe_grid(mu);
    json rows = json::array();
    for (double sigma : sigmas) {
        const auto b = box_norm(mu, sigma, p);
        const double t = testing_norm(mu, sigma, p, probes);
        json row{{"sigma", sigma},
                 {"box_norm", b.value},
                 {"box", {{"center", b.box.center}, {"radius", b.box.radius}, {"mass", b.box_mass}}},
                 {"testing_norm", t}};
        if (b.value > 0.0) {
            const double ratio = t / b.value;
            row["ratio"] = ratio;
            const double c = ctx.checks["carleson_ratio"];
            ctx.check("carleson_ratio", std::max(ratio, 1.0 / ratio), c);
        } else {
            row["ratio"] = nullptr;
        }
        rows.push_back(row);
    }
    return {{"name", name}, {"total_mass", mu.total_mass()}, {"points", mu.size()}, {"norms", rows}};
}

json carleson(const json& in, Context& ctx) {
    const auto sigmas = parse_real_list(in.value("sigma", json::array({0.25, 0.5, 1.0})));
    const double p = in.value("p", 2.0);
    json out{{"p", p}, {"measures", json::array()}};
    if (in.contains("measures")) {
        for (const auto& m : in.at("measures"))
            out["measures"].push_back(carleson_one(m.value("name", std::string("measure")), parse_measure(m), sigmas, p, ctx));
    } else {
        out["measures"].push_back(carleson_one(in.value("name", std::string("measure")), parse_measure(require(in, "measure")),
                                               sigmas, p, ctx));
    }
    return out;
}

// besov -----------------------------------------------------------------------

json besov(const json& in, Context& ctx) {
    BesovParams bp{in.value("sigma", 0.5), in.value("p", 2.0), in.value("alpha", 0.0), in.value("m", 1)};
    bp.validate();
    const auto m_values = in.contains("m_values") ? parse_real_list(in.at("m_values")) : std::vector<double>{};
    std::vector<std::pair<std::string, PowerSeries1D>> fs;
    if (in.contains("functions")) {
        for (const auto& f : in.at("functions")) fs.emplace_back(f.value("name", std::string("f")), parse_series(f));
    } else {
        fs.emplace_back("f", parse_series(require(in, "f")));
    }
    const bool kps = in.value("kps", false);
    json rows = json::array();
    double C = 0.0, lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const auto& [name, f] : fs) {
        json row{{"name", name}, {"seminorm", besov_seminorm_disk(f, bp)}, {"norm", besov_norm_disk(f, bp)}};
        if (!m_values.empty()) {
            json eq = json::array();
            const double base = besov_norm_disk(f, {bp.sigma, bp.p, bp.alpha, static_cast<int>(m_values.front())});
            for (double m : m_values) {
                const double n = besov_norm_disk(f, {bp.sigma, bp.p, bp.alpha, static_cast<int>(m)});
                eq.push_back({{"m", static_cast<int>(m)}, {"norm", n}, {"ratio_to_first", n / base}});
                lo = std::min(lo, n / base);
                hi = std::max(hi, n / base);
            }
            row["norms_by_m"] = eq;
        }
        if (in.contains("kernel_at")) {
            const cplx w = parse_complex(in.at("kernel_at"));
            const auto c = besov_kernel_coeffs(bp.sigma, bp.alpha, bp.p, ctx.trunc);
            PowerSeries1D kw;
            cplx pw = 1.0;
            for (std::size_t k = 0; k < c.size(); ++k, pw *= std::conj(w)) kw.coeffs.push_back(c.coeffs[k] * pw);
            const auto pr = besov_pairing_disk(f, kw, bp);
            const double err = std::abs(pr.value - f(w));
            ctx.check("besov_reproducing", err, ctx.checks["besov_reproducing"]);
            row["pairing_with_kernel"] = {{"w", to_json(w)}, {"value", to_json(pr.value)}, {"f_at_w", to_json(f(w))},
                                          {"error", err}, {"norm_f", pr.norm_f}, {"norm_k", pr.norm_g}};
        }
        if (in.contains("g")) {
            const auto pr = besov_pairing_disk(f, parse_series(in.at("g")), bp);
            row["pairing"] = {{"value", to_json(pr.value)}, {"norm_f", pr.norm_f}, {"norm_g", pr.norm_g}};
        }
        if (kps) {
            const auto a = kps_norm_disk(f, bp.sigma, bp.p, bp.m);
            const auto b = kps_norm_disk(f * f, bp.sigma, bp.p, bp.m);
            const double ratio = b.value / (a.value * a.value);
            C = std::max(C, ratio);
            ctx.check_true("kps_finite", std::isfinite(a.value) && std::isfinite(b.value));
            row["kps"] = {{"norm", a.value}, {"sup_norm", a.sup_norm}, {"carleson", a.carleson.value},
                          {"norm_of_square", b.value}, {"ratio", ratio}};
        }
        rows.push_back(row);
    }
    json out{{"sigma", bp.sigma}, {"p", bp.p}, {"alpha", bp.alpha}, {"m", bp.m}, {"functions", rows}};
    if (!m_values.empty()) out["norm_equivalence_range"] = {lo, hi};
    if (kps) out["empirical_algebra_constant"] = C;
    return out;
}

// dbar ------------------------------------------------------------------------

/// sum_k c_k z^{a_k} conj(z)^{b_k} from [{"c", "z", "zbar"}, ...].
std::function<cplx(cplx)> parse_zzbar(const json& j) {
    std::vector<std::tuple<cplx, int, int>> terms;
    if (!j.is_array()) throw SchemaError("polynomial in z and conj(z) must be a list of terms");
    for (const auto& t : j) {
        const int a = t.value("z", 0), b = t.value("zbar", 0);
        if (a < 0 || b < 0) throw SchemaError("exponents must be nonnegative");
        terms.emplace_back(parse_complex(t.value("c", json(1.0))), a, b);
    }
    return [terms](cplx z) {
        cplx s = 0.0;
        for (const auto& [c, a, b] : terms) s += c * std::pow(z, a) * std::pow(std::conj(z), b);
        return s;
    };
}

json dbar(const json& in, Context& ctx) {
    json out = json::object();
    if (in.contains("cauchy_pompeiu")) {
        const json& cj = in.at("cauchy_pompeiu");
        const auto g = parse_zzbar(require(cj, "g"));
        const PolarMesh mesh = PolarMesh::make(cj.value("radial_nodes", 64), cj.value("angular_nodes", 128));
        const CauchyPompeiuSolver u(GridField::sample(mesh, g));
        const auto lattice = disk_lattice(cj.value("spacing", 0.05), 1.0);
        const auto vals = u.evaluate(lattice);
        json res{{"lattice_points", lattice.size()}};
        if (cj.contains("exact")) {
            const auto ex = parse_zzbar(cj.at("exact"));
            double err = 0.0;
            for (std::size_t i = 0; i < lattice.size(); ++i) err = std::max(err, std::abs(vals[i] - ex(lattice[i])));
            ctx.check("cauchy_pompeiu", err, ctx.checks["cauchy_pompeiu"]);
            res["max_error_vs_exact"] = err;
        }
        const std::function<cplx(cplx)> f = [&](cplx z) { return u(z); };
        double fd = 0.0;
        for (cplx z : disk_lattice(0.1, 0.9)) fd = std::max(fd, std::abs(dbar_fd(f, z) - g(z)));
        ctx.check("cauchy_pompeiu_fd", fd, ctx.checks["jones_fd"]);
        res["fd_dbar_error"] = fd;
        write_text(cj, "csv_output", GridField::sample(mesh, g).to_csv());
        out["cauchy_pompeiu"] = res;
    }
    if (in.contains("jones")) {
        const json& jj = in.at("jones");
        json rows = json::array();
        const int bn = ctx.nodes > 0 ? ctx.nodes : jj.value("boundary_nodes", 512);
        for (const auto& m : require(jj, "measures")) {
            const auto data = JonesData::from_measure(parse_measure(m));
            const auto rep = jones_check(data, jj.value("spacing", 0.05), bn, jj.value("exclusion", 0.05));
            ctx.check("jones_fd", rep.fd_residual, ctx.checks["jones_fd"]);
            ctx.check_true("jones_boundary_finite", std::isfinite(rep.boundary_sup));
            rows.push_back({{"name", m.value("name", std::string("measure"))},
                            {"carleson_norm", rep.carleson_norm},
                            {"data_mass", rep.data_mass},
                            {"boundary_sup", finite_or_string(rep.boundary_sup)},
                            {"fd_residual", rep.fd_residual},
                            {"checked_points", rep.checked_points}});
        }
        out["jones"] = rows;
    }
    if (in.contains("sobolev")) {
        const json& sj = in.at("sobolev");
        const auto f = parse_series(require(sj, "f"));
        const int n = ctx.nodes > 0 ? ctx.nodes : sj.value("samples", 1024);
        std::vector<cplx> samples(static_cast<std::size_t>(std::max(n, 0)));
        for (int j = 0; j < n; ++j) samples[static_cast<std::size_t>(j)] = f(std::polar(1.0, 2.0 * pi * j / n));
        const auto r = boundary_sobolev_norm(samples, sj.value("sigma", 0.25), sj.value("p", 2.0));
        ctx.check_true("sobolev_converged", r.converged);
        out["sobolev"] = {{"value", r.value},
                          {"lp_term", r.lp_term},
                          {"difference_integral", r.difference_integral},
                          {"difference_integral_half", r.difference_integral_half},
                          {"converged", r.converged},
                          {"poisson_integral", r.poisson_integral},
                          {"form_ratio", r.form_ratio}};
    }
    if (out.empty()) throw SchemaError("dbar needs at least one of cauchy_pompeiu, jones, sobolev");
    return out;
}

// corona-disk -----------------------------------------------------------------

json corona_disk(const json& in, Context& ctx) {
    std::vector<PowerSeries1D> phi;
    for (const auto& f : require(in, "phi")) phi.push_back(parse_series(f));
    if (phi.empty()) throw SchemaError("phi must list at least one function");
    KoszulOptions opt;
    opt.radial_nodes = in.value("radial_nodes", opt.radial_nodes);
    opt.angular_nodes = in.value("angular_nodes", opt.angular_nodes);
    if (ctx.nodes > 0) opt.boundary_nodes = ctx.nodes;
    opt.lattice_spacing = in.value("lattice_spacing", opt.lattice_spacing);
    opt.kps_sigma = in.value("kps_sigma", opt.kps_sigma);
    opt.kps_p = in.value("kps_p", opt.kps_p);
    const double c = in.contains("c") ? in.at("c").get<double>() : certify_lower_bound(phi, opt.certify_spacing);
    const auto rep = koszul_corona_disk(phi, c, opt);
    ctx.check("corona_residual", rep.residual, ctx.checks["corona_residual"]);
    ctx.check_true("sup_finite", std::all_of(rep.sup_f.begin(), rep.sup_f.end(), [](double s) { return std::isfinite(s); }));
    ctx.check_true("kps_finite",
                   std::all_of(rep.kps_norms.begin(), rep.kps_norms.end(), [](double s) { return std::isfinite(s); }));
    json f = json::array();
    for (const auto& s : rep.f) f.push_back(to_json(s));
    return {{"c", c},
            {"c_certified", rep.c_certified},
            {"single_inverse", rep.single_inverse},
            {"inverse_index", rep.inverse_index},
            {"residual", rep.residual},
            {"residual_direct", rep.residual_direct},
            {"dbar_residual", rep.dbar_residual},
            {"negative_frequency_energy", rep.negative_frequency_energy},
            {"antisymmetry_error", rep.antisymmetry_error},
            {"sup_f", real_list(rep.sup_f)},
            {"kps_norms", real_list(rep.kps_norms)},
            {"f", f}};
}

using Handler = json (*)(const json&, Context&);

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> h{
        {"kernel-eval", kernel_eval}, {"gram", gram},       {"mult-norm", mult_norm},
        {"kmult-norm", kmult_norm},   {"rescale-check", rescale_check}, {"bezout", bezout},
        {"saddle", saddle},           {"outer", outer},     {"imp-falsify", imp_falsify},
        {"carleson", carleson},       {"besov", besov},     {"dbar", dbar},
        {"corona-disk", corona_disk},
    };
    return h;
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& kv : handlers()) n.push_back(kv.first);
        return n;
    }();
    return names;
}

json run_command(const std::string& command, const json& input, Context& ctx) {
    const auto it = handlers().find(command);
    if (it == handlers().end()) throw SchemaError("unknown command '" + command + "'");
    if (!input.is_object()) throw SchemaError("input must be a JSON object");
    return it->second(input, ctx);
}

json run_report(const std::string& command, const json& input, Context& ctx, std::uint64_t seed) {
    if (!input.is_object()) throw SchemaError("input must be a JSON object");
    if (input.contains("schema_version") && input.at("schema_version") != schema_version)
        throw SchemaError("unsupported schema_version " + input.at("schema_version").dump());
    if (input.contains("command") && input.at("command") != command)
        throw SchemaError("input is for command " + input.at("command").dump() + ", not '" + command + "'");
    if (input.contains("tolerances")) apply_tolerance_overrides(input.at("tolerances"), ctx.tol, ctx.checks);

    json defaults = input;
    for (const char* k : {"instances", "repeat", "schema_version", "command", "tolerances"}) defaults.erase(k);
    std::vector<json> instances;
    if (input.contains("instances")) {
        if (!input.at("instances").is_array()) throw SchemaError("'instances' must be a list");
        for (const auto& e : input.at("instances")) {
            if (!e.is_object()) throw SchemaError("each instance must be an object");
            json merged = defaults;
            for (const auto& [k, v] : e.items()) merged[k] = v;
            instances.push_back(merged);
        }
    } else {
        instances.push_back(defaults);
    }
    const int top_repeat = input.value("repeat", 1);
    json results = json::array();
    for (auto& inst : instances) {
        const int rep = inst.value("repeat", top_repeat);
        if (rep < 1) throw SchemaError("'repeat' must be positive");
        inst.erase("repeat");
        for (int r = 0; r < rep; ++r) results.push_back(run_command(command, inst, ctx));
    }
    json report{{"schema_version", schema_version},
                {"command", command},
                {"seed", seed},
                {"tolerances", tolerances_to_json(ctx.tol, ctx.checks)},
                {"nodes", ctx.nodes},
                {"trunc", ctx.trunc}};
    report["result"] = results.size() == 1 ? results[0] : json{{"runs", results.size()}, {"instances", results}};
    report["checks"] = ctx.summary_json();
    report["status"] = ctx.all_passed() ? "ok" : "tolerance_breach";
    return report;
}

}  // namespace coronakit::cli
