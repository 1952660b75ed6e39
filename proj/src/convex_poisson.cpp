#include "coronakit/convex_poisson.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lp.hpp"

namespace coronakit {

namespace {

CMatrix regularized_inverse(const CMatrix& G, const Tolerances& tol) {
    const Eigen::Index P = G.rows();
    return interpolation_coefficients(G, CMatrix::Identity(P, P), tol);
}

CMatrix hermitize(const CMatrix& A) { return 0.5 * (A + A.adjoint()); }

}  // namespace

void ShiftConfig::validate(const DomainSpec& domain) const {
    if (theta.size() != base_points.size() + 1)
        throw ParameterError("theta must have one more entry than there are base points");
    double s = 0.0;
    for (double t : theta) {
        if (!(t >= -1e-12) || !(t <= 1.0 + 1e-12)) throw ParameterError("theta entries must lie in [0, 1]");
        s += t;
    }
    if (std::abs(s - 1.0) > 1e-9) throw ParameterError("theta must sum to 1");
    for (const auto& a : base_points) domain.require_inside(a);
}

ShiftConfig ShiftConfig::vertex(std::vector<Point> base, std::size_t m) {
    ShiftConfig s;
    s.theta.assign(base.size() + 1, 0.0);
    if (m >= s.theta.size()) throw ParameterError("vertex index out of range");
    s.theta[m] = 1.0;
    s.base_points = std::move(base);
    return s;
}

ShiftedForms::ShiftedForms(const KernelSpec& spec, const PointSet& pts, const std::vector<Point>& base_points,
                           const Tolerances& tol) {
    const Kernel k(spec);
    G_ = build_gram(spec, pts, tol).entries;
    const CMatrix Ginv = hermitize(regularized_inverse(G_, tol));
    Q_.push_back(Ginv);
    for (const auto& a : base_points) {
        CVector kt = normalized_kernel_values(k, a, pts);
        if ((kt.array().abs() == 0.0).any()) throw NumericalError("normalized kernel vanishes at a sample point");
        Q_.push_back(hermitize(kt.conjugate().asDiagonal() * Ginv * kt.asDiagonal()));
        kt_.push_back(std::move(kt));
    }
}

CMatrix ShiftedForms::combined(const std::vector<double>& theta) const {
    if (theta.size() != Q_.size()) throw ParameterError("theta length does not match the number of shifts");
    CMatrix Q = CMatrix::Zero(G_.rows(), G_.cols());
    for (std::size_t m = 0; m < Q_.size(); ++m)
        if (theta[m] != 0.0) Q += theta[m] * Q_[m];
    return Q;
}

std::vector<double> ShiftedForms::component_values(const CMatrix& g) const {
    std::vector<double> out(Q_.size(), 0.0);
    for (std::size_t m = 0; m < Q_.size(); ++m)
        for (Eigen::Index l = 0; l < g.cols(); ++l) out[m] += g.col(l).dot(Q_[m] * g.col(l)).real();
    return out;
}

ConvexNormReport convex_shift_norm(const KernelSpec& spec, const PointSet& pts, const ShiftConfig& shift,
                                   const SampleFunction& f, const Tolerances& tol) {
    shift.validate(spec.domain());
    f.validate();
    const ShiftedForms forms(spec, pts, shift.base_points, tol);
    ConvexNormReport r;
    r.components.assign(forms.components(), 0.0);
    for (std::size_t m = 0; m < forms.components(); ++m) {
        const CMatrix v = m == 0 ? f.values : CMatrix(forms.ktilde(m).asDiagonal() * f.values);
        const CMatrix xi = interpolation_coefficients(forms.gram(), v, tol);
        for (Eigen::Index l = 0; l < v.cols(); ++l) r.components[m] += v.col(l).dot(xi.col(l)).real();
    }
    double s = 0.0;
    for (std::size_t m = 0; m < r.components.size(); ++m) s += shift.theta[m] * r.components[m];
    r.value = std::sqrt(std::max(s, 0.0));
    return r;
}

void BezoutProblem::validate() const {
    spec.validate();
    pts.validate();
    phi.validate();
    if (phi.values.rows() != static_cast<Eigen::Index>(pts.size()))
        throw ParameterError("phi is not defined on the sample points");
    if (rhs.size() != static_cast<Eigen::Index>(pts.size())) throw ParameterError("rhs is not defined on the sample points");
    shift.validate(spec.domain());
    for (Eigen::Index i = 0; i < phi.values.rows(); ++i) {
        const double mx = phi.values.row(i).cwiseAbs().maxCoeff();
        if (mx == 0.0) throw InfeasibleError("all phi_l vanish at sample point " + std::to_string(i));
        if (mx < lower_bound_c)
            throw InfeasibleError("max_l |phi_l| falls below the lower bound at sample point " + std::to_string(i));
    }
}

double bezout_residual(const CMatrix& phi, const CMatrix& g, const CVector& rhs) {
    if (phi.rows() == 0) return 0.0;
    const CVector lhs = phi.cwiseProduct(g).rowwise().sum();
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

BezoutSolution solve_bezout_min_norm(const ShiftedForms& forms, const CMatrix& phi, const CVector& rhs,
                                     const std::vector<double>& theta, const Tolerances& tol) {
    const Eigen::Index P = phi.rows(), N = phi.cols();
    if (P != forms.gram().rows() || rhs.size() != P) throw ParameterError("Bezout data do not match the point set");
    for (Eigen::Index i = 0; i < P; ++i)
        if (phi.row(i).cwiseAbs().maxCoeff() == 0.0)
            throw InfeasibleError("all phi_l vanish at sample point " + std::to_string(i));
    const CMatrix Q = forms.combined(theta);
    // KKT system [I (x) Q, A^*; A, 0] [g; mu] = [0; rhs] with A = [diag(phi_1) ... diag(phi_N)].
    const Eigen::Index n = N * P + P;
    CMatrix K = CMatrix::Zero(n, n);
    for (Eigen::Index l = 0; l < N; ++l) {
        K.block(l * P, l * P, P, P) = Q;
        for (Eigen::Index i = 0; i < P; ++i) {
            K(N * P + i, l * P + i) = phi(i, l);
            K(l * P + i, N * P + i) = std::conj(phi(i, l));
        }
    }
    CVector b = CVector::Zero(n);
    b.tail(P) = rhs;
    Eigen::PartialPivLU<CMatrix> lu(K);
    CVector x = lu.solve(b);
    for (int refine = 0; refine < 2; ++refine) x += lu.solve(b - K * x);
    if (!x.allFinite()) throw NumericalError("Bezout KKT system is singular");

    BezoutSolution s;
    CMatrix g(P, N);
    for (Eigen::Index l = 0; l < N; ++l) g.col(l) = x.segment(l * P, P);
    s.residual = bezout_residual(phi, g, rhs);
    const double scale = 1.0 + (P ? rhs.cwiseAbs().maxCoeff() : 0.0);
    if (s.residual > tol.bezout_residual * scale)
        throw NumericalError("Bezout KKT solve is ill-conditioned: residual " + std::to_string(s.residual));
    s.components = forms.component_values(g);
    s.objective = 0.0;
    for (std::size_t m = 0; m < theta.size(); ++m) s.objective += theta[m] * s.components[m];
    s.objective = std::max(s.objective, 0.0);
    s.norm = std::sqrt(s.objective);
    for (Eigen::Index l = 0; l < N; ++l)
        s.per_channel_norms.push_back(std::sqrt(std::max(g.col(l).dot(Q * g.col(l)).real(), 0.0)));
    s.g.values = std::move(g);
    return s;
}

BezoutSolution solve_bezout_min_norm(const BezoutProblem& prob, const Tolerances& tol) {
    prob.validate();
    const ShiftedForms forms(prob.spec, prob.pts, prob.shift.base_points, tol);
    BezoutSolution s = solve_bezout_min_norm(forms, prob.phi.values, prob.rhs, prob.shift.theta, tol);
    s.g.points = prob.pts;
    return s;
}

BezoutSolution divide_by_kernel(const KernelSpec& spec, const PointSet& pts, const SampleFunction& phi, const Point& a,
                                const BezoutSolution& f, const Tolerances& tol) {
    const Kernel k(spec);
    spec.domain().require_inside(a);
    const CVector kt = normalized_kernel_values(k, a, pts);
    if ((kt.array().abs() == 0.0).any()) throw NumericalError("normalized kernel vanishes at a sample point");
    if (f.g.values.rows() != kt.size()) throw ParameterError("solution is not defined on the sample points");
    BezoutSolution g;
    g.g.points = pts;
    g.g.values = kt.cwiseInverse().asDiagonal() * f.g.values;
    g.residual = bezout_residual(phi.values, g.g.values, CVector::Ones(kt.size()));
    double total = 0.0;
    for (Eigen::Index l = 0; l < g.g.values.cols(); ++l) {
        const double v =
            shifted_norm(spec, pts, a, SampleFunction{pts, g.g.values.col(l)}, tol).value;
        g.per_channel_norms.push_back(v);
        total += v * v;
    }
    g.objective = total;
    g.norm = std::sqrt(total);
    return g;
}

std::vector<double> project_to_simplex(const std::vector<double>& v) {
    std::vector<double> u = v;
    std::sort(u.begin(), u.end(), std::greater<>());
    double cumsum = 0.0, tau = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        cumsum += u[j];
        const double t = (cumsum - 1.0) / static_cast<double>(j + 1);
        if (u[j] - t > 0.0) tau = t;
    }
    std::vector<double> out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out[j] = std::max(v[j] - tau, 0.0);
    return out;
}

SaddleReport saddle_value(const KernelSpec& spec, const PointSet& pts, const SampleFunction& phi,
                          const std::vector<Point>& base_points, const SaddleOptions& opt, const Tolerances& tol) {
    phi.validate();
    for (const auto& a : base_points) spec.domain().require_inside(a);
    const ShiftedForms forms(spec, pts, base_points, tol);
    const CVector rhs = CVector::Ones(static_cast<Eigen::Index>(pts.size()));
    const std::size_t dim = forms.components();

    struct Cut {
        std::vector<double> theta;
        BezoutSolution sol;
    };
    std::vector<Cut> cuts;
    auto evaluate = [&](const std::vector<double>& theta) {
        cuts.push_back({theta, solve_bezout_min_norm(forms, phi.values, rhs, theta, tol)});
        return cuts.size() - 1;
    };
    auto better = [&](std::size_t a, std::size_t b) {
        const double va = cuts[a].sol.objective, vb = cuts[b].sol.objective;
        if (va != vb) return va > vb;
        return std::lexicographical_compare(cuts[a].theta.begin(), cuts[a].theta.end(), cuts[b].theta.begin(),
                                            cuts[b].theta.end());
    };

    SaddleReport rep;
    std::vector<double> theta(dim, 1.0 / static_cast<double>(dim));
    std::size_t best = evaluate(theta);
    for (std::size_t m = 0; m < dim && dim > 1; ++m) {
        std::vector<double> e(dim, 0.0);
        e[m] = 1.0;
        const std::size_t k = evaluate(e);
        if (better(k, best)) best = k;
    }

    // Supergradient ascent warm start with diminishing steps.
    if (dim > 1) {
        const double scale = std::max(1e-300, cuts[best].sol.objective);
        for (int it = 0; it < opt.ascent_iterations; ++it) {
            const auto& grad = cuts.back().sol.components;
            const double gnorm = std::sqrt(std::inner_product(grad.begin(), grad.end(), grad.begin(), 0.0));
            if (gnorm == 0.0) break;
            std::vector<double> next(dim);
            const double step = 1.0 / ((it + 1.0) * gnorm) * (scale > 0 ? 1.0 : 0.0);
            for (std::size_t m = 0; m < dim; ++m) next[m] = cuts.back().theta[m] + step * grad[m];
            const std::size_t k = evaluate(project_to_simplex(next));
            if (better(k, best)) best = k;
        }
    }

    // Kelley cutting planes: V(theta) <= sum_m theta_m F_m(g_k) for every evaluated g_k.
    double upper = cuts[best].sol.objective;
    RVector duals;
    int iter = 0;
    for (; iter < opt.max_iterations; ++iter) {
        if (dim == 1) break;
        const auto K = static_cast<Eigen::Index>(cuts.size());
        const auto n = static_cast<Eigen::Index>(dim) + 1;
        RMatrix A = RMatrix::Zero(K + 1, n);
        RVector b = RVector::Zero(K + 1);
        RVector c = RVector::Zero(n);
        c(n - 1) = 1.0;
        for (Eigen::Index k = 0; k < K; ++k) {
            for (std::size_t m = 0; m < dim; ++m)
                A(k, static_cast<Eigen::Index>(m)) = -cuts[static_cast<std::size_t>(k)].sol.components[m];
            A(k, n - 1) = 1.0;
        }
        A.row(K).head(n - 1).setOnes();
        b(K) = 1.0;
        const auto lp = detail::solve_lp_origin_feasible(A, b, c);
        upper = lp.value;
        duals = lp.y.head(K);
        const double lower = cuts[best].sol.objective;
        if (upper - lower <= opt.rel_gap * std::max(1.0, std::abs(upper))) {
            rep.converged = true;
            break;
        }
        std::vector<double> next(dim);
        for (std::size_t m = 0; m < dim; ++m) next[m] = std::max(lp.x(static_cast<Eigen::Index>(m)), 0.0);
        const double s = std::accumulate(next.begin(), next.end(), 0.0);
        for (auto& t : next) t /= s;
        const std::size_t k = evaluate(next);
        if (better(k, best)) best = k;
    }
    if (dim == 1) rep.converged = true;
    rep.iterations = iter;

    rep.value = cuts[best].sol.objective;
    rep.theta_star = ShiftConfig{base_points, cuts[best].theta};
    rep.g_star = cuts[best].sol;
    rep.g_star.g.points = pts;

    // Mixed certificate: convex combination of the cut solutions weighted by the LP duals.
    CMatrix mix = cuts[best].sol.g.values;
    if (duals.size() > 0 && duals.sum() > 0.0) {
        mix.setZero();
        const double total = duals.sum();
        for (Eigen::Index k = 0; k < duals.size(); ++k)
            if (duals(k) > 0.0) mix += (duals(k) / total) * cuts[static_cast<std::size_t>(k)].sol.g.values;
    }
    const auto comps = forms.component_values(mix);
    rep.upper_bound = *std::max_element(comps.begin(), comps.end());
    if (dim == 1) rep.upper_bound = rep.value;
    rep.g_upper = mix;
    rep.duality_gap = rep.upper_bound - rep.value;
    return rep;
}

}  // namespace coronakit
