#include "lp.hpp"

#include <cmath>
#include <limits>

namespace coronakit::detail {

LpResult solve_lp_origin_feasible(const RMatrix& A, const RVector& b, const RVector& c, int max_pivots) {
    const Eigen::Index m = A.rows(), n = A.cols();
    if (b.size() != m || c.size() != n) throw ParameterError("LP dimensions do not agree");
    if ((b.array() < 0.0).any()) throw ParameterError("LP right-hand side must be nonnegative");
    // Tableau rows 0..m-1 constraints, row m objective (reduced costs, minimizing -c).
    RMatrix T = RMatrix::Zero(m + 1, n + m + 1);
    T.topLeftCorner(m, n) = A;
    T.block(0, n, m, m).setIdentity();
    T.col(n + m).head(m) = b;
    T.row(m).head(n) = -c.transpose();
    std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
    for (Eigen::Index i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = n + i;
    const double eps = 1e-12;

    int pivots = 0;
    for (;;) {
        Eigen::Index enter = -1;
        for (Eigen::Index j = 0; j < n + m; ++j)
            if (T(m, j) < -eps) {
                enter = j;
                break;
            }
        if (enter < 0) break;
        Eigen::Index leave = -1;
        double best = std::numeric_limits<double>::infinity();
        for (Eigen::Index i = 0; i < m; ++i) {
            if (T(i, enter) > eps) {
                const double ratio = T(i, n + m) / T(i, enter);
                if (ratio < best - 1e-15 ||
                    (std::abs(ratio - best) <= 1e-15 && leave >= 0 &&
                     basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                    best = ratio;
                    leave = i;
                }
            }
        }
        if (leave < 0) throw NumericalError("LP is unbounded");
        T.row(leave) /= T(leave, enter);
        for (Eigen::Index i = 0; i <= m; ++i)
            if (i != leave && T(i, enter) != 0.0) T.row(i) -= T(i, enter) * T.row(leave);
        basis[static_cast<std::size_t>(leave)] = enter;
        if (++pivots > max_pivots) throw NumericalError("LP pivot budget exhausted");
    }
    LpResult r;
    r.x = RVector::Zero(n);
    for (Eigen::Index i = 0; i < m; ++i)
        if (basis[static_cast<std::size_t>(i)] < n) r.x(basis[static_cast<std::size_t>(i)]) = T(i, n + m);
    r.y = T.row(m).segment(n, m).transpose();
    r.value = T(m, n + m);
    return r;
}

}  // namespace coronakit::detail
