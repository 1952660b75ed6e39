#pragma once

#include <vector>

#include "coronakit/types.hpp"

namespace coronakit::detail {

struct LpResult {
    RVector x;
    /// Dual prices of the inequality rows.
    RVector y;
    double value = 0.0;
};

/// Dense tableau simplex with Bland's rule for max c^T x, A x <= b, x >= 0 and b >= 0.
LpResult solve_lp_origin_feasible(const RMatrix& A, const RVector& b, const RVector& c, int max_pivots = 100000);

}  // namespace coronakit::detail
