#pragma once

#include <functional>

#include "genergy/highprec.hpp"

namespace genergy {

struct QuadratureResult {
    Real value;
    Real error_estimate;
    bool converged = false;
    long evaluations = 0;
};

// Gauss-Legendre nodes/weights on (-1, 1), generated at the requested
// precision by Newton iteration on the Legendre recurrence.
struct GaussLegendre {
    GaussLegendre(int order, unsigned digits);
    std::vector<Real> nodes, weights;
};

// Adaptive bisection with a fixed Gauss rule per panel; the local error
// estimate is |I(panel) - I(left half) - I(right half)|. Node placement is
// strictly interior, so integrable endpoint singularities are never sampled.
QuadratureResult integrate_adaptive(const std::function<Real(const Real&)>& f, const Real& a,
                                    const Real& b, const Real& abs_tol, unsigned digits,
                                    int max_depth = 60, long max_panels = 200000);

}  // namespace genergy
