#pragma once

#include <vector>

#include "genergy/intpoly.hpp"

namespace genergy {

// Dyadic rational num / 2^log2_den. Intervals produced below keep both
// endpoints on the same denominator.
struct Dyadic {
    Int num;
    long log2_den = 0;
    double approx() const;
    Real to_real(unsigned digits) const;
};

// One real root of an integer polynomial, certified by exact sign counting.
// If exact, the root is precisely value(); otherwise it lies in (lo, hi)
// with sign change at the endpoints.
struct RealRoot {
    Dyadic lo, hi;
    int multiplicity = 1;
    bool exact = false;
    double approx() const;
    Real midpoint_real(unsigned digits) const;
    // hi - lo as a double upper bound (0 for exact roots).
    double width() const;
};

// Sturm chain of p (p square-free not required for the chain itself).
std::vector<IntPoly> sturm_chain(const IntPoly& p);

// Number of distinct real roots of square-free p in (a, b), both non-roots.
int sturm_count(const std::vector<IntPoly>& chain, const Dyadic& a, const Dyadic& b);

// Isolate all real roots of square-free p into disjoint intervals (or exact
// points) and bisect each interval to width <= max_width.
std::vector<RealRoot> isolate_real_roots_squarefree(const IntPoly& p, double max_width);

// All real roots of p with multiplicities (square-free decomposition first).
// Sorted ascending. Intervals refined to width <= max_width.
std::vector<RealRoot> real_roots_with_multiplicity(const IntPoly& p, double max_width = 1e-15);

}  // namespace genergy
