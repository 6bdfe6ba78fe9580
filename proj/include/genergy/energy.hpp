#pragma once

#include <string>
#include <vector>

#include "genergy/intpoly.hpp"

namespace genergy {

enum class EnergyMethod { eigenvalue, coulson_explicit, coulson_difference };

std::string method_name(EnergyMethod m);

struct EnergyResult {
    double value = 0.0;
    EnergyMethod method = EnergyMethod::eigenvalue;
    // ascending; present for the eigenvalue method
    std::vector<double> eigenvalues;
    // certified |reported - true| bound for the eigenvalue method, quadrature
    // error estimate otherwise
    double error_bound = 0.0;
};

// Sum of |roots| of the charpoly p via exact isolation + bisection to width
// <= 1e-15. Throws ParameterError if the real root count (with multiplicity)
// does not reach deg p, i.e. p is not the charpoly of a symmetric matrix.
EnergyResult energy_eigen(const IntPoly& p);

// (1/2pi) Integral x^-2 log[(sum (-1)^i a_2i x^2i)^2 + (sum (-1)^i a_{2i+1} x^{2i+1})^2] dx
// over the real line, by adaptive quadrature after x = tan(theta).
// abs_tol is the absolute tolerance per half-line.
EnergyResult energy_coulson_explicit(const IntPoly& p, double abs_tol = 1e-9);

// E(G1) - E(G2) = (1/pi) Integral log |phi(G1; ix) / phi(G2; ix)| dx for
// equal-degree charpolys (Coulson difference form).
double energy_difference(const IntPoly& p1, const IntPoly& p2, double abs_tol = 1e-9);

struct ComparisonRecord {
    long n = 0, t = 0;
    double e_p66 = 0.0, e_r = 0.0;
    double difference = 0.0;  // e_p66 - e_r, eigenvalue method
    bool methods_agree = false;
};

// Theorem-2 comparison of P66_n against R_{n-t,t}; requires t >= 10,
// n - t >= 10, t = 2 (mod 4), n - t = 2 (mod 4). methods_agree checks the
// eigenvalue difference against the Coulson difference integral within 1e-6.
ComparisonRecord compare_families(long n, long t);

}  // namespace genergy
