#pragma once

#include <optional>
#include <vector>

#include "genergy/highprec.hpp"

namespace genergy {

// Evaluation state for the closed-form spectral expressions at the imaginary
// point ix, expressed through the real quantities
//   Z1 = (x + sqrt(x^2+4))/2,  Z2 = (x - sqrt(x^2+4))/2,  Z1 Z2 = -1.
// All members are computed once at the requested precision (decimal digits)
// and immutable afterwards.
class ClosedFormContext {
  public:
    explicit ClosedFormContext(const Real& x, std::optional<long> t = std::nullopt,
                               unsigned digits = kDefaultDigits);

    unsigned digits() const { return digits_; }
    const Real& x() const { return x_; }
    const Real& z1() const { return z1_; }
    const Real& z2() const { return z2_; }
    const Real& a1() const { return a1_; }  // A_1(ix) > 0
    const Real& a2() const { return a2_; }  // A_2(ix) > 0
    const Real& g12() const { return g12_; }
    const Real& g13() const { return g13_; }
    std::optional<long> t() const { return t_; }
    // C_j(ix); throws UsageError when the context was built without t.
    const Real& c1() const;
    const Real& c2() const;

    // C_j(ix) for an explicit cycle parameter (uses the cache when it matches).
    // Requires tt >= 3 and tt = 2 (mod 4): the simplified forms assume that
    // parity.
    std::pair<Real, Real> c_pair(long tt) const;

  private:
    unsigned digits_;
    Real x_, s_, z1_, z2_, g12_, g13_, a1_, a2_;
    std::optional<long> t_;
    bool c_cached_ = false;
    Real c1_, c2_;
};

// i^{-n} phi(G, ix) for the four families, as real numbers (Lemmas 4-6).
Real phi_path_ix(int n, const ClosedFormContext& ctx);       // n >= 4
Real phi_cycle_ix(int n, const ClosedFormContext& ctx);      // even n >= 4
Real phi_p66_ix(int n, const ClosedFormContext& ctx);        // n >= 12
Real phi_r_ix(int n, long t, const ClosedFormContext& ctx);  // n = 0, t = 2 (mod 4)

// K(n,t,x) via the expanded Z-form; the defining product-difference form is
// recomputed internally (at raised precision) and must agree, otherwise a
// logic error is thrown. Preconditions: t = 2 (mod 4), t >= 10, n = 0 (mod 4),
// n >= 2t.
Real k_value(long n, long t, const ClosedFormContext& ctx);

// Product-difference form alone (for tests).
Real k_product_form(long n, long t, const ClosedFormContext& ctx);

// The seven coefficients of f(t,x) = K(2t,t,x) as functions of x.
struct FCoefficients {
    Real alpha0, alpha1, beta0, beta1, gamma0, gamma1, a0;
};
FCoefficients f_coeffs(const ClosedFormContext& ctx);

// f(t,x) assembled from FCoefficients; t = 2 (mod 4), t >= 10.
Real f_value(long t, const ClosedFormContext& ctx);

// The paper's closing factored polynomial display for f(10,x), evaluated
// verbatim. Strictly negative for x != 0, zero at x = 0. (Note: this display
// does not reproduce f_value(10,.); see the f10 consistency checks.)
Real f10_explicit(const Real& x);

// Sign/property grid per the verification defaults: points_per_decade
// log-spaced points per decade over |x| in [1e-3, 1e3], both signs, plus
// +-{0.5, 1, 2, 3}. Never contains 0.
std::vector<Real> default_grid(unsigned digits = kDefaultDigits, int points_per_decade = 60);

}  // namespace genergy
