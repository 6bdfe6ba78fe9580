#pragma once

#include <string>
#include <utility>
#include <vector>

#include "genergy/bigint.hpp"
#include "genergy/highprec.hpp"

namespace genergy {

// Dense polynomial with arbitrary-precision integer coefficients.
// coeffs()[i] is the coefficient of x^i; the top coefficient is nonzero
// unless the polynomial is zero (empty coefficient vector).
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> ascending_coeffs);
    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(Int c);
    static IntPoly monomial(Int c, int power);
    // x^1
    static IntPoly x();

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const;
    // Coefficient of x^i (0 outside range).
    Int coeff(int i) const;
    // Paper-style coefficient a_i = coefficient of x^{degree-i}.
    Int coeff_from_top(int i) const { return coeff(degree() - i); }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& s) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly derivative() const;
    // gcd of |coefficients|; 0 for the zero polynomial.
    Int content() const;
    // this / content, sign unchanged.
    IntPoly primitive_part() const;
    // Exact division; throws std::logic_error if the division leaves a remainder.
    IntPoly divide_exact(const IntPoly& divisor) const;

    Int eval(const Int& v) const;
    Real eval_real(const Real& v) const;
    // Exact sign of p(num / 2^log2_den); computed as sign of 2^{d*log2_den} * p.
    int sign_at_dyadic(const Int& num, long log2_den) const;

    // "deg c_deg c_{deg-1} ... c_0", space separated decimal integers.
    std::string to_text() const;
    static IntPoly from_text(const std::string& text);

  private:
    void normalize();
    std::vector<Int> c_;
};

// Pseudo-remainder of f by g scaled by a positive power of |lc(g)|, so the
// result has the same sign as the true remainder of f/g.
IntPoly pseudo_rem_pos(const IntPoly& f, const IntPoly& g);

// Primitive gcd with positive leading coefficient (primitive PRS).
IntPoly poly_gcd(const IntPoly& f, const IntPoly& g);

// Yun square-free decomposition: p ~ prod factors[i].first ^ factors[i].second
// up to a constant; factors are primitive, square-free and pairwise coprime.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

// The two inner sums of the explicit energy formula at a real point:
// even = sum (-1)^i a_{2i} x^{2i},  odd = sum (-1)^i a_{2i+1} x^{2i+1},
// where a_i is the coefficient of x^{n-i}. even^2 + odd^2 = |x^n p(i/x)|^2.
std::pair<Real, Real> evaluate_at_ix_squared_split(const IntPoly& p, const Real& x);

// Real and imaginary parts of i^{-n} p(ix):  i^{-n} p(ix) = re - i*im.
// For polynomials with only even-index a_i (bipartite charpolys) im == 0.
std::pair<Real, Real> eval_at_ix(const IntPoly& p, const Real& x);

// Exact polynomial parts of the same decomposition: i^{-n} p(ix) = re(x) - i*im(x).
std::pair<IntPoly, IntPoly> ix_parts(const IntPoly& p);

}  // namespace genergy
