#include "genergy/energy.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <memory>

#include "genergy/charpoly.hpp"
#include "genergy/errors.hpp"
#include "genergy/quadrature.hpp"
#include "genergy/rootisolation.hpp"

namespace genergy {

// ---- quadrature -------------------------------------------------------------

GaussLegendre::GaussLegendre(int order, unsigned digits) {
    nodes.resize(order);
    weights.resize(order);
    const Real one(1, digits);
    const Real eps = ldexp(one, -static_cast<int>(digits * 3.33) + 4);
    for (int i = 0; i < order; ++i) {
        // Newton from the Chebyshev-like initial guess
        Real x(std::cos(3.14159265358979323846 * (i + 0.75) / (order + 0.5)), digits);
        Real pp(0, digits);
        for (int iter = 0; iter < 200; ++iter) {
            // Legendre P_order(x) by recurrence
            Real p0 = one, p1 = x;
            for (int k = 2; k <= order; ++k) {
                Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = order * (x * p1 - p0) / (x * x - one);
            Real dx = p1 / pp;
            x -= dx;
            if (abs(dx) < eps) break;
        }
        nodes[i] = x;
        weights[i] = 2 / ((one - x * x) * pp * pp);
    }
}

namespace {

Real panel_sum(const std::function<Real(const Real&)>& f, const GaussLegendre& rule, const Real& a,
               const Real& b) {
    Real mid = (a + b) / 2, half = (b - a) / 2;
    Real s = Real::result_like(a, b);
    mpfr_set_si(s.data(), 0, MPFR_RNDN);
    for (size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return s * half;
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<Real(const Real&)>& f, const Real& a,
                                    const Real& b, const Real& abs_tol, unsigned digits,
                                    int max_depth, long max_panels) {
    static thread_local int gl_digits = -1;
    static thread_local std::unique_ptr<GaussLegendre> rule;
    if (gl_digits != static_cast<int>(digits)) {
        rule = std::make_unique<GaussLegendre>(15, digits);
        gl_digits = static_cast<int>(digits);
    }

    struct Panel {
        Real a, b, estimate;
        int depth;
    };
    QuadratureResult out{Real(0, digits), Real(0, digits), true, 0};
    std::deque<Panel> work;
    work.push_back({a, b, panel_sum(f, *rule, a, b), 0});
    out.evaluations += 15;
    long panels = 1;
    while (!work.empty()) {
        Panel p = std::move(work.front());
        work.pop_front();
        Real mid = (p.a + p.b) / 2;
        Real left = panel_sum(f, *rule, p.a, mid);
        Real right = panel_sum(f, *rule, mid, p.b);
        out.evaluations += 30;
        Real err = abs(p.estimate - left - right);
        // width-proportional budget, with an absolute floor so that cascades
        // toward an integrable endpoint singularity terminate
        Real budget = abs_tol * (p.b - p.a) / (b - a);
        Real err_floor = abs_tol * 1e-6;
        if (budget < err_floor) budget = err_floor;
        if (err < budget || p.depth >= max_depth) {
            out.value += left + right;
            out.error_estimate += err;
            if (p.depth >= max_depth && err >= budget) out.converged = false;
        } else {
            panels += 2;
            if (panels > max_panels) {
                out.converged = false;
                out.value += left + right;
                out.error_estimate += err;
                continue;
            }
            work.push_back({p.a, mid, std::move(left), p.depth + 1});
            work.push_back({mid, p.b, std::move(right), p.depth + 1});
        }
    }
    return out;
}

// ---- eigenvalue energy --------------------------------------------------------

std::string method_name(EnergyMethod m) {
    switch (m) {
        case EnergyMethod::eigenvalue: return "eigenvalue";
        case EnergyMethod::coulson_explicit: return "coulson-explicit";
        case EnergyMethod::coulson_difference: return "coulson-difference";
    }
    return "?";
}

EnergyResult energy_eigen(const IntPoly& p) {
    if (p.is_zero()) throw ParameterError("energy of the zero polynomial is undefined");
    const int n = p.degree();
    constexpr double kWidth = 1e-15;
    constexpr unsigned kSumDigits = 60;
    auto roots = real_roots_with_multiplicity(p, kWidth);
    int count = 0;
    for (const auto& r : roots) count += r.multiplicity;
    if (count != n)
        throw ParameterError("polynomial has " + std::to_string(count) + " real roots but degree " +
                             std::to_string(n) + "; not a symmetric-matrix charpoly");

    Real sum(0, kSumDigits);
    double err = 0.0;
    EnergyResult out;
    out.method = EnergyMethod::eigenvalue;
    for (const auto& r : roots) {
        Real v = r.midpoint_real(kSumDigits);
        sum += abs(v) * r.multiplicity;
        err += r.multiplicity * (r.width() / 2);
        for (int m = 0; m < r.multiplicity; ++m) out.eigenvalues.push_back(r.approx());
    }
    out.value = sum.convert_to<double>();
    out.error_bound = err + std::abs(out.value) * 1e-15;  // conversion slack
    return out;
}

// ---- Coulson explicit formula ---------------------------------------------------

namespace {

unsigned quad_digits_for(const IntPoly& p) {
    // enough digits to hold the coefficients exactly, plus working margin
    unsigned bits = 0;
    for (const auto& c : p.coeffs()) {
        if (c != 0) bits = std::max(bits, static_cast<unsigned>(msb(abs(c))) + 1);
    }
    return std::max(50u, static_cast<unsigned>(bits * 0.302) + 30);
}

}  // namespace

EnergyResult energy_coulson_explicit(const IntPoly& p, double abs_tol) {
    if (p.is_zero()) throw ParameterError("energy of the zero polynomial is undefined");
    const unsigned digits = quad_digits_for(p);
    const Real pi = 4 * atan(Real(1, digits));

    // Even integrand: E = (1/pi) Integral_0^inf x^-2 log[even^2 + odd^2] dx,
    // mapped by x = tan(theta) onto (0, pi/2).
    auto integrand = [&](const Real& theta) -> Real {
        Real x = tan(theta);
        auto [even, odd] = evaluate_at_ix_squared_split(p, x);
        Real bracket = even * even + odd * odd;
        // x^-2 dx = x^-2 (1 + x^2) dtheta
        return log(bracket) * (1 + x * x) / (x * x);
    };
    QuadratureResult q = integrate_adaptive(integrand, Real(0, digits), pi / 2,
                                            Real(abs_tol, digits) * pi, digits, 60);
    if (!q.converged)
        throw ConvergenceError("explicit-formula quadrature did not converge",
                               q.error_estimate.convert_to<double>());
    EnergyResult out;
    out.method = EnergyMethod::coulson_explicit;
    out.value = (q.value / pi).convert_to<double>();
    out.error_bound = (q.error_estimate / pi).convert_to<double>() + std::abs(out.value) * 1e-14;
    return out;
}

double energy_difference(const IntPoly& p1, const IntPoly& p2, double abs_tol) {
    if (p1.degree() != p2.degree())
        throw ParameterError("energy_difference requires equal degrees, got " +
                             std::to_string(p1.degree()) + " and " + std::to_string(p2.degree()));
    if (p1 == p2) return 0.0;
    const unsigned digits = std::max(quad_digits_for(p1), quad_digits_for(p2));
    const Real pi = 4 * atan(Real(1, digits));

    // log |phi1(ix)/phi2(ix)| is even in x; integrate (2/pi) over (0, inf).
    auto integrand = [&](const Real& theta) -> Real {
        Real x = tan(theta);
        auto [re1, im1] = eval_at_ix(p1, x);
        auto [re2, im2] = eval_at_ix(p2, x);
        Real n1 = re1 * re1 + im1 * im1;
        Real n2 = re2 * re2 + im2 * im2;
        return log(n1 / n2) / 2 * (1 + x * x);
    };
    QuadratureResult q = integrate_adaptive(integrand, Real(0, digits), pi / 2,
                                            Real(abs_tol, digits) * pi / 2, digits, 60);
    if (!q.converged)
        throw ConvergenceError("difference quadrature did not converge",
                               q.error_estimate.convert_to<double>());
    return (q.value * 2 / pi).convert_to<double>();
}

ComparisonRecord compare_families(long n, long t) {
    if (t < 10 || n - t < 10)
        throw ParameterError("compare_families requires t >= 10 and n - t >= 10");
    if (t % 4 != 2 || (n - t) % 4 != 2)
        throw ParameterError("compare_families requires t = n - t = 2 (mod 4)");
    IntPoly p66 = phi_p66_poly(static_cast<int>(n));
    IntPoly pr = phi_r_poly(static_cast<int>(n - t), static_cast<int>(t));
    ComparisonRecord rec;
    rec.n = n;
    rec.t = t;
    rec.e_p66 = energy_eigen(p66).value;
    rec.e_r = energy_eigen(pr).value;
    rec.difference = rec.e_p66 - rec.e_r;
    double cross = energy_difference(p66, pr);
    rec.methods_agree = std::abs(rec.difference - cross) < 1e-6;
    return rec;
}

}  // namespace genergy
