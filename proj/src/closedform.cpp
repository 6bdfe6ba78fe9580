#include "genergy/closedform.hpp"

#include <cmath>

#include "genergy/errors.hpp"

namespace genergy {

namespace {

// g13 = x^13 + 14x^11 + 74x^9 + 188x^7 + 245x^5 + 158x^3 + 40x
Real eval_g13(const Real& x) {
    const long c[] = {1, 14, 74, 188, 245, 158, 40};
    Real x2 = x * x;
    Real acc(c[0], x.precision());
    for (int i = 1; i < 7; ++i) acc = acc * x2 + c[i];
    return acc * x;
}

// g12 = x^12 + 13x^10 + 62x^8 + 138x^6 + 153x^4 + 81x^2 + 16
Real eval_g12(const Real& x) {
    const long c[] = {1, 13, 62, 138, 153, 81, 16};
    Real x2 = x * x;
    Real acc(c[0], x.precision());
    for (int i = 1; i < 7; ++i) acc = acc * x2 + c[i];
    return acc;
}

void check_rt_parity(long n, long t) {
    if (t < 3) throw ParameterError("r closed form requires t >= 3, got " + std::to_string(t));
    if (t % 4 != 2)
        throw ParameterError("r closed form requires t = 2 (mod 4), got t = " + std::to_string(t));
    if (n % 4 != 0)
        throw ParameterError("r closed form requires n = 0 (mod 4), got n = " + std::to_string(n));
    if (n - t < 3) throw ParameterError("r closed form requires n - t >= 3");
}

}  // namespace

ClosedFormContext::ClosedFormContext(const Real& x, std::optional<long> t, unsigned digits)
    : digits_(digits), t_(t) {
    x_ = Real(x);
    // copies keep the source precision; pin the context precision so that
    // everything derived from x_ computes at digits_ (exact when raising)
    x_.precision(digits_);
    s_ = sqrt(x_ * x_ + 4);
    z1_ = (x_ + s_) / 2;
    z2_ = (x_ - s_) / 2;
    g12_ = eval_g12(x_);
    g13_ = eval_g13(x_);
    // A_1(ix) = (Z1 g13 + g12) / (Z1^2 + 1) * Z2^12
    // A_2(ix) = (Z2 g13 + g12) / (Z2^2 + 1) * Z1^12
    // (the published A_2 display carries Z1^2+1 in the denominator; the
    //  product identity A1 A2 = obs(x) forces Z2^2+1, which is what the exact
    //  polynomial evaluations confirm)
    a1_ = (z1_ * g13_ + g12_) / (z1_ * z1_ + 1) * pow(z2_, 12);
    a2_ = (z2_ * g13_ + g12_) / (z2_ * z2_ + 1) * pow(z1_, 12);
    if (t_) {
        auto [c1, c2] = c_pair(*t_);
        c1_ = c1;
        c2_ = c2;
        c_cached_ = true;
    }
}

const Real& ClosedFormContext::c1() const {
    if (!t_) throw UsageError("context built without t: C_1 unavailable");
    return c1_;
}

const Real& ClosedFormContext::c2() const {
    if (!t_) throw UsageError("context built without t: C_2 unavailable");
    return c2_;
}

std::pair<Real, Real> ClosedFormContext::c_pair(long tt) const {
    if (tt < 3) throw ParameterError("C_j requires t >= 3, got " + std::to_string(tt));
    if (tt % 4 != 2)
        throw ParameterError("C_j simplified forms require t = 2 (mod 4), got " +
                             std::to_string(tt));
    if (c_cached_ && t_ && *t_ == tt) return {c1_, c2_};
    Real q = (x_ * x_ + 3) / (x_ * x_ + 4);
    Real z1t = pow(z1_, static_cast<unsigned>(tt));
    Real z2t = pow(z2_, static_cast<unsigned>(tt));
    Real r1 = z1_ * z1_ / pow(z1_ * z1_ + 1, 2);
    Real r2 = z2_ * z2_ / pow(z2_ * z2_ + 1, 2);
    Real c1 = 1 + q * z2t * z2t + 2 * z2t + r1;
    Real c2 = 1 + q * z1t * z1t + 2 * z1t + r2;
    return {c1, c2};
}

Real phi_path_ix(int n, const ClosedFormContext& ctx) {
    if (n < 4) throw ParameterError("path closed form stated for n >= 4, got " + std::to_string(n));
    const Real &z1 = ctx.z1(), &z2 = ctx.z2();
    // B_j(ix) = Z_j^2 / (Z_j^2 + 1)
    return pow(z1, n + 2) / (z1 * z1 + 1) + pow(z2, n + 2) / (z2 * z2 + 1);
}

Real phi_cycle_ix(int n, const ClosedFormContext& ctx) {
    if (n < 4) throw ParameterError("cycle closed form stated for n >= 4, got " + std::to_string(n));
    if (n % 2 != 0)
        throw ParameterError("cycle closed form at ix requires even n, got " + std::to_string(n));
    Real val = pow(ctx.z1(), n) + pow(ctx.z2(), n);
    return n % 4 == 0 ? val - 2 : val + 2;
}

Real phi_p66_ix(int n, const ClosedFormContext& ctx) {
    if (n < 12) throw ParameterError("p66 closed form requires n >= 12, got " + std::to_string(n));
    return ctx.a1() * pow(ctx.z1(), n) + ctx.a2() * pow(ctx.z2(), n);
}

Real phi_r_ix(int n, long t, const ClosedFormContext& ctx) {
    check_rt_parity(n, t);
    auto [c1, c2] = ctx.c_pair(t);
    Real z1t = pow(ctx.z1(), static_cast<unsigned>(t));
    Real z2t = pow(ctx.z2(), static_cast<unsigned>(t));
    return c1 * pow(ctx.z1(), n) + c2 * pow(ctx.z2(), n) + 2 * (z1t + z2t) + 4;
}

namespace {

void check_k_domain(long n, long t) {
    if (t % 4 != 2 || t < 10)
        throw ParameterError("K requires t >= 10 with t = 2 (mod 4), got t = " + std::to_string(t));
    if (n % 4 != 0 || n < 2 * t)
        throw ParameterError("K requires n >= 2t with n = 0 (mod 4), got n = " + std::to_string(n));
}

Real k_z_form(long n, long t, const ClosedFormContext& ctx) {
    auto [c1, c2] = ctx.c_pair(t);
    const Real &z1 = ctx.z1(), &z2 = ctx.z2();
    Real z14 = pow(z1, 4), z24 = pow(z2, 4);
    Real z1t = pow(z1, static_cast<unsigned>(t)), z2t = pow(z2, static_cast<unsigned>(t));
    Real z1n = pow(z1, static_cast<unsigned>(n)), z2n = pow(z2, static_cast<unsigned>(n));
    return (z14 - z24) * (ctx.a2() * c1 - ctx.a1() * c2) +
           (2 * z1t + 2 * z2t + 4) * (ctx.a1() * z1n * (1 - z14) + ctx.a2() * z2n * (1 - z24));
}

}  // namespace

Real k_product_form(long n, long t, const ClosedFormContext& ctx) {
    check_k_domain(n, t);
    Real lhs = phi_r_ix(static_cast<int>(n + 4), t, ctx) * phi_p66_ix(static_cast<int>(n), ctx);
    Real rhs = phi_p66_ix(static_cast<int>(n + 4), ctx) * phi_r_ix(static_cast<int>(n), t, ctx);
    return lhs - rhs;
}

Real k_value(long n, long t, const ClosedFormContext& ctx) {
    check_k_domain(n, t);
    Real kz = k_z_form(n, t, ctx);

    // Cross-check against the defining product difference. The products
    // cancel by roughly Z1^(n-t), so evaluate them with that many guard
    // digits on top of the context precision.
    double zmag = abs(ctx.z1()).convert_to<double>();
    double lost = (static_cast<double>(n - t) + 10.0) * std::log10(std::max(zmag, 1.0 / zmag));
    unsigned boosted = ctx.digits() + static_cast<unsigned>(lost) + 20;
    ClosedFormContext hctx(ctx.x(), t, boosted);
    Real kp = k_product_form(n, t, hctx);
    Real scale = abs(kz) + abs(kp);
    if (scale != 0) {
        Real rel = abs(kz - kp) / scale;
        Real tol = pow(Real(10, ctx.digits()), -static_cast<int>(ctx.digits()) + 25);
        if (rel > tol)
            throw std::logic_error("K forms disagree: relative gap " +
                                   rel.convert_to<std::string>());
    }
    return kz;
}

FCoefficients f_coeffs(const ClosedFormContext& ctx) {
    const Real &z1 = ctx.z1(), &z2 = ctx.z2();
    Real z14 = pow(z1, 4), z24 = pow(z2, 4);
    Real d4 = z14 - z24;
    Real q = (ctx.x() * ctx.x() + 3) / (ctx.x() * ctx.x() + 4);
    Real r1 = z1 * z1 / pow(z1 * z1 + 1, 2);
    Real r2 = z2 * z2 / pow(z2 * z2 + 1, 2);
    FCoefficients fc;
    fc.alpha0 = 2 * ctx.a1() * (1 - z14);
    fc.alpha1 = 2 * ctx.a2() * (1 - z24);
    fc.beta0 = ctx.a1() * (4 * (1 - z14) - d4 * q);
    fc.beta1 = ctx.a2() * (4 * (1 - z24) + d4 * q);
    fc.gamma0 = 2 * ctx.a1() * ((1 - z14) - d4);
    fc.gamma1 = 2 * ctx.a2() * ((1 - z24) + d4);
    fc.a0 = d4 * (ctx.a2() * (1 + r1) - ctx.a1() * (1 + r2));
    return fc;
}

Real f_value(long t, const ClosedFormContext& ctx) {
    if (t % 4 != 2 || t < 10)
        throw ParameterError("f requires t >= 10 with t = 2 (mod 4), got t = " + std::to_string(t));
    FCoefficients fc = f_coeffs(ctx);
    Real z1t = pow(ctx.z1(), static_cast<unsigned>(t));
    Real z1mt = 1 / z1t;
    Real z1t2 = z1t * z1t, z1mt2 = z1mt * z1mt;
    Real z1t3 = z1t2 * z1t, z1mt3 = z1mt2 * z1mt;
    return fc.alpha0 * z1t3 + fc.alpha1 * z1mt3 + fc.beta0 * z1t2 + fc.beta1 * z1mt2 +
           fc.gamma0 * z1t + fc.gamma1 * z1mt + fc.a0;
}

Real f10_explicit(const Real& x) {
    Real x2 = x * x;
    const long big[] = {1, 23, 224, 1203, 3887, 7731, 9285, 6301, 2077, 224};
    Real acc(big[0], x.precision());
    for (int i = 1; i < 10; ++i) acc = acc * x2 + big[i];
    Real term1 = -4 * x2 * pow(x2 + 1, 2) * acc;
    const long small[] = {1, 13, 62, 131, 109, 16};
    Real acc2(small[0], x.precision());
    for (int i = 1; i < 6; ++i) acc2 = acc2 * x2 + small[i];
    Real term2 = -acc2 * x2 * (x2 * x2 + 5 * x2 + 6) * (x2 * x2 + 3 * x2 + 1) * pow(x2 + 1, 2);
    return term1 + term2;
}

std::vector<Real> default_grid(unsigned digits, int points_per_decade) {
    std::vector<Real> grid;
    const Real ten(10, digits);
    const int decades_lo = -3, decades_hi = 3;
    int total = (decades_hi - decades_lo) * points_per_decade;
    for (int i = 0; i <= total; ++i) {
        Real e = Real(decades_lo, digits) + Real(i, digits) / points_per_decade;
        Real v = pow(ten, e);
        grid.push_back(v);
        grid.push_back(-v);
    }
    for (double extra : {0.5, 1.0, 2.0, 3.0}) {
        grid.push_back(Real(extra, digits));
        grid.push_back(Real(-extra, digits));
    }
    return grid;
}

}  // namespace genergy
