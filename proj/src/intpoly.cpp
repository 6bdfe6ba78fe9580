#include "genergy/intpoly.hpp"

#include <sstream>
#include <stdexcept>

#include "genergy/errors.hpp"

namespace genergy {

IntPoly::IntPoly(std::vector<Int> ascending_coeffs) : c_(std::move(ascending_coeffs)) {
    normalize();
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(Int c, int power) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(power + 1, Int(0));
        p.c_[power] = std::move(c);
    }
    return p;
}

IntPoly IntPoly::x() { return monomial(Int(1), 1); }

const Int& IntPoly::leading() const {
    if (c_.empty()) throw std::logic_error("leading() of zero polynomial");
    return c_.back();
}

Int IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Int(0);
    return c_[i];
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const Int& s) const {
    if (s == 0) return IntPoly();
    IntPoly r(*this);
    for (auto& v : r.c_) v *= s;
    return r;
}

IntPoly IntPoly::derivative() const {
    if (degree() < 1) return IntPoly();
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
    return IntPoly(std::move(r));
}

Int IntPoly::content() const {
    Int g(0);
    for (const auto& v : c_) {
        g = gcd(g, v);
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    Int g = content();
    if (g == 0 || g == 1) return *this;
    IntPoly r(*this);
    for (auto& v : r.c_) v /= g;
    return r;
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::logic_error("division by zero polynomial");
    if (is_zero()) return IntPoly();
    int dq = degree() - divisor.degree();
    if (dq < 0) throw std::logic_error("divide_exact: degree underflow");
    std::vector<Int> rem = c_;
    std::vector<Int> q(dq + 1, Int(0));
    const Int& lead = divisor.leading();
    for (int k = dq; k >= 0; --k) {
        Int top = rem[k + divisor.degree()];
        if (top == 0) continue;
        if (top % lead != 0) throw std::logic_error("divide_exact: inexact division");
        Int f = top / lead;
        q[k] = f;
        for (int j = 0; j <= divisor.degree(); ++j) rem[k + j] -= f * divisor.c_[j];
    }
    for (const auto& v : rem)
        if (v != 0) throw std::logic_error("divide_exact: nonzero remainder");
    return IntPoly(std::move(q));
}

Int IntPoly::eval(const Int& v) const {
    Int acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

Real IntPoly::eval_real(const Real& v) const {
    unsigned digits = v.precision();
    Real acc(0, digits);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + to_real(*it, digits);
    return acc;
}

int IntPoly::sign_at_dyadic(const Int& num, long log2_den) const {
    if (is_zero()) return 0;
    Int pow2 = Int(1) << log2_den;
    Int acc = c_.back();
    Int scale(1);  // pow2^(degree - i)
    for (int i = degree() - 1; i >= 0; --i) {
        scale *= pow2;
        acc = acc * num + c_[i] * scale;
    }
    return sign_of(acc);
}

std::string IntPoly::to_text() const {
    std::ostringstream os;
    os << degree();
    for (int i = degree(); i >= 0; --i) os << ' ' << coeff(i);
    return os.str();
}

IntPoly IntPoly::from_text(const std::string& text) {
    std::istringstream is(text);
    long deg;
    if (!(is >> deg)) throw ParseError("polynomial text: missing degree", 1);
    if (deg < -1) throw ParseError("polynomial text: bad degree", 1);
    if (deg == -1) return IntPoly();
    std::vector<Int> asc(deg + 1);
    for (long i = deg; i >= 0; --i) {
        std::string tok;
        if (!(is >> tok)) throw ParseError("polynomial text: too few coefficients", 1);
        asc[i] = Int(tok);
    }
    std::string extra;
    if (is >> extra) throw ParseError("polynomial text: trailing tokens", 1);
    IntPoly p(std::move(asc));
    if (p.degree() != deg) throw ParseError("polynomial text: leading coefficient is zero", 1);
    return p;
}

IntPoly pseudo_rem_pos(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::logic_error("pseudo_rem_pos: zero divisor");
    if (f.degree() < g.degree()) return f;
    Int lead = g.leading();
    if (lead < 0) lead = -lead;
    std::vector<Int> rem(f.coeffs());
    int dg = g.degree();
    // Multiply the running remainder by |lc(g)| once per elimination step;
    // the total positive scaling keeps the sign of the true remainder.
    for (int k = f.degree() - dg; k >= 0; --k) {
        for (auto& v : rem) v *= lead;
        Int top = rem[k + dg];
        if (top != 0) {
            Int fct = top / g.leading();
            // top is divisible: rem was just scaled by |lc|, so top = |lc| * prev.
            for (int j = 0; j <= dg; ++j) rem[k + j] -= fct * g.coeffs()[j];
        }
    }
    return IntPoly(std::move(rem));
}

IntPoly poly_gcd(const IntPoly& f, const IntPoly& g) {
    IntPoly a = f.primitive_part();
    IntPoly b = g.primitive_part();
    if (a.is_zero()) return b.is_zero() ? b : (b.leading() < 0 ? -b : b);
    if (b.is_zero()) return a.leading() < 0 ? -a : a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem_pos(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return a.leading() < 0 ? -a : a;
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
    std::vector<std::pair<IntPoly, int>> out;
    if (p.degree() < 1) return out;
    IntPoly f = p.primitive_part();
    if (f.leading() < 0) f = -f;
    IntPoly fp = f.derivative();
    IntPoly a = poly_gcd(f, fp);
    if (a.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    IntPoly b = f.divide_exact(a);
    IntPoly c = fp.divide_exact(a);
    IntPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        IntPoly ai = poly_gcd(b, d);
        if (ai.degree() > 0) out.emplace_back(ai, i);
        b = b.divide_exact(ai);
        c = d.divide_exact(ai);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

std::pair<Real, Real> evaluate_at_ix_squared_split(const IntPoly& p, const Real& x) {
    int n = p.degree();
    unsigned digits = x.precision();
    Real even(0, digits), odd(0, digits);
    Real xp(1, digits);  // x^i
    for (int i = 0; i <= n; ++i) {
        Int a = p.coeff(n - i);  // paper index a_i
        if (a != 0) {
            Real term = to_real(a, digits) * xp;
            if ((i / 2) % 2 == 1) term = -term;
            if (i % 2 == 0)
                even += term;
            else
                odd += term;
        }
        xp *= x;
    }
    return {even, odd};
}

std::pair<Real, Real> eval_at_ix(const IntPoly& p, const Real& x) {
    int n = p.degree();
    unsigned digits = x.precision();
    Real re(0, digits), im(0, digits);
    Real xp(1, digits);  // x^j
    for (int j = 0; j <= n; ++j) {
        Int a = p.coeff(j);
        if (a != 0) {
            int pi = n - j;  // paper index: a_{pi} multiplies x^{n-pi}
            Real term = to_real(a, digits) * xp;
            if ((pi / 2) % 2 == 1) term = -term;
            if (pi % 2 == 0)
                re += term;
            else
                im += term;
        }
        xp *= x;
    }
    return {re, im};
}

std::pair<IntPoly, IntPoly> ix_parts(const IntPoly& p) {
    int n = p.degree();
    std::vector<Int> re(n + 1, Int(0)), im(n + 1, Int(0));
    for (int j = 0; j <= n; ++j) {
        Int a = p.coeff(j);
        if (a == 0) continue;
        int pi = n - j;
        if ((pi / 2) % 2 == 1) a = -a;
        if (pi % 2 == 0)
            re[j] = a;
        else
            im[j] = a;
    }
    return {IntPoly(std::move(re)), IntPoly(std::move(im))};
}

}  // namespace genergy
