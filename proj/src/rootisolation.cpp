#include "genergy/rootisolation.hpp"

#include <algorithm>
#include <cmath>

#include "genergy/errors.hpp"

namespace genergy {

double Dyadic::approx() const {
    // display/sorting only; certified arithmetic never uses this
    double m = num.convert_to<double>();
    return std::ldexp(m, static_cast<int>(-log2_den));
}

Real Dyadic::to_real(unsigned digits) const {
    Real r = genergy::to_real(num, digits);
    return genergy::ldexp(r, static_cast<int>(-log2_den));
}

double RealRoot::approx() const {
    if (exact) return lo.approx();
    return (lo.approx() + hi.approx()) / 2;
}

Real RealRoot::midpoint_real(unsigned digits) const {
    if (exact) return lo.to_real(digits);
    return (lo.to_real(digits) + hi.to_real(digits)) / 2;
}

double RealRoot::width() const {
    if (exact) return 0.0;
    // endpoints share a denominator, so this is exact up to one rounding
    Int d = hi.num - lo.num;
    return std::ldexp(d.convert_to<double>(), static_cast<int>(-lo.log2_den));
}

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
    std::vector<IntPoly> chain;
    if (p.degree() < 0) return chain;
    chain.push_back(p.primitive_part());
    if (p.degree() == 0) return chain;
    chain.push_back(p.derivative().primitive_part());
    while (chain.back().degree() > 0) {
        // negate the (positively scaled) pseudo remainder to keep Sturm signs
        IntPoly r = -pseudo_rem_pos(chain[chain.size() - 2], chain.back()).primitive_part();
        if (r.is_zero()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

namespace {

int variations(const std::vector<int>& signs) {
    int count = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int variations_at(const std::vector<IntPoly>& chain, const Dyadic& pt) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) signs.push_back(q.sign_at_dyadic(pt.num, pt.log2_den));
    return variations(signs);
}

// Smallest power of two exceeding every root magnitude (Fujiwara-style bound
// on the monic-normalized coefficients, rounded up to a power of 2).
long root_bound_log2(const IntPoly& p) {
    int d = p.degree();
    Int lead = p.leading();
    if (lead < 0) lead = -lead;
    long best = 1;
    for (int k = 1; k <= d; ++k) {
        Int a = p.coeff(d - k);
        if (a == 0) continue;
        if (a < 0) a = -a;
        // |a/lead|^{1/k} <= 2^{ceil((bits(a)-bits(lead)+1)/k)}
        long bits = static_cast<long>(msb(a)) - static_cast<long>(msb(lead)) + 1;
        long e = bits <= 0 ? 0 : (bits + k - 1) / k;
        best = std::max(best, e + 1);
    }
    return best + 1;
}

struct Isolator {
    const IntPoly& f;  // square-free
    std::vector<IntPoly> chain;
    std::vector<RealRoot> out;

    explicit Isolator(const IntPoly& poly) : f(poly), chain(sturm_chain(poly)) {}

    // Requires f(a) != 0, f(b) != 0, a < b; nroots = #roots in (a,b).
    void split(const Dyadic& a, const Dyadic& b, int nroots) {
        if (nroots == 0) return;
        if (nroots == 1) {
            out.push_back(RealRoot{a, b, 1, false});
            return;
        }
        // midpoint at one more dyadic level
        Dyadic mid{a.num + b.num, a.log2_den + 1};
        if (f.sign_at_dyadic(mid.num, mid.log2_den) == 0) {
            out.push_back(RealRoot{mid, mid, 1, true});
            // shrink around the exact root until the gap holds no other root
            Dyadic lo = mid, hi = mid;
            for (;;) {
                lo = Dyadic{2 * lo.num - 1, lo.log2_den + 1};
                hi = Dyadic{2 * hi.num + 1, hi.log2_den + 1};
                if (f.sign_at_dyadic(lo.num, lo.log2_den) != 0 &&
                    f.sign_at_dyadic(hi.num, hi.log2_den) != 0 &&
                    sturm_count(chain, lo, hi) == 1)
                    break;
            }
            Dyadic a2 = align(a, lo.log2_den), b2 = align(b, hi.log2_den);
            split(a2, lo, sturm_count(chain, a2, lo));
            split(hi, b2, sturm_count(chain, hi, b2));
            return;
        }
        Dyadic a2 = align(a, mid.log2_den), b2 = align(b, mid.log2_den);
        int left = sturm_count(chain, a2, mid);
        split(a2, mid, left);
        split(mid, b2, nroots - left);
    }

    static Dyadic align(const Dyadic& d, long log2_den) {
        return Dyadic{d.num << (log2_den - d.log2_den), log2_den};
    }
};

void refine(const IntPoly& f, RealRoot& root, double max_width) {
    if (root.exact) return;
    int sign_lo = f.sign_at_dyadic(root.lo.num, root.lo.log2_den);
    while (root.width() > max_width) {
        Dyadic mid{root.lo.num + root.hi.num, root.lo.log2_den + 1};
        int s = f.sign_at_dyadic(mid.num, mid.log2_den);
        if (s == 0) {
            root.lo = root.hi = mid;
            root.exact = true;
            return;
        }
        if (s == sign_lo) {
            root.lo = mid;
            root.hi = Dyadic{root.hi.num * 2, root.hi.log2_den + 1};
        } else {
            root.hi = mid;
            root.lo = Dyadic{root.lo.num * 2, root.lo.log2_den + 1};
        }
    }
}

}  // namespace

int sturm_count(const std::vector<IntPoly>& chain, const Dyadic& a, const Dyadic& b) {
    long k = std::max(a.log2_den, b.log2_den);
    return variations_at(chain, Isolator::align(a, k)) -
           variations_at(chain, Isolator::align(b, k));
}

namespace {

bool dyadic_less(const Dyadic& a, const Dyadic& b) {
    long k = std::max(a.log2_den, b.log2_den);
    return (a.num << (k - a.log2_den)) < (b.num << (k - b.log2_den));
}

bool root_less(const RealRoot& x, const RealRoot& y) { return dyadic_less(x.lo, y.lo); }

}  // namespace

std::vector<RealRoot> isolate_real_roots_squarefree(const IntPoly& p, double max_width) {
    std::vector<RealRoot> out;
    if (p.degree() < 1) return out;
    Isolator iso(p);
    long bexp = root_bound_log2(p);
    Dyadic lo{-(Int(1) << bexp), 0}, hi{Int(1) << bexp, 0};
    // bound is strict, so the endpoints are non-roots
    iso.split(lo, hi, sturm_count(iso.chain, lo, hi));
    for (auto& r : iso.out) refine(p, r, max_width);
    out = std::move(iso.out);
    std::sort(out.begin(), out.end(), root_less);
    return out;
}

std::vector<RealRoot> real_roots_with_multiplicity(const IntPoly& p, double max_width) {
    std::vector<RealRoot> all;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        auto roots = isolate_real_roots_squarefree(factor, max_width);
        for (auto& r : roots) {
            r.multiplicity = mult;
            all.push_back(std::move(r));
        }
    }
    std::sort(all.begin(), all.end(), root_less);
    return all;
}

}  // namespace genergy
