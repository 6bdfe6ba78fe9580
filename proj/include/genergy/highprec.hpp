#pragma once

#include <mpfr.h>

#include <cmath>
#include <string>
#include <utility>

#include "genergy/bigint.hpp"

namespace genergy {

constexpr unsigned kDefaultDigits = 150;

// High-precision real: a thin RAII wrapper over mpfr_t.
//
// Every value carries its own precision (decimal digits requested at
// creation); binary operations allocate the result at the wider operand
// precision. There is no default-precision global of any kind, so values are
// safe to build and use concurrently from many threads (the system MPFR is a
// thread-safe build). Boost.Multiprecision's variable-precision mpfr wrapper
// was not usable here: it routes every operation through a process-global
// default-precision variable, which makes concurrent mixed-precision
// arithmetic nondeterministic.
class Real {
  public:
    Real() { mpfr_init2(v_, 64); }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }
    Real(double d, unsigned digits10) {
        mpfr_init2(v_, bits_for(digits10));
        mpfr_set_d(v_, d, MPFR_RNDN);
    }
    Real(long i, unsigned digits10) {
        mpfr_init2(v_, bits_for(digits10));
        mpfr_set_si(v_, i, MPFR_RNDN);
    }
    Real(int i, unsigned digits10) : Real(static_cast<long>(i), digits10) {}
    Real(unsigned u, unsigned digits10) : Real(static_cast<long>(u), digits10) {}
    ~Real() { mpfr_clear(v_); }

    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    // adopts this value's existing precision
    Real& operator=(long i) {
        mpfr_set_si(v_, i, MPFR_RNDN);
        return *this;
    }
    Real& operator=(const Int& z) {
        mpfr_set_z(v_, z.backend().data(), MPFR_RNDN);
        return *this;
    }

    // precision in decimal digits (bits internally)
    unsigned precision() const { return digits_for(mpfr_get_prec(v_)); }
    void precision(unsigned digits10) { mpfr_prec_round(v_, bits_for(digits10), MPFR_RNDN); }
    mpfr_prec_t bits() const { return mpfr_get_prec(v_); }

    template <class T>
    T convert_to() const;

    std::string str(int digits10 = 0) const {
        char* s = nullptr;
        int prec = digits10 > 0 ? digits10 : static_cast<int>(precision());
        if (mpfr_asprintf(&s, "%.*Rg", prec, v_) < 0) return "?";
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    mpfr_ptr data() { return v_; }
    mpfr_srcptr data() const { return v_; }

    static mpfr_prec_t bits_for(unsigned digits10) {
        return static_cast<mpfr_prec_t>(std::ceil(digits10 * 3.3219280948873623)) + 2;
    }
    static unsigned digits_for(mpfr_prec_t bits) {
        return static_cast<unsigned>((static_cast<double>(bits) - 2) / 3.3219280948873623);
    }

    // result placeholder at the wider operand precision
    static Real result_like(const Real& a, const Real& b) {
        Real r;
        mpfr_set_prec(r.v_, std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)));
        return r;
    }
    static Real result_like(const Real& a) {
        Real r;
        mpfr_set_prec(r.v_, mpfr_get_prec(a.v_));
        return r;
    }

  private:
    mpfr_t v_;
};

template <>
inline double Real::convert_to<double>() const {
    return mpfr_get_d(v_, MPFR_RNDN);
}
template <>
inline std::string Real::convert_to<std::string>() const {
    return str();
}

// ---- arithmetic -------------------------------------------------------------

inline Real operator+(const Real& a, const Real& b) {
    Real r = Real::result_like(a, b);
    mpfr_add(r.data(), a.data(), b.data(), MPFR_RNDN);
    return r;
}
inline Real operator-(const Real& a, const Real& b) {
    Real r = Real::result_like(a, b);
    mpfr_sub(r.data(), a.data(), b.data(), MPFR_RNDN);
    return r;
}
inline Real operator*(const Real& a, const Real& b) {
    Real r = Real::result_like(a, b);
    mpfr_mul(r.data(), a.data(), b.data(), MPFR_RNDN);
    return r;
}
inline Real operator/(const Real& a, const Real& b) {
    Real r = Real::result_like(a, b);
    mpfr_div(r.data(), a.data(), b.data(), MPFR_RNDN);
    return r;
}
inline Real operator-(const Real& a) {
    Real r = Real::result_like(a);
    mpfr_neg(r.data(), a.data(), MPFR_RNDN);
    return r;
}

inline Real operator+(const Real& a, long b) {
    Real r = Real::result_like(a);
    mpfr_add_si(r.data(), a.data(), b, MPFR_RNDN);
    return r;
}
inline Real operator+(long a, const Real& b) { return b + a; }
inline Real operator+(const Real& a, int b) { return a + static_cast<long>(b); }
inline Real operator+(int a, const Real& b) { return b + static_cast<long>(a); }

inline Real operator-(const Real& a, long b) {
    Real r = Real::result_like(a);
    mpfr_sub_si(r.data(), a.data(), b, MPFR_RNDN);
    return r;
}
inline Real operator-(long a, const Real& b) {
    Real r = Real::result_like(b);
    mpfr_si_sub(r.data(), a, b.data(), MPFR_RNDN);
    return r;
}
inline Real operator-(const Real& a, int b) { return a - static_cast<long>(b); }
inline Real operator-(int a, const Real& b) { return static_cast<long>(a) - b; }

inline Real operator*(const Real& a, long b) {
    Real r = Real::result_like(a);
    mpfr_mul_si(r.data(), a.data(), b, MPFR_RNDN);
    return r;
}
inline Real operator*(long a, const Real& b) { return b * a; }
inline Real operator*(const Real& a, int b) { return a * static_cast<long>(b); }
inline Real operator*(int a, const Real& b) { return b * static_cast<long>(a); }
inline Real operator*(const Real& a, double b) {
    Real r = Real::result_like(a);
    mpfr_mul_d(r.data(), a.data(), b, MPFR_RNDN);
    return r;
}
inline Real operator*(double a, const Real& b) { return b * a; }

inline Real operator/(const Real& a, long b) {
    Real r = Real::result_like(a);
    mpfr_div_si(r.data(), a.data(), b, MPFR_RNDN);
    return r;
}
inline Real operator/(const Real& a, int b) { return a / static_cast<long>(b); }
inline Real operator/(long a, const Real& b) {
    Real r = Real::result_like(b);
    mpfr_si_div(r.data(), a, b.data(), MPFR_RNDN);
    return r;
}
inline Real operator/(int a, const Real& b) { return static_cast<long>(a) / b; }

inline Real& operator+=(Real& a, const Real& b) {
    mpfr_add(a.data(), a.data(), b.data(), MPFR_RNDN);
    return a;
}
inline Real& operator-=(Real& a, const Real& b) {
    mpfr_sub(a.data(), a.data(), b.data(), MPFR_RNDN);
    return a;
}
inline Real& operator*=(Real& a, const Real& b) {
    mpfr_mul(a.data(), a.data(), b.data(), MPFR_RNDN);
    return a;
}

// ---- comparisons --------------------------------------------------------------

inline bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.data(), b.data()) == 0; }
inline bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.data(), b.data()) != 0; }
inline bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.data(), b.data()); }
inline bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.data(), b.data()); }
inline bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.data(), b.data()); }
inline bool operator>=(const Real& a, const Real& b) {
    return mpfr_greaterequal_p(a.data(), b.data());
}

inline bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.data(), b) == 0; }
inline bool operator!=(const Real& a, long b) { return mpfr_cmp_si(a.data(), b) != 0; }
inline bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.data(), b) < 0; }
inline bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.data(), b) > 0; }
inline bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.data(), b) <= 0; }
inline bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.data(), b) >= 0; }
inline bool operator==(const Real& a, int b) { return a == static_cast<long>(b); }
inline bool operator!=(const Real& a, int b) { return a != static_cast<long>(b); }
inline bool operator<(const Real& a, int b) { return a < static_cast<long>(b); }
inline bool operator>(const Real& a, int b) { return a > static_cast<long>(b); }
inline bool operator<=(const Real& a, int b) { return a <= static_cast<long>(b); }
inline bool operator>=(const Real& a, int b) { return a >= static_cast<long>(b); }
inline bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.data(), b) < 0; }
inline bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.data(), b) > 0; }

// ---- functions ------------------------------------------------------------------

inline Real abs(const Real& a) {
    Real r = Real::result_like(a);
    mpfr_abs(r.data(), a.data(), MPFR_RNDN);
    return r;
}
inline Real sqrt(const Real& a) {
    Real r = Real::result_like(a);
    mpfr_sqrt(r.data(), a.data(), MPFR_RNDN);
    return r;
}
inline Real log(const Real& a) {
    Real r = Real::result_like(a);
    mpfr_log(r.data(), a.data(), MPFR_RNDN);
    return r;
}
inline Real tan(const Real& a) {
    Real r = Real::result_like(a);
    mpfr_tan(r.data(), a.data(), MPFR_RNDN);
    return r;
}
inline Real atan(const Real& a) {
    Real r = Real::result_like(a);
    mpfr_atan(r.data(), a.data(), MPFR_RNDN);
    return r;
}
inline Real ldexp(const Real& a, int e) {
    Real r = Real::result_like(a);
    mpfr_mul_2si(r.data(), a.data(), e, MPFR_RNDN);
    return r;
}
inline Real pow(const Real& a, long e) {
    Real r = Real::result_like(a);
    mpfr_pow_si(r.data(), a.data(), e, MPFR_RNDN);
    return r;
}
inline Real pow(const Real& a, int e) { return pow(a, static_cast<long>(e)); }
inline Real pow(const Real& a, unsigned e) { return pow(a, static_cast<long>(e)); }
inline Real pow(const Real& a, const Real& e) {
    Real r = Real::result_like(a, e);
    mpfr_pow(r.data(), a.data(), e.data(), MPFR_RNDN);
    return r;
}

// Exact Int -> Real conversion at the given precision.
inline Real to_real(const Int& v, unsigned digits) {
    Real r(0L, digits);
    r = v;
    return r;
}

inline Real make_real(double v, unsigned digits) { return Real(v, digits); }

}  // namespace genergy
