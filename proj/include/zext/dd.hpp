// Double-double helpers for phase-critical evaluation.
//
// The main sums need cos/sin of arguments like theta1(t) - t*ln(n), which reach
// ~1e10 before reduction; plain double loses ~6 digits of the reduced phase
// there. A hi/lo pair keeps ~32 significant digits through the subtraction and
// the mod-2pi reduction, after which a plain double argument is accurate to a
// full ulp of the *reduced* value.
//
// Only the operations actually used are provided: +|-|*|/, exp, log of a
// double, and reduction mod 2pi. Algorithms follow the usual error-free
// transformation toolkit (two_sum / fma-based two_prod).
#pragma once

#include <cmath>
#include <limits>

namespace zext::dd {

struct Real {
    double hi = 0.0;
    double lo = 0.0;

    Real() = default;
    constexpr Real(double h, double l) : hi(h), lo(l) {}
    explicit constexpr Real(double x) : hi(x), lo(0.0) {}

    double value() const { return hi + lo; }
};

inline constexpr Real kTwoPi{6.283185307179586, 2.4492935982947064e-16};
inline constexpr Real kPi{3.141592653589793, 1.2246467991473532e-16};
inline constexpr Real kPiOver8{0.39269908169872414, 1.5308084989341915e-17};
inline constexpr Real kLn2Pi{1.8378770664093456, -7.756588316134483e-17};
inline constexpr Real kLn2{0.6931471805599453, 2.3190468138462996e-17};

namespace detail {

inline double two_sum(double a, double b, double& err) {
    double s = a + b;
    double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
    return s;
}

inline double quick_two_sum(double a, double b, double& err) {
    double s = a + b;
    err = b - (s - a);
    return s;
}

inline double two_prod(double a, double b, double& err) {
    double p = a * b;
    err = std::fma(a, b, -p);
    return p;
}

}  // namespace detail

inline Real add(const Real& a, const Real& b) {
    using detail::quick_two_sum;
    using detail::two_sum;
    double e1, e2;
    double s1 = two_sum(a.hi, b.hi, e1);
    double s2 = two_sum(a.lo, b.lo, e2);
    e1 += s2;
    s1 = quick_two_sum(s1, e1, e1);
    e1 += e2;
    s1 = quick_two_sum(s1, e1, e1);
    return {s1, e1};
}

inline Real add(const Real& a, double b) { return add(a, Real{b}); }

inline Real neg(const Real& a) { return {-a.hi, -a.lo}; }

inline Real sub(const Real& a, const Real& b) { return add(a, neg(b)); }

inline Real mul(const Real& a, const Real& b) {
    double e;
    double p = detail::two_prod(a.hi, b.hi, e);
    e += a.hi * b.lo + a.lo * b.hi;
    p = detail::quick_two_sum(p, e, e);
    return {p, e};
}

inline Real mul(const Real& a, double b) {
    double e;
    double p = detail::two_prod(a.hi, b, e);
    e += a.lo * b;
    p = detail::quick_two_sum(p, e, e);
    return {p, e};
}

inline Real div(const Real& a, const Real& b) {
    double q1 = a.hi / b.hi;
    Real r = sub(a, mul(b, q1));
    double q2 = r.hi / b.hi;
    r = sub(r, mul(b, q2));
    double q3 = r.hi / b.hi;
    double e;
    double s = detail::quick_two_sum(q1, q2, e);
    return add(Real{s, e}, q3);
}

inline Real div(const Real& a, double b) { return div(a, Real{b}); }

inline Real ldexp2(const Real& a, int n) {
    return {std::ldexp(a.hi, n), std::ldexp(a.lo, n)};
}

// exp(a) for |a.hi| <= ~700.
inline Real exp(const Real& a) {
    if (a.hi > 709.0) return Real{std::numeric_limits<double>::infinity()};
    if (a.hi < -709.0) return Real{0.0};
    double m = std::round(a.hi / kLn2.hi);
    Real r = sub(a, mul(kLn2, m));
    r = ldexp2(r, -9);  // |r| <= ln2/2/512

    Real sum{1.0};
    Real term{1.0};
    for (int k = 1; k <= 12; ++k) {
        term = mul(term, r);
        term = div(term, static_cast<double>(k));
        sum = add(sum, term);
        if (std::fabs(term.hi) < 1e-40) break;
    }
    for (int i = 0; i < 9; ++i) sum = mul(sum, sum);
    return ldexp2(sum, static_cast<int>(m));
}

// log(x) for double x > 0, via one Newton step off std::log.
inline Real log(double x) {
    double y0 = std::log(x);
    Real r = mul(exp(Real{-y0}), x);    // x * e^{-y0} = 1 + d, |d| ~ 1e-16
    Real d = add(r, -1.0);
    Real corr = sub(d, Real{0.5 * d.hi * d.hi});
    return add(add(Real{y0}, corr), Real{d.hi * d.hi * d.hi / 3.0});
}

// Reduce to (-pi-eps, pi+eps] as a plain double.
inline double mod_two_pi(const Real& x) {
    double k = std::round(x.hi / kTwoPi.hi);
    Real r = sub(x, mul(kTwoPi, k));
    return r.hi + r.lo;
}

}  // namespace zext::dd
