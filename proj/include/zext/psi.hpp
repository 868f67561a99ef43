// The remainder kernel psi(p) = cos(2pi(p^2 - p - 1/16))/cos(2pi p) and its
// derivatives up to order 6.
//
// Away from p = 1/4 and 3/4 the derivatives come from truncated-Taylor (jet)
// arithmetic pushed through the closed form. Both cosines have simple zeros at
// those two points, so inside a small radius the quotient is rebuilt from the
// local series of numerator and denominator with the common zero divided out;
// the removable singularity then costs nothing.
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace zext {

struct PsiJet {
    double p = 0.0;
    int max_order = 0;
    std::array<double, 7> values{};  // psi(p), psi'(p), ..., psi^(6)(p)
};

namespace psi_detail {

inline constexpr double kTwoPi = 6.283185307179586;
inline constexpr double kSingularRadius = 1e-3;
inline constexpr int kJetOrd = 6;
inline constexpr int kSeriesOrd = 20;

// --- fixed-order jets (Taylor coefficients in h = p - p0) ---

struct Jet {
    std::array<double, kJetOrd + 1> c{};
};

inline Jet jet_variable(double p0) {
    Jet j;
    j.c[0] = p0;
    j.c[1] = 1.0;
    return j;
}

inline Jet jet_mul(const Jet& a, const Jet& b) {
    Jet r;
    for (int k = 0; k <= kJetOrd; ++k) {
        double s = 0.0;
        for (int i = 0; i <= k; ++i) s += a.c[i] * b.c[k - i];
        r.c[k] = s;
    }
    return r;
}

inline Jet jet_scale(const Jet& a, double x) {
    Jet r;
    for (int k = 0; k <= kJetOrd; ++k) r.c[k] = x * a.c[k];
    return r;
}

inline Jet jet_div(const Jet& u, const Jet& v) {
    Jet r;
    for (int k = 0; k <= kJetOrd; ++k) {
        double s = u.c[k];
        for (int j = 1; j <= k; ++j) s -= v.c[j] * r.c[k - j];
        r.c[k] = s / v.c[0];
    }
    return r;
}

// cos(a) via angle addition on the constant term; the nilpotent part needs
// only a handful of Taylor terms since n^7 = 0.
inline Jet jet_cos(const Jet& a) {
    Jet n = a;
    n.c[0] = 0.0;
    Jet n2 = jet_mul(n, n);
    Jet n3 = jet_mul(n2, n);
    Jet n4 = jet_mul(n2, n2);
    Jet n5 = jet_mul(n4, n);
    Jet n6 = jet_mul(n4, n2);
    Jet cos_n, sin_n;
    for (int k = 0; k <= kJetOrd; ++k) {
        cos_n.c[k] = -n2.c[k] / 2.0 + n4.c[k] / 24.0 - n6.c[k] / 720.0;
        sin_n.c[k] = n.c[k] - n3.c[k] / 6.0 + n5.c[k] / 120.0;
    }
    cos_n.c[0] += 1.0;
    double c0 = std::cos(a.c[0]);
    double s0 = std::sin(a.c[0]);
    Jet r;
    for (int k = 0; k <= kJetOrd; ++k) r.c[k] = c0 * cos_n.c[k] - s0 * sin_n.c[k];
    return r;
}

inline double psi_raw(double p) {
    return std::cos(kTwoPi * ((p * p - p) - 0.0625)) / std::cos(kTwoPi * p);
}

// --- local series at the removable singularities ---

struct Series {
    std::array<double, kSeriesOrd + 2> c{};
};

inline Series series_mul(const Series& a, const Series& b) {
    Series r;
    for (int i = 0; i <= kSeriesOrd + 1; ++i) {
        if (a.c[i] == 0.0) continue;
        for (int j = 0; i + j <= kSeriesOrd + 1; ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

// sin(a1 h + a2 h^2) as a power series in h.
inline Series series_sin_quadratic(double a1, double a2) {
    Series b;
    b.c[1] = a1;
    b.c[2] = a2;
    Series pw = b;   // b^1
    Series res;
    double fact = 1.0;
    double sign = 1.0;
    for (int k = 1; k <= kSeriesOrd + 1; k += 2) {
        for (int i = 0; i <= kSeriesOrd + 1; ++i) res.c[i] += sign * pw.c[i] / fact;
        pw = series_mul(series_mul(pw, b), b);
        fact *= (k + 1.0) * (k + 2.0);
        sign = -sign;
    }
    return res;
}

// Taylor coefficients of psi about p0 = 1/4 or 3/4. At those centers the
// closed form reduces to sin(a1 h + 2pi h^2) / (sgn * sin(2pi h)), both sides
// vanishing linearly; dividing out h leaves a regular quotient series.
inline std::array<double, kSeriesOrd + 1> psi_series_coeffs(double p0) {
    const double a1 = kTwoPi * (2.0 * p0 - 1.0);
    const double sgn = (p0 < 0.5) ? -1.0 : 1.0;
    Series u = series_sin_quadratic(a1, kTwoPi);
    Series v = series_sin_quadratic(sgn * kTwoPi, 0.0);
    std::array<double, kSeriesOrd + 1> q{};
    for (int n = 0; n <= kSeriesOrd; ++n) {
        double s = u.c[n + 1];
        for (int k = 0; k < n; ++k) s -= q[static_cast<std::size_t>(k)] * v.c[n - k + 1];
        q[static_cast<std::size_t>(n)] = s / v.c[1];
    }
    return q;
}

inline double singular_center(double p) {
    if (std::fabs(p - 0.25) < kSingularRadius) return 0.25;
    if (std::fabs(p - 0.75) < kSingularRadius) return 0.75;
    return -1.0;
}

// k-th derivative of the local polynomial at offset h0 from the center.
inline double series_derivative(const std::array<double, kSeriesOrd + 1>& q, int k, double h0) {
    double acc = 0.0;
    for (int m = kSeriesOrd; m >= k; --m) {
        double fall = 1.0;
        for (int j = 0; j < k; ++j) fall *= static_cast<double>(m - j);
        acc = acc * h0 + q[static_cast<std::size_t>(m)] * fall;
    }
    return acc;
}

inline void check_domain(double p, const char* who) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error(std::string(who) + ": p must be in [0,1], got " + std::to_string(p));
}

}  // namespace psi_detail

inline double psi(double p) {
    psi_detail::check_domain(p, "psi");
    double c = psi_detail::singular_center(p);
    if (c >= 0.0) {
        auto q = psi_detail::psi_series_coeffs(c);
        return psi_detail::series_derivative(q, 0, p - c);
    }
    return psi_detail::psi_raw(p);
}

inline PsiJet psi_jet(double p, int max_order) {
    psi_detail::check_domain(p, "psi_jet");
    if (max_order < 0 || max_order > 6)
        throw std::invalid_argument("psi_jet: max_order must be in [0,6]");
    PsiJet out;
    out.p = p;
    out.max_order = max_order;
    double c = psi_detail::singular_center(p);
    if (c >= 0.0) {
        auto q = psi_detail::psi_series_coeffs(c);
        for (int k = 0; k <= max_order; ++k)
            out.values[static_cast<std::size_t>(k)] = psi_detail::series_derivative(q, k, p - c);
        return out;
    }
    using namespace psi_detail;
    Jet x = jet_variable(p);
    Jet x2 = jet_mul(x, x);
    Jet arg;
    for (int k = 0; k <= kJetOrd; ++k) arg.c[k] = x2.c[k] - x.c[k];
    arg.c[0] -= 0.0625;
    arg = jet_scale(arg, kTwoPi);
    Jet num = jet_cos(arg);
    Jet den = jet_cos(jet_scale(x, kTwoPi));
    Jet quot = jet_div(num, den);
    double fact = 1.0;
    for (int k = 0; k <= max_order; ++k) {
        if (k > 0) fact *= static_cast<double>(k);
        out.values[static_cast<std::size_t>(k)] = quot.c[k] * fact;
    }
    return out;
}

}  // namespace zext
