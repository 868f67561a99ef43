// The headline evaluator: Z(t, epsilon) as hyperbolically weighted main sums
// plus the truncated remainder, its critical-line restriction, the rotation
// whose Re/Im zero sets match those of the completed xi, and a finite
// difference probe of the Cauchy-Riemann relations.
#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <utility>

#include "zext/core.hpp"
#include "zext/remainder.hpp"

namespace zext {

struct ZOptions {
    // Use the 1/t-corrected phase instead of the plain one inside the main
    // sums. Off by default: the plain phase is the form the comparison tables
    // are computed with.
    bool theta_corrected = false;
};

struct ZEvaluation {
    StripPoint point;
    std::int64_t truncation = 0;  // N
    double p = 0.0;
    Complex main_sum{0.0, 0.0};
    Complex remainder{0.0, 0.0};
    Complex z{0.0, 0.0};
    int remainder_order = 0;
};

inline ZEvaluation z_ext(double t, double epsilon, int M, ZOptions opt = {}) {
    StripPoint pt{t, epsilon};
    pt.validate();
    if (M < 0 || M > 2)
        throw std::invalid_argument("z_ext: M must be in {0,1,2}");
    if (M == 2 && epsilon != 0.0)
        throw std::invalid_argument("z_ext: M = 2 requires epsilon = 0");

    GridQuantities g = grid_quantities(t);
    dd::Real ln_t_2pi = dd::sub(dd::log(t), dd::kLn2Pi);
    dd::Real th = dd::mul(ln_t_2pi, 0.5 * t);
    th = dd::sub(th, dd::Real{0.5 * t});
    th = dd::sub(th, dd::kPiOver8);
    if (opt.theta_corrected)
        th = dd::add(th, dd::Real{1.0 / (48.0 * t) + 7.0 / (5760.0 * t * t * t)});

    const double half_ln_t_2pi = 0.5 * ln_t_2pi.value();
    double re = 0.0;
    double im = 0.0;
    for (std::int64_t n = 1; n <= g.truncation; ++n) {
        const double dn = static_cast<double>(n);
        dd::Real ln_n = dd::log(dn);
        double phase = dd::mod_two_pi(dd::sub(th, dd::mul(ln_n, t)));
        double ampl_arg = half_ln_t_2pi - ln_n.value();  // ln sqrt(t/(2 pi n^2))
        double rs = 1.0 / std::sqrt(dn);
        re += std::cosh(epsilon * ampl_arg) * std::cos(phase) * rs;
        im += std::sinh(epsilon * ampl_arg) * std::sin(phase) * rs;
    }

    ZEvaluation ev;
    ev.point = pt;
    ev.truncation = g.truncation;
    ev.p = g.p;
    ev.main_sum = Complex{2.0 * re, 2.0 * im};
    ev.remainder = remainder_R(t, epsilon, M);
    ev.z = ev.main_sum + ev.remainder;
    ev.remainder_order = M;
    return ev;
}

// Critical-line Z(t); sign changes locate the zeros there.
inline double z_classic(double t, int M, ZOptions opt = {}) {
    return z_ext(t, 0.0, M, opt).z.real();
}

struct XiScaled {
    Complex value{0.0, 0.0};               // e^{i pi eps/4} Z(t, eps)
    std::optional<double> log_abs_xi;      // log F(t) + ln|Z|; empty at a zero
};

// The rotation whose Re = 0 and Im = 0 level sets coincide with those of the
// completed xi at 1/2 + eps + i t. Magnitude reconstruction is exposed only in
// log form since the scale factor underflows near t ~ 940.
inline XiScaled xi_scaled(double t, double epsilon, int M, ZOptions opt = {}) {
    ZEvaluation ev = z_ext(t, epsilon, M, opt);
    double a = 0.25 * kPiD * epsilon;
    XiScaled r;
    r.value = ev.z * Complex{std::cos(a), std::sin(a)};
    double az = std::abs(ev.z);
    if (az > 0.0) r.log_abs_xi = log_scale_factor_F(t) + std::log(az);
    return r;
}

// Central finite-difference residuals of the Cauchy-Riemann relations for
// Z(t, eps): first component dIm/deps + dRe/dt, second dRe/deps - dIm/dt.
inline std::pair<double, double> cauchy_riemann_residual(double t, double epsilon,
                                                         double dt, double de, int M,
                                                         ZOptions opt = {}) {
    if (!(dt > 0.0) || dt > 0.01 * t)
        throw std::domain_error("cauchy_riemann_residual: need 0 < dt << t");
    if (!(de > 0.0) || de > 0.1)
        throw std::domain_error("cauchy_riemann_residual: need 0 < de << 1");
    Complex zpe = z_ext(t, epsilon + de, M, opt).z;
    Complex zme = z_ext(t, epsilon - de, M, opt).z;
    Complex zpt = z_ext(t + dt, epsilon, M, opt).z;
    Complex zmt = z_ext(t - dt, epsilon, M, opt).z;
    double r1 = (zpe.imag() - zme.imag()) / (2.0 * de) + (zpt.real() - zmt.real()) / (2.0 * dt);
    double r2 = (zpe.real() - zme.real()) / (2.0 * de) - (zpt.imag() - zmt.imag()) / (2.0 * dt);
    return {r1, r2};
}

}  // namespace zext
