// Scalar building blocks: truncation index N and fractional part p, the phase
// theta, the xi-to-Z scale factors, a truncated Stirling series with its
// error bound, and the merged 1/t error series for the off-line phase pieces.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include "zext/dd.hpp"
#include "zext/oracle.hpp"

namespace zext {

using Complex = std::complex<double>;

inline constexpr double kPiD = 3.141592653589793;
inline constexpr double kTwoPiD = 6.283185307179586;
inline constexpr double kLnPiD = 1.1447298858494002;
inline constexpr double kLn2PiD = 1.8378770664093456;

// Location s = 1/2 + epsilon + i t in the critical strip.
struct StripPoint {
    double t = 0.0;
    double epsilon = 0.0;

    void validate() const {
        if (!std::isfinite(t) || t <= 0.0)
            throw std::domain_error("StripPoint: t must be finite and > 0, got " + std::to_string(t));
        if (!std::isfinite(epsilon) || std::fabs(epsilon) > 1.0)
            throw std::domain_error("StripPoint: |epsilon| must be <= 1, got " + std::to_string(epsilon));
    }

    bool below_accuracy_floor() const { return t < 20.0; }

    Complex s() const { return {0.5 + epsilon, t}; }
};

struct GridQuantities {
    std::int64_t truncation = 0;  // N = floor(sqrt(t/2pi))
    double p = 0.0;               // sqrt(t/2pi) - N, in [0,1)
    double omega = 0.0;           // sqrt(2pi/t)
    double a_mod = 0.0;           // sqrt(2pi t), saddle-point modulus
};

// N and p from a compensated sqrt(t/2pi). A value within 1e-12 (relative) of
// an integer is snapped onto it, ties resolving downward like floor; the
// double nearest a lattice point t = 2pi k^2 otherwise lands on whichever
// side its rounding happened to fall.
inline GridQuantities grid_quantities(double t) {
    if (!std::isfinite(t) || t <= 0.0)
        throw std::domain_error("grid_quantities: t must be finite and > 0, got " + std::to_string(t));
    dd::Real r = dd::div(dd::Real{t}, dd::kTwoPi);
    double s0 = std::sqrt(r.hi);
    double e;
    double sq = dd::detail::two_prod(s0, s0, e);
    dd::Real diff = dd::sub(r, dd::Real{sq, e});
    double corr = (diff.hi + diff.lo) / (2.0 * s0);
    double s_total = s0 + corr;

    double nearest = std::round(s_total);
    double n_whole;
    double p;
    if (std::fabs(s_total - nearest) < 1e-12 * std::fmax(1.0, s_total)) {
        n_whole = nearest;
        p = std::fmax(0.0, (s0 - nearest) + corr);
    } else {
        n_whole = std::floor(s_total);
        p = (s0 - n_whole) + corr;
        if (p < 0.0) { n_whole -= 1.0; p += 1.0; }
        if (p >= 1.0) { n_whole += 1.0; p -= 1.0; }
    }
    GridQuantities g;
    g.truncation = static_cast<std::int64_t>(n_whole);
    g.p = p;
    g.omega = std::sqrt(kTwoPiD / t);
    g.a_mod = std::sqrt(kTwoPiD * t);
    return g;
}

inline double theta1(double t) {
    if (!std::isfinite(t) || t <= 0.0)
        throw std::domain_error("theta1: t must be finite and > 0");
    return 0.5 * t * (std::log(t / kTwoPiD) - 1.0) - kPiD / 8.0;
}

// theta1 plus the two standard 1/t corrections.
inline double theta(double t) {
    if (!std::isfinite(t) || t <= 0.0)
        throw std::domain_error("theta: t must be finite and > 0");
    return theta1(t) + 1.0 / (48.0 * t) + 7.0 / (5760.0 * t * t * t);
}

namespace detail {

// theta1(t) (optionally with the 1/t corrections) as a double-double, for use
// inside phase-critical sums.
inline dd::Real theta1_dd(double t, bool corrected = false) {
    dd::Real ln_t_2pi = dd::sub(dd::log(t), dd::kLn2Pi);
    dd::Real th = dd::mul(ln_t_2pi, 0.5 * t);
    th = dd::sub(th, dd::Real{0.5 * t});
    th = dd::sub(th, dd::kPiOver8);
    if (corrected)
        th = dd::add(th, dd::Real{1.0 / (48.0 * t) + 7.0 / (5760.0 * t * t * t)});
    return th;
}

}  // namespace detail

// F(t) = (pi/2)^{1/4} t^{7/4} e^{-pi t/4}. Underflows to subnormal/zero near
// t ~ 940; anything needing ratios at large t must use log_scale_factor_F.
inline double scale_factor_F(double t) {
    if (!std::isfinite(t) || t <= 0.0)
        throw std::domain_error("scale_factor_F: t must be finite and > 0");
    return std::pow(kPiD / 2.0, 0.25) * std::pow(t, 1.75) * std::exp(-kPiD * t / 4.0);
}

inline double log_scale_factor_F(double t) {
    if (!std::isfinite(t) || t <= 0.0)
        throw std::domain_error("log_scale_factor_F: t must be finite and > 0");
    return 0.75 * std::log(0.5 * t) + 0.5 * kLn2PiD - 0.25 * kLnPiD - 0.25 * kPiD * t + std::log(t);
}

// f(t) = (1/2) pi^{-1/4} (t^2 + 1/4) |Gamma(1/4 + it/2)|, evaluated through the
// reference log-Gamma so the F ~ f consistency check stays an independent route.
inline double scale_factor_f(double t) {
    if (!std::isfinite(t) || t <= 0.0)
        throw std::domain_error("scale_factor_f: t must be finite and > 0");
    double re_lg = log_gamma_ref(Complex{0.25, 0.5 * t}).real();
    return 0.5 * std::pow(kPiD, -0.25) * (t * t + 0.25) * std::exp(re_lg);
}

inline constexpr std::array<double, 6> kBernoulli = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0};

// ln Gamma(z+1) by the truncated Stirling series with K-1 Bernoulli terms.
// The table parameter exists so tests can probe sensitivity; callers use the
// default.
inline Complex stirling_log_gamma(Complex z, int K,
                                  std::span<const double> bernoulli = kBernoulli) {
    if (K < 1 || K > 6)
        throw std::invalid_argument("stirling_log_gamma: K must be in [1,6]");
    if (z == Complex{0.0, 0.0} || (z.imag() == 0.0 && z.real() < 0.0))
        throw std::domain_error("stirling_log_gamma: need |arg z| < pi");
    Complex lz = std::log(z);
    Complex res = (z + 0.5) * lz - z + 0.5 * kLn2PiD;
    Complex inv = 1.0 / z;
    Complex inv2 = inv * inv;
    Complex zpow = inv;
    for (int k = 1; k <= K - 1; ++k) {
        res += bernoulli[static_cast<std::size_t>(k - 1)] /
               (2.0 * k * (2.0 * k - 1.0)) * zpow;
        zpow *= inv2;
    }
    return res;
}

// Upper bound on the truncation error of stirling_log_gamma (Stieltjes form).
inline double stirling_remainder_bound(Complex z, int K) {
    if (K < 1 || K > 6)
        throw std::invalid_argument("stirling_remainder_bound: K must be in [1,6]");
    if (z == Complex{0.0, 0.0} || (z.imag() == 0.0 && z.real() < 0.0))
        throw std::domain_error("stirling_remainder_bound: need |arg z| < pi");
    double b2k = kBernoulli[static_cast<std::size_t>(K - 1)];
    double mag = std::fabs(b2k) / (2.0 * K * (2.0 * K - 1.0) * std::pow(std::abs(z), 2.0 * K - 1.0));
    double c = std::cos(0.5 * std::arg(z));
    return mag / std::pow(c, 2.0 * K);
}

// Leading 1/t term of the merged imaginary error pieces; sign selects the
// substitution branch.
inline double err_series_im(double t, double epsilon, int sign) {
    if (!std::isfinite(t) || t <= 0.0)
        throw std::domain_error("err_series_im: t must be finite and > 0");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("err_series_im: sign must be +1 or -1");
    double e = epsilon;
    if (sign == 1) return (1.0 - 84.0 * e + 10.0 * e * e) / (48.0 * t);
    return -(1.0 + 108.0 * e - 12.0 * e * e) / (48.0 * t);
}

// Leading 1/t^2 term of the merged real error pieces.
inline double err_series_re(double t, double epsilon, int sign) {
    if (!std::isfinite(t) || t <= 0.0)
        throw std::domain_error("err_series_re: t must be finite and > 0");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("err_series_re: sign must be +1 or -1");
    double e = epsilon;
    if (sign == 1) return (27.0 + 94.0 * e + 84.0 * e * e + 8.0 * e * e * e) / (96.0 * t * t);
    return (27.0 - 22.0 * e + 36.0 * e * e - 8.0 * e * e * e) / (96.0 * t * t);
}

}  // namespace zext
