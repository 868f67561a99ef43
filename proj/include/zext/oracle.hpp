// Reference evaluators, independent of the main-sum formula path: an
// Euler-Maclaurin zeta for complex s, a recurrence-shifted Stirling log-Gamma,
// the completed xi in log form, and the analytically continued Z used as the
// comparison column for the extended formula.
//
// The deliberate independence rules: this header must not include core.hpp or
// zext.hpp, its Bernoulli table and truncation policy are its own, and the
// only shared code is the generic double-double kit.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "zext/dd.hpp"

namespace zext {

struct OracleConfig {
    std::int64_t em_terms = 0;      // direct-sum cutoff; 0 = choose from Im(s)
    int em_bernoulli_order = 8;     // tail pairs used, in [2,10]
    double target_abs_err = 1e-10;

    void validate() const {
        if (em_bernoulli_order < 2 || em_bernoulli_order > 10)
            throw std::invalid_argument("OracleConfig: em_bernoulli_order must be in [2,10]");
        if (!(target_abs_err > 0.0))
            throw std::invalid_argument("OracleConfig: target_abs_err must be > 0");
    }
};

// Practical ceiling for the direct sum; above |Im s| ~ 3e5 the oracle is out
// of its accuracy domain.
inline constexpr std::int64_t kOracleTermCap = 300000;
inline constexpr double kOracleImDomain = 3.0e5;

namespace oracle_detail {

inline constexpr double kLnPi = 1.1447298858494002;
inline constexpr double kLn2Pi = 1.8378770664093456;

// B_2 .. B_22; two more entries than the largest usable order so the error
// proxy always has a next term to look at.
inline constexpr std::array<double, 11> kBernoulli = {
    1.0 / 6.0,        -1.0 / 30.0,     1.0 / 42.0,      -1.0 / 30.0,
    5.0 / 66.0,       -691.0 / 2730.0, 7.0 / 6.0,       -3617.0 / 510.0,
    43867.0 / 798.0,  -174611.0 / 330.0, 854513.0 / 138.0};

inline double bernoulli_over_factorial(int j) {
    // B_{2j}/(2j)!
    double f = 1.0;
    for (int i = 2; i <= 2 * j; ++i) f *= i;
    return kBernoulli[static_cast<std::size_t>(j - 1)] / f;
}

// n^{-s} with the phase t*ln(n) carried in double-double.
inline std::complex<double> power_term(double n, double sigma, double t) {
    double amp = std::pow(n, -sigma);
    double phase = dd::mod_two_pi(dd::mul(dd::log(n), -t));
    return {amp * std::cos(phase), amp * std::sin(phase)};
}

}  // namespace oracle_detail

// Euler-Maclaurin continuation of zeta(s). Absolute error is held at
// cfg.target_abs_err by enlarging the direct sum when the tail proxy says so
// (up to the term cap).
inline std::complex<double> zeta_em(std::complex<double> s, const OracleConfig& cfg = {}) {
    cfg.validate();
    if (s == std::complex<double>{1.0, 0.0})
        throw std::domain_error("zeta_em: pole at s = 1");
    const double sigma = s.real();
    const double t = s.imag();

    std::int64_t M = cfg.em_terms > 0
                         ? cfg.em_terms
                         : std::max<std::int64_t>(20, static_cast<std::int64_t>(std::ceil(std::fabs(t))));
    M = std::min(M, kOracleTermCap);
    const int q = cfg.em_bernoulli_order;

    for (int attempt = 0;; ++attempt) {
        std::complex<double> sum{0.0, 0.0};
        for (std::int64_t n = 1; n < M; ++n)
            sum += oracle_detail::power_term(static_cast<double>(n), sigma, t);

        const double dM = static_cast<double>(M);
        std::complex<double> m_pow_ms = oracle_detail::power_term(dM, sigma, t);  // M^{-s}
        double amp1 = std::exp((1.0 - sigma) * std::log(dM));
        double ph1 = dd::mod_two_pi(dd::mul(dd::log(dM), -t));
        std::complex<double> m_pow_1ms{amp1 * std::cos(ph1), amp1 * std::sin(ph1)};
        std::complex<double> total = sum + m_pow_1ms / (s - 1.0) + 0.5 * m_pow_ms;

        std::complex<double> poch_m = s * m_pow_ms / dM;  // s * M^{-s-1}
        std::complex<double> tail{0.0, 0.0};
        for (int j = 1; j <= q; ++j) {
            tail += oracle_detail::bernoulli_over_factorial(j) * poch_m;
            poch_m *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j) / (dM * dM);
        }
        total += tail;

        double next = std::abs(oracle_detail::bernoulli_over_factorial(q + 1) * poch_m);
        double err_proxy = next * std::abs(s + (2.0 * q + 1.0)) / (sigma + 2.0 * q + 1.0);
        if (err_proxy <= cfg.target_abs_err || M >= kOracleTermCap || attempt >= 5)
            return total;
        M = std::min<std::int64_t>(2 * M, kOracleTermCap);
    }
}

// Principal-branch ln Gamma(z): recurrence shift until the Stirling series with
// eight Bernoulli terms is deep in its accuracy region.
inline std::complex<double> log_gamma_ref(std::complex<double> z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw std::domain_error("log_gamma_ref: pole at nonpositive integer");
    std::complex<double> shift{0.0, 0.0};
    while (z.real() < 0.5 || std::abs(z) < 12.0) {
        shift += std::log(z);
        z += 1.0;
    }
    std::complex<double> lz = std::log(z);
    std::complex<double> res = (z - 0.5) * lz - z + 0.5 * oracle_detail::kLn2Pi;
    std::complex<double> inv = 1.0 / z;
    std::complex<double> inv2 = inv * inv;
    std::complex<double> zpow = inv;
    for (int k = 1; k <= 8; ++k) {
        res += oracle_detail::kBernoulli[static_cast<std::size_t>(k - 1)] /
               (2.0 * k * (2.0 * k - 1.0)) * zpow;
        zpow *= inv2;
    }
    return res - shift;
}

// xi(s) = Gamma(s/2+1)(s-1)pi^{-s/2} zeta(s), kept as log-magnitude plus a
// phase reduced to (-pi, pi]. For points at a zeta zero the log-magnitude
// goes to -inf; callers treat that as the at-zero marker.
struct XiLog {
    double log_abs = 0.0;
    double arg = 0.0;

    std::complex<double> value() const {
        double m = std::exp(log_abs);
        return {m * std::cos(arg), m * std::sin(arg)};
    }
};

inline XiLog xi_direct(std::complex<double> s, const OracleConfig& cfg = {}) {
    if (s == std::complex<double>{1.0, 0.0})
        throw std::domain_error("xi_direct: s = 1 needs the (s-1)*zeta cancellation");
    std::complex<double> lg = log_gamma_ref(0.5 * s);
    std::complex<double> zv = zeta_em(s, cfg);
    std::complex<double> log_xi = lg + std::log(0.5 * s) + std::log(s - 1.0) -
                                  0.5 * s * oracle_detail::kLnPi + std::log(zv);
    return {log_xi.real(), dd::mod_two_pi(dd::Real{log_xi.imag()})};
}

// Analytic continuation of the Riemann-Siegel Z to complex argument t - i eps:
// exp(i theta(t - i eps)) zeta(1/2 + eps + i t), with
// theta(w) = [ln Gamma(1/4 + i w/2) - ln Gamma(1/4 - i w/2)]/(2i) - (ln pi) w/2.
// This is the quantity the extended main-sum formula approximates, so it is
// the comparison column for delta measurements.
inline std::complex<double> z_reference(double t, double epsilon, const OracleConfig& cfg = {}) {
    if (!std::isfinite(t) || t <= 0.0)
        throw std::domain_error("z_reference: t must be finite and > 0");
    std::complex<double> s{0.5 + epsilon, t};
    std::complex<double> lg1 = log_gamma_ref(0.5 * s);
    std::complex<double> lg2 = log_gamma_ref(0.5 * (1.0 - s));
    std::complex<double> th = (lg1 - lg2) / std::complex<double>{0.0, 2.0} -
                              0.5 * oracle_detail::kLnPi * std::complex<double>{t, -epsilon};
    std::complex<double> zv = zeta_em(s, cfg);
    double mag = std::exp(-th.imag()) * std::abs(zv);
    double phase = dd::mod_two_pi(dd::Real{th.real()}) + std::arg(zv);
    return {mag * std::cos(phase), mag * std::sin(phase)};
}

}  // namespace zext
