// Closed-form upper bounds for the off-saddle contour contributions, each
// normalized by the smallest leading remainder R_0 (p = 1/2), and their sum:
// the Delta R / R ratio curve. r in (1,2] parameterizes where the saddle
// segment is cut off.
#pragma once

#include <cmath>
#include <stdexcept>

#include "zext/core.hpp"
#include "zext/psi.hpp"

namespace zext {

namespace bounds_detail {

inline void check_r(double r, const char* who) {
    if (!(r > 1.0 && r <= 2.0))
        throw std::domain_error(std::string(who) + ": r must be in (1,2]");
}

inline void check_te(double t, double epsilon, const char* who) {
    if (!(t > 10.0))
        throw std::domain_error(std::string(who) + ": t must be > 10");
    if (!(epsilon >= -0.5 && epsilon <= 0.5))
        throw std::domain_error(std::string(who) + ": epsilon must be in [-1/2, 1/2]");
}

// R_0 at the kernel minimum, the normalizer for all three bounds.
inline double r0_min(double t) { return std::pow(kTwoPiD / t, 0.25) * psi(0.5); }

}  // namespace bounds_detail

// Decay exponent of the pre-saddle segment bound; negative on (1,2].
inline double K0(double r) {
    bounds_detail::check_r(r, "K0");
    return std::atan(1.0 / (r * std::sqrt(2.0) + 1.0)) - 1.0 / (r * std::sqrt(2.0));
}

// Decay exponent of the post-saddle segment bound.
inline double K2(double r) {
    bounds_detail::check_r(r, "K2");
    return -(std::atan(1.0 / (std::sqrt(2.0) * r - 1.0)) - 1.0 / (std::sqrt(2.0) * r));
}

inline double upper_bound_L0(double t, double epsilon, double r) {
    bounds_detail::check_r(r, "upper_bound_L0");
    bounds_detail::check_te(t, epsilon, "upper_bound_L0");
    double num = 2.0 * std::sqrt(2.0) * std::exp(K0(r) * t);
    double den = std::pow(std::sqrt(kTwoPiD), 0.5 * (1.0 + epsilon)) * std::sqrt(std::sqrt(kTwoPiD * t));
    return num / den / bounds_detail::r0_min(t);
}

inline double upper_bound_L2(double t, double epsilon, double r) {
    bounds_detail::check_r(r, "upper_bound_L2");
    bounds_detail::check_te(t, epsilon, "upper_bound_L2");
    double v = std::pow(1.0 / (r * std::sqrt(2.0)), epsilon) * std::exp(K2(r) * t) *
               2.0 * std::sqrt(r) * std::pow(t / kPiD, 0.25);
    return v / bounds_detail::r0_min(t);
}

inline double upper_bound_L3(double t, double epsilon, double r) {
    bounds_detail::check_r(r, "upper_bound_L3");
    bounds_detail::check_te(t, epsilon, "upper_bound_L3");
    double root = std::sqrt(kTwoPiD * t);
    double v = std::pow((root + kPiD) / root, epsilon) * std::exp(-t) / std::sqrt(kPiD * t);
    return v / bounds_detail::r0_min(t);
}

struct BoundReport {
    double t = 0.0;
    double epsilon = 0.0;
    double r = 0.0;
    double K0 = 0.0;
    double K2 = 0.0;
    double ub_L0 = 0.0;
    double ub_L2 = 0.0;
    double ub_L3 = 0.0;
    double ratio = 0.0;  // ub_L0 + ub_L2 + ub_L3
};

inline BoundReport bound_report(double t, double epsilon, double r) {
    BoundReport b;
    b.t = t;
    b.epsilon = epsilon;
    b.r = r;
    b.K0 = K0(r);
    b.K2 = K2(r);
    b.ub_L0 = upper_bound_L0(t, epsilon, r);
    b.ub_L2 = upper_bound_L2(t, epsilon, r);
    b.ub_L3 = upper_bound_L3(t, epsilon, r);
    b.ratio = b.ub_L0 + b.ub_L2 + b.ub_L3;
    return b;
}

}  // namespace zext
