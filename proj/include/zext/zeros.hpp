// Level-set scanning in the (t, epsilon) plane and critical-line zero
// bracketing. Scan lines are independent and may run in parallel; linking is
// applied afterwards in t order, so output never depends on the worker count.
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zext/parallel.hpp"
#include "zext/zext.hpp"

namespace zext {

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class CurveKind { ReZero, ImZero };

struct ZeroCurve {
    CurveKind kind = CurveKind::ImZero;
    std::vector<std::pair<double, double>> points;  // (t, epsilon), ordered by t
    double scan_dt = 0.0;
};

struct CriticalZero {
    double t = 0.0;
    double refinement_width = 0.0;
};

struct CriticalZeroScan {
    std::vector<CriticalZero> zeros;
    // Grid points where |Z| dips below the suspect threshold without a sign
    // change: possibly an unresolved close pair.
    std::vector<double> suspects;
};

namespace zeros_detail {

inline constexpr double kComponentTol = 1e-9;
inline constexpr double kWidthTol = 1e-12;
inline constexpr double kDipThreshold = 0.02;

inline double component(double t, double eps, CurveKind kind, int M, ZOptions opt) {
    Complex v = xi_scaled(t, eps, M, opt).value;
    return kind == CurveKind::ReZero ? v.real() : v.imag();
}

template <typename F>
double bisect(F&& f, double lo, double hi, double flo) {
    for (int it = 0; it < 200 && hi - lo > kWidthTol; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (std::fabs(fm) <= kComponentTol) return mid;
        if ((flo < 0.0) != (fm < 0.0)) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace zeros_detail

// Roots of the selected component of e^{i pi eps/4} Z(t, .) along one constant-t
// line. Exact zeros at sample points are taken as roots directly.
inline std::vector<double> scan_line(double t, std::pair<double, double> eps_range,
                                     int n_samples, CurveKind kind, int M = 1,
                                     ZOptions opt = {}) {
    if (eps_range.first < -1.0 || eps_range.second > 1.0 || eps_range.first >= eps_range.second)
        throw std::invalid_argument("scan_line: eps_range must be increasing within [-1,1]");
    if (n_samples < 8) throw std::invalid_argument("scan_line: need n_samples >= 8");

    auto f = [&](double e) { return zeros_detail::component(t, e, kind, M, opt); };
    std::vector<double> es(static_cast<std::size_t>(n_samples));
    std::vector<double> vs(static_cast<std::size_t>(n_samples));
    double step = (eps_range.second - eps_range.first) / (n_samples - 1);
    for (int i = 0; i < n_samples; ++i) {
        es[static_cast<std::size_t>(i)] = eps_range.first + step * i;
        vs[static_cast<std::size_t>(i)] = f(es[static_cast<std::size_t>(i)]);
    }
    std::vector<double> roots;
    for (int i = 0; i < n_samples; ++i) {
        if (vs[static_cast<std::size_t>(i)] == 0.0) {
            roots.push_back(es[static_cast<std::size_t>(i)]);
            continue;
        }
        if (i + 1 < n_samples && vs[static_cast<std::size_t>(i + 1)] != 0.0 &&
            (vs[static_cast<std::size_t>(i)] < 0.0) != (vs[static_cast<std::size_t>(i + 1)] < 0.0)) {
            roots.push_back(zeros_detail::bisect(f, es[static_cast<std::size_t>(i)],
                                                 es[static_cast<std::size_t>(i + 1)],
                                                 vs[static_cast<std::size_t>(i)]));
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

struct TraceOptions {
    int M = 1;
    ZOptions z_opts{};
    std::int64_t point_budget = 20'000'000;
    int parallelism = 1;
};

// Repeated scan lines over a t grid, with roots greedily linked into polylines
// by nearest-epsilon continuation. The jump cutoff is 3 grid cells.
inline std::vector<ZeroCurve> trace_curves(std::pair<double, double> t_range, double dt,
                                           std::pair<double, double> eps_range, int n_eps,
                                           CurveKind kind, TraceOptions opt = {}) {
    if (!(dt > 0.0)) throw std::invalid_argument("trace_curves: dt must be > 0");
    if (t_range.second < t_range.first)
        throw std::invalid_argument("trace_curves: t_range must be ordered");
    std::size_t n_lines =
        static_cast<std::size_t>(std::floor((t_range.second - t_range.first) / dt + 1e-9)) + 1;
    if (static_cast<std::int64_t>(n_lines) * n_eps > opt.point_budget)
        throw budget_error("trace_curves: grid exceeds the point budget");

    std::vector<double> ts(n_lines);
    for (std::size_t i = 0; i < n_lines; ++i) ts[i] = t_range.first + dt * static_cast<double>(i);
    std::vector<std::vector<double>> line_roots(n_lines);
    parallel_for(n_lines, opt.parallelism, [&](std::size_t i) {
        line_roots[i] = scan_line(ts[i], eps_range, n_eps, kind, opt.M, opt.z_opts);
    });

    const double jump = 3.0 * (eps_range.second - eps_range.first) / n_eps;
    std::vector<ZeroCurve> done;
    std::vector<ZeroCurve> open;
    for (std::size_t i = 0; i < n_lines; ++i) {
        const auto& roots = line_roots[i];
        std::vector<bool> root_used(roots.size(), false);
        std::vector<bool> curve_used(open.size(), false);
        // candidate matches ordered by |delta eps|, then curve, then root
        struct Cand { double d; std::size_t curve, root; };
        std::vector<Cand> cands;
        for (std::size_t c = 0; c < open.size(); ++c)
            for (std::size_t r = 0; r < roots.size(); ++r) {
                double d = std::fabs(open[c].points.back().second - roots[r]);
                if (d <= jump) cands.push_back({d, c, r});
            }
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            if (a.d != b.d) return a.d < b.d;
            if (a.curve != b.curve) return a.curve < b.curve;
            return a.root < b.root;
        });
        for (const auto& cd : cands) {
            if (curve_used[cd.curve] || root_used[cd.root]) continue;
            open[cd.curve].points.emplace_back(ts[i], roots[cd.root]);
            curve_used[cd.curve] = true;
            root_used[cd.root] = true;
        }
        // retire curves that found no continuation
        std::vector<ZeroCurve> still_open;
        for (std::size_t c = 0; c < open.size(); ++c) {
            if (curve_used[c])
                still_open.push_back(std::move(open[c]));
            else
                done.push_back(std::move(open[c]));
        }
        open = std::move(still_open);
        for (std::size_t r = 0; r < roots.size(); ++r)
            if (!root_used[r]) {
                ZeroCurve c;
                c.kind = kind;
                c.scan_dt = dt;
                c.points.emplace_back(ts[i], roots[r]);
                open.push_back(std::move(c));
            }
    }
    for (auto& c : open) done.push_back(std::move(c));
    std::sort(done.begin(), done.end(), [](const ZeroCurve& a, const ZeroCurve& b) {
        if (a.points.front().first != b.points.front().first)
            return a.points.front().first < b.points.front().first;
        return a.points.front().second < b.points.front().second;
    });
    return done;
}

// Sign-change bracketing of the critical-line Z over a t grid, bisected to
// width <= 1e-9. M defaults to 2: on the line the second-order remainder is
// available and the zero locations want every bit of it.
inline CriticalZeroScan critical_zeros(std::pair<double, double> t_range, double dt,
                                       int M = 2, ZOptions opt = {}) {
    if (!(dt > 0.0)) throw std::invalid_argument("critical_zeros: dt must be > 0");
    if (t_range.second < t_range.first)
        throw std::invalid_argument("critical_zeros: t_range must be ordered");
    auto f = [&](double t) { return z_classic(t, M, opt); };
    std::size_t n =
        static_cast<std::size_t>(std::floor((t_range.second - t_range.first) / dt + 1e-9)) + 1;
    std::vector<double> ts(n), vs(n);
    for (std::size_t i = 0; i < n; ++i) {
        ts[i] = t_range.first + dt * static_cast<double>(i);
        vs[i] = f(ts[i]);
    }
    CriticalZeroScan out;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (vs[i] == 0.0) {
            out.zeros.push_back({ts[i], 0.0});
            continue;
        }
        if (vs[i + 1] != 0.0 && (vs[i] < 0.0) != (vs[i + 1] < 0.0)) {
            double lo = ts[i], hi = ts[i + 1], flo = vs[i];
            for (int it = 0; it < 80 && hi - lo > 1e-9; ++it) {
                double mid = 0.5 * (lo + hi);
                double fm = f(mid);
                if ((flo < 0.0) != (fm < 0.0)) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            out.zeros.push_back({0.5 * (lo + hi), hi - lo});
        }
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        bool same_sign = (vs[i - 1] < 0.0) == (vs[i] < 0.0) && (vs[i] < 0.0) == (vs[i + 1] < 0.0);
        bool dip = std::fabs(vs[i]) < zeros_detail::kDipThreshold &&
                   std::fabs(vs[i]) < std::fabs(vs[i - 1]) && std::fabs(vs[i]) < std::fabs(vs[i + 1]);
        if (same_sign && dip && vs[i] != 0.0) out.suspects.push_back(ts[i]);
    }
    return out;
}

}  // namespace zext
