// Command-line front end. Subcommands: eval, grid, compare, zeros, curves,
// bounds. Output goes to --out (default stdout) as CSV or JSON; grids fan out
// over --parallelism workers (env ZEXT_PARALLELISM as fallback) with output
// bytes independent of the worker count.
//
// Exit codes: 0 ok, 2 validation failure, 3 numeric domain error,
// 4 compare delta above tolerance, 5 point budget exceeded.
#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "zext/bounds.hpp"
#include "zext/format.hpp"
#include "zext/oracle.hpp"
#include "zext/parallel.hpp"
#include "zext/zeros.hpp"
#include "zext/zext.hpp"

namespace zext::cli {

namespace detail {

using json = nlohmann::json;

struct OutputSink {
    std::string format = "csv";
    std::string path;

    void write(const json& config, const std::vector<std::string>& columns,
               const std::vector<std::vector<json>>& rows, std::ostream& fallback) const {
        std::ofstream file;
        std::ostream* os = &fallback;
        if (!path.empty()) {
            file.open(path, std::ios::binary);
            if (!file) throw std::runtime_error("cannot open output file: " + path);
            os = &file;
        }
        if (format == "json") {
            json doc;
            doc["config"] = config;
            doc["rows"] = json::array();
            for (const auto& r : rows) {
                json jr = json::array();
                for (const auto& v : r) jr.push_back(v);
                doc["rows"].push_back(std::move(jr));
            }
            doc["columns"] = columns;
            *os << doc.dump(2) << '\n';
            return;
        }
        CsvWriter w(*os);
        w.header(columns);
        for (const auto& r : rows) {
            for (const auto& v : r) {
                if (v.is_number_float())
                    w.field(v.get<double>());
                else if (v.is_number_integer())
                    w.field(static_cast<long long>(v.get<long long>()));
                else
                    w.field(v.get<std::string>());
            }
            w.end_row();
        }
    }
};

inline int parallelism_fallback() {
    if (const char* env = std::getenv("ZEXT_PARALLELISM")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

inline void warn_range(double t, double eps, int m, std::ostream& err) {
    if (t < 20.0)
        err << "warning: t = " << fmt_double(t) << " is below the t >= 20 accuracy range\n";
    if (m >= 1 && std::fabs(eps) > 0.5)
        err << "warning: |epsilon| > 0.5 with M >= 1 is outside the verified bound range\n";
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using detail::json;
    CLI::App app{"Extended Riemann-Siegel Z off the critical line"};
    app.require_subcommand(1);

    std::string format = "csv";
    std::string out_path;
    int parallelism = detail::parallelism_fallback();
    bool theta_corrected = false;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path, "Output path (default stdout)");
    app.add_option("--parallelism", parallelism, "Worker count")->check(CLI::PositiveNumber);
    app.add_flag("--theta-corrected", theta_corrected, "Use the 1/t-corrected phase in the main sums");

    OracleConfig ocfg;
    app.add_option("--em-terms", ocfg.em_terms, "Reference-sum cutoff (0 = automatic)");
    app.add_option("--em-bernoulli-order", ocfg.em_bernoulli_order, "Reference tail order");
    app.add_option("--target-abs-err", ocfg.target_abs_err, "Reference absolute error target");

    // eval
    auto* c_eval = app.add_subcommand("eval", "Evaluate Z(t, eps) at one point");
    double ev_t = 0.0, ev_eps = 0.0;
    int ev_m = 0;
    c_eval->add_option("--t", ev_t, "Imaginary coordinate t")->required();
    c_eval->add_option("--eps", ev_eps, "Offset from the critical line");
    c_eval->add_option("--m", ev_m, "Remainder order")->check(CLI::Range(0, 2));

    // grid
    auto* c_grid = app.add_subcommand("grid", "Evaluate Z over a (t, eps) rectangle");
    std::vector<double> gr_trange, gr_erange{-0.5, 0.5};
    double gr_dt = 1.0;
    int gr_neps = 11, gr_m = 1;
    c_grid->add_option("--t-range", gr_trange, "t range: lo hi")->expected(2)->required();
    c_grid->add_option("--dt", gr_dt, "t step");
    c_grid->add_option("--eps-range", gr_erange, "eps range: lo hi")->expected(2);
    c_grid->add_option("--n-eps", gr_neps, "eps samples")->check(CLI::Range(2, 100000));
    c_grid->add_option("--m", gr_m, "Remainder order")->check(CLI::Range(0, 2));

    // compare
    auto* c_cmp = app.add_subcommand("compare", "Compare the formula with the reference Z");
    double cmp_t = 0.0, cmp_tol = 1e-3;
    int cmp_m = 0;
    std::vector<double> cmp_eps{0.1, 0.2, 0.3, 0.4, 0.5};
    c_cmp->add_option("--t", cmp_t, "Imaginary coordinate t")->required();
    c_cmp->add_option("--eps", cmp_eps, "Offsets to compare at");
    c_cmp->add_option("--m", cmp_m, "Remainder order")->check(CLI::Range(0, 2));
    c_cmp->add_option("--tolerance", cmp_tol, "Maximum allowed |Z - Z_ref|");

    // zeros
    auto* c_zeros = app.add_subcommand("zeros", "Locate critical-line zeros");
    std::vector<double> zr_trange;
    double zr_dt = 0.05;
    int zr_m = 2;
    c_zeros->add_option("--t-range", zr_trange, "t range: lo hi")->expected(2)->required();
    c_zeros->add_option("--dt", zr_dt, "Scan step");
    c_zeros->add_option("--m", zr_m, "Remainder order")->check(CLI::Range(0, 2));

    // curves
    auto* c_curves = app.add_subcommand("curves", "Trace Re/Im zero curves of e^{i pi eps/4} Z");
    std::vector<double> cv_trange, cv_erange{-0.6, 0.6};
    double cv_dt = 0.05;
    int cv_neps = 33, cv_m = 1;
    std::string cv_kind = "im";
    std::int64_t cv_budget = 20'000'000;
    c_curves->add_option("--t-range", cv_trange, "t range: lo hi")->expected(2)->required();
    c_curves->add_option("--dt", cv_dt, "Scan-line spacing");
    c_curves->add_option("--eps-range", cv_erange, "eps range: lo hi")->expected(2);
    c_curves->add_option("--n-eps", cv_neps, "Samples per scan line")->check(CLI::Range(8, 100000));
    c_curves->add_option("--kind", cv_kind, "Component: re or im")->check(CLI::IsMember({"re", "im"}));
    c_curves->add_option("--m", cv_m, "Remainder order")->check(CLI::Range(0, 2));
    c_curves->add_option("--budget", cv_budget, "Grid point budget");

    // bounds
    auto* c_bounds = app.add_subcommand("bounds", "Error upper-bound ratio curves");
    std::vector<double> bd_r{1.05, 2.0}, bd_eps{-0.5, 0.5}, bd_trange{20.0, 200.0};
    int bd_nt = 46;
    c_bounds->add_option("--r", bd_r, "Cutoff parameters in (1,2]");
    c_bounds->add_option("--eps", bd_eps, "Offsets");
    c_bounds->add_option("--t-range", bd_trange, "t range: lo hi")->expected(2);
    c_bounds->add_option("--n-t", bd_nt, "Log-spaced t samples")->check(CLI::Range(2, 100000));

    std::vector<const char*> argv;
    std::string prog = "zext";
    argv.push_back(prog.c_str());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    detail::OutputSink sink{format, out_path};
    ZOptions zopt{theta_corrected};

    try {
        if (*c_eval) {
            detail::warn_range(ev_t, ev_eps, ev_m, err);
            ZEvaluation ev = z_ext(ev_t, ev_eps, ev_m, zopt);
            XiScaled xs = xi_scaled(ev_t, ev_eps, ev_m, zopt);
            json config{{"command", "eval"}, {"t", ev_t}, {"epsilon", ev_eps}, {"M", ev_m},
                        {"theta_corrected", theta_corrected}};
            std::vector<std::string> cols{"t", "epsilon", "M", "N", "p",
                                          "re_z", "im_z", "re_xi_scaled", "im_xi_scaled"};
            std::vector<std::vector<json>> rows{{ev_t, ev_eps, ev_m, ev.truncation, ev.p,
                                                 ev.z.real(), ev.z.imag(), xs.value.real(),
                                                 xs.value.imag()}};
            sink.write(config, cols, rows, out);
            return 0;
        }

        if (*c_grid) {
            std::size_t nt =
                static_cast<std::size_t>(std::floor((gr_trange[1] - gr_trange[0]) / gr_dt + 1e-9)) + 1;
            std::size_t total = nt * static_cast<std::size_t>(gr_neps);
            std::vector<std::vector<json>> rows(total);
            double e_step = (gr_erange[1] - gr_erange[0]) / (gr_neps - 1);
            parallel_for(total, parallelism, [&](std::size_t idx) {
                std::size_t it = idx / static_cast<std::size_t>(gr_neps);
                std::size_t ie = idx % static_cast<std::size_t>(gr_neps);
                double t = gr_trange[0] + gr_dt * static_cast<double>(it);
                double e = gr_erange[0] + e_step * static_cast<double>(ie);
                ZEvaluation ev = z_ext(t, e, gr_m, zopt);
                Complex rot = xi_scaled(t, e, gr_m, zopt).value;
                rows[idx] = {t, e, ev.z.real(), ev.z.imag(), rot.real(), rot.imag()};
            });
            json config{{"command", "grid"}, {"t_range", gr_trange}, {"dt", gr_dt},
                        {"eps_range", gr_erange}, {"n_eps", gr_neps}, {"M", gr_m},
                        {"theta_corrected", theta_corrected}, {"parallelism", parallelism}};
            sink.write(config, {"t", "epsilon", "re_z", "im_z", "re_xi_scaled", "im_xi_scaled"},
                       rows, out);
            return 0;
        }

        if (*c_cmp) {
            if (std::fabs(cmp_t) > kOracleImDomain)
                err << "warning: t above the reference accuracy domain (3e5)\n";
            std::vector<std::vector<json>> rows(cmp_eps.size());
            parallel_for(cmp_eps.size(), parallelism, [&](std::size_t i) {
                double e = cmp_eps[i];
                Complex zf = z_ext(cmp_t, e, cmp_m, zopt).z;
                Complex zr = z_reference(cmp_t, e, ocfg);
                rows[i] = {cmp_t, e, zf.real(), zf.imag(), zr.real(), zr.imag(), std::abs(zf - zr)};
            });
            json config{{"command", "compare"}, {"t", cmp_t}, {"M", cmp_m},
                        {"tolerance", cmp_tol}, {"theta_corrected", theta_corrected}};
            sink.write(config, {"t", "epsilon", "re_z", "im_z", "re_ref", "im_ref", "delta"},
                       rows, out);
            for (const auto& r : rows)
                if (r[6].get<double>() > cmp_tol) return 4;
            return 0;
        }

        if (*c_zeros) {
            CriticalZeroScan scan = critical_zeros({zr_trange[0], zr_trange[1]}, zr_dt, zr_m, zopt);
            for (double s : scan.suspects)
                err << "warning: |Z| dip without sign change near t = " << fmt_double(s)
                    << " (possible unresolved pair)\n";
            std::vector<std::vector<json>> rows;
            rows.reserve(scan.zeros.size());
            for (const auto& z : scan.zeros) rows.push_back({z.t, z.refinement_width});
            json config{{"command", "zeros"}, {"t_range", zr_trange}, {"dt", zr_dt}, {"M", zr_m}};
            sink.write(config, {"t", "width"}, rows, out);
            return 0;
        }

        if (*c_curves) {
            TraceOptions topt;
            topt.M = cv_m;
            topt.z_opts = zopt;
            topt.point_budget = cv_budget;
            topt.parallelism = parallelism;
            CurveKind kind = cv_kind == "re" ? CurveKind::ReZero : CurveKind::ImZero;
            auto curves = trace_curves({cv_trange[0], cv_trange[1]}, cv_dt,
                                       {cv_erange[0], cv_erange[1]}, cv_neps, kind, topt);
            std::vector<std::vector<json>> rows;
            for (std::size_t id = 0; id < curves.size(); ++id)
                for (const auto& [t, e] : curves[id].points)
                    rows.push_back({static_cast<long long>(id), cv_kind, t, e});
            json config{{"command", "curves"}, {"t_range", cv_trange}, {"dt", cv_dt},
                        {"eps_range", cv_erange}, {"n_eps", cv_neps}, {"kind", cv_kind},
                        {"M", cv_m}, {"parallelism", parallelism}};
            sink.write(config, {"curve_id", "kind", "t", "epsilon"}, rows, out);
            return 0;
        }

        if (*c_bounds) {
            std::vector<std::vector<json>> rows;
            double l0 = std::log(bd_trange[0]);
            double l1 = std::log(bd_trange[1]);
            for (double r : bd_r)
                for (double e : bd_eps)
                    for (int i = 0; i < bd_nt; ++i) {
                        double t = std::exp(l0 + (l1 - l0) * i / (bd_nt - 1));
                        BoundReport b = bound_report(t, e, r);
                        rows.push_back({r, e, t, b.ub_L0, b.ub_L2, b.ub_L3, b.ratio});
                    }
            json config{{"command", "bounds"}, {"r", bd_r}, {"eps", bd_eps},
                        {"t_range", bd_trange}, {"n_t", bd_nt}};
            sink.write(config, {"r", "epsilon", "t", "ub_L0", "ub_L2", "ub_L3", "ratio"}, rows, out);
            return 0;
        }
    } catch (const budget_error& e) {
        err << "error: " << e.what() << '\n';
        return 5;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace zext::cli
