#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <random>

#include "zext/core.hpp"

using namespace zext;

TEST_CASE("grid_quantities basics") {
    auto g = grid_quantities(7000.0);
    CHECK(g.truncation == 33);
    CHECK(g.p == Catch::Approx(0.37790589062272717).margin(1e-14));
    CHECK(g.omega * g.omega * 7000.0 == Catch::Approx(kTwoPiD).epsilon(1e-15));
    CHECK(g.a_mod == Catch::Approx(std::sqrt(kTwoPiD * 7000.0)).epsilon(1e-15));

    auto g2 = grid_quantities(250000.0);
    CHECK(g2.truncation == 199);
    CHECK(g2.p == Catch::Approx(0.471140200716339).margin(1e-13));

    // the double nearest 2pi snaps onto the lattice point
    auto g3 = grid_quantities(kTwoPiD);
    CHECK(g3.truncation == 1);
    CHECK(g3.p == 0.0);
    CHECK(g3.omega == Catch::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(grid_quantities(0.0), std::domain_error);
    CHECK_THROWS_AS(grid_quantities(-3.0), std::domain_error);
    CHECK_THROWS_AS(grid_quantities(std::nan("")), std::domain_error);
}

TEST_CASE("grid_quantities near lattice boundaries") {
    // t = 2 pi k^2 +- delta: N flips exactly at the lattice point
    for (int k : {2, 7, 40}) {
        double tk = kTwoPiD * k * k;
        auto lo = grid_quantities(tk - 1e-6);
        auto hi = grid_quantities(tk + 1e-6);
        CHECK(lo.truncation == k - 1);
        CHECK(hi.truncation == k);
        CHECK(lo.p == Catch::Approx(1.0).margin(1e-7));
        CHECK(hi.p == Catch::Approx(0.0).margin(1e-7));
    }
    // N + p reproduces sqrt(t/2pi) to a few ulps
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> ts(20.0, 1e6);
    for (int i = 0; i < 500; ++i) {
        double t = ts(rng);
        auto g = grid_quantities(t);
        double s = std::sqrt(t / kTwoPiD);
        CHECK(std::fabs((static_cast<double>(g.truncation) + g.p) - s) <= 4e-16 * s);
        CHECK(g.p >= 0.0);
        CHECK(g.p < 1.0);
    }
}

TEST_CASE("theta1 and theta") {
    CHECK(theta1(kTwoPiD * std::exp(1.0)) == Catch::Approx(-kPiD / 8.0).margin(1e-12));
    CHECK(theta1(kTwoPiD) == Catch::Approx(-3.5342917352885173).margin(1e-13));
    CHECK(theta1(7000.0) == Catch::Approx(21054.866566616667).margin(2e-9));
    CHECK(theta(7000.0) - theta1(7000.0) ==
          Catch::Approx(1.0 / (48.0 * 7000.0) + 7.0 / (5760.0 * 7000.0 * 7000.0 * 7000.0))
              .epsilon(1e-13));
    CHECK(theta(1000.0) - theta1(1000.0) == Catch::Approx(2.0833458333e-5).epsilon(1e-6));
    CHECK_THROWS_AS(theta1(0.0), std::domain_error);
    CHECK_THROWS_AS(theta(-1.0), std::domain_error);

    // d theta1 / dt = ln(t/2pi)/2, checked by central differences
    for (double t : {25.0, 400.0, 9.5e5}) {
        double h = t * 1e-6;
        double fd = (theta1(t + h) - theta1(t - h)) / (2.0 * h);
        CHECK(fd == Catch::Approx(0.5 * std::log(t / kTwoPiD)).epsilon(1e-8));
    }
}

TEST_CASE("scale factors") {
    CHECK(scale_factor_F(1.0) == Catch::Approx(0.5104296346212344).epsilon(1e-13));
    CHECK(log_scale_factor_F(100.0) == Catch::Approx(-70.36787283794331).margin(1e-11));
    CHECK(log_scale_factor_F(7000.0) == Catch::Approx(-5482.1803336067505).margin(1e-8));
    CHECK(scale_factor_F(kTwoPiD) == Catch::Approx(0.2007647091198214).epsilon(1e-13));

    // log and direct forms agree wherever the direct form is representable
    for (double t : {0.5, 1.0, 10.0, 100.0, 600.0}) {
        CHECK(std::exp(log_scale_factor_F(t)) == Catch::Approx(scale_factor_F(t)).epsilon(1e-13));
    }
    // monotone decreasing for t >= 3
    double prev = log_scale_factor_F(3.0);
    for (double t = 4.0; t < 40.0; t += 1.0) {
        double cur = log_scale_factor_F(t);
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK_THROWS_AS(scale_factor_f(0.0), std::domain_error);
}

TEST_CASE("F tracks f") {
    std::array<double, 5> ts{50.0, 100.0, 500.0, 1000.0, 5000.0};
    std::array<double, 5> expected{-0.00011249180020221381, -2.8124487356628636e-05,
                                   -1.1249991796908233e-06, -2.812499487305207e-07,
                                   -1.1249999917968753e-08};
    double prev = 1.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        double ratio = std::exp(log_scale_factor_F(ts[i])) / scale_factor_f(ts[i]);
        CHECK(ratio - 1.0 == Catch::Approx(expected[i]).epsilon(1e-6));
        CHECK(std::fabs(ratio - 1.0) <= 1.0 / ts[i]);
        CHECK(std::fabs(ratio - 1.0) < prev);
        prev = std::fabs(ratio - 1.0);
    }
    CHECK(std::fabs(std::exp(log_scale_factor_F(100.0)) / scale_factor_f(100.0) - 1.0) <= 1e-3);
    CHECK(std::fabs(std::exp(log_scale_factor_F(1000.0)) / scale_factor_f(1000.0) - 1.0) <= 1e-5);
}

TEST_CASE("stirling series against the reference log-Gamma") {
    // ln Gamma(2) = 0 within the series' own error bound
    Complex v = stirling_log_gamma(Complex{1.0, 0.0}, 3);
    CHECK(std::abs(v) <= stirling_remainder_bound(Complex{1.0, 0.0}, 3));

    struct Case { Complex z; Complex lg; };  // lg = ln Gamma(z+1), frozen
    const Case cases[] = {
        {{3.0, 4.0}, {-0.14718887216968374, 5.66995965603627}},
        {{-0.25, 3500.0}, {-5494.828075687702, 25062.206568229158}},
        {{5.0, -2.0}, {4.43234967112704, -3.454349787162066}},
        {{0.25, 10.0}, {-13.061695264916773, 14.179995200114462}},
    };
    for (const auto& c : cases)
        for (int K : {2, 3, 4, 6}) {
            double err = std::abs(stirling_log_gamma(c.z, K) - c.lg);
            CHECK(err <= stirling_remainder_bound(c.z, K) + 1e-9 * std::abs(c.lg));
        }
    CHECK_THROWS_AS(stirling_log_gamma(Complex{-2.0, 0.0}, 3), std::domain_error);
    CHECK_THROWS_AS(stirling_log_gamma(Complex{1.0, 0.0}, 0), std::invalid_argument);
    CHECK_THROWS_AS(stirling_log_gamma(Complex{1.0, 0.0}, 7), std::invalid_argument);
}

TEST_CASE("stirling bound behaviour") {
    // arg = 0: the cosine factor is 1
    Complex z{5.0, 0.0};
    double b = stirling_remainder_bound(z, 3);
    CHECK(b == Catch::Approx(std::fabs(kBernoulli[2]) / (6.0 * 5.0 * std::pow(5.0, 5.0))).epsilon(1e-14));
    // decreasing in |z| along a fixed ray
    Complex dir{0.6, 0.8};
    double prev = stirling_remainder_bound(3.0 * dir, 4);
    for (double s = 4.0; s < 20.0; s += 1.0) {
        double cur = stirling_remainder_bound(s * dir, 4);
        CHECK(cur < prev);
        prev = cur;
    }
    // K=3, z ~ i t/2 at t = 7000: bound below 1/(4.9 t^5)
    Complex zt{-0.125, 3500.0};
    CHECK(stirling_remainder_bound(zt, 3) <= 1.0 / (4.9 * std::pow(7000.0, 5.0)));
}

TEST_CASE("stirling truncation error within the bound at random points") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> rad(5.0, 300.0);
    std::uniform_real_distribution<double> ang(-0.9 * kPiD, 0.9 * kPiD);
    OracleConfig cfg;
    for (int i = 0; i < 100; ++i) {
        double r = rad(rng), a = ang(rng);
        Complex z{r * std::cos(a), r * std::sin(a)};
        Complex truth = log_gamma_ref(z + 1.0);
        for (int K : {3, 6}) {
            double err = std::abs(stirling_log_gamma(z, K) - truth);
            // reference itself is good to ~1e-12 relative
            CHECK(err <= stirling_remainder_bound(z, K) + 1e-11 * (1.0 + std::abs(truth)));
        }
    }
}

TEST_CASE("error series") {
    CHECK(err_series_im(100.0, 0.0, +1) == Catch::Approx(1.0 / 4800.0).epsilon(1e-15));
    CHECK(err_series_im(100.0, 0.0, -1) == Catch::Approx(-1.0 / 4800.0).epsilon(1e-15));
    CHECK(err_series_im(7000.0, 0.3, -1) == Catch::Approx(-9.61904761904762e-05).epsilon(1e-12));
    CHECK(err_series_re(100.0, 0.0, +1) == Catch::Approx(2.8125e-5).epsilon(1e-13));
    CHECK(err_series_re(100.0, 0.0, -1) == Catch::Approx(2.8125e-5).epsilon(1e-13));

    // sign symmetry: re(eps,+1) = re(-eps,-1)
    for (double e : {-0.7, -0.2, 0.0, 0.4, 1.0})
        CHECK(err_series_re(55.0, e, +1) == Catch::Approx(err_series_re(55.0, -e, -1)).epsilon(1e-15));
    // both scale exactly as 1/t
    for (double e : {-0.5, 0.3}) {
        CHECK(err_series_im(200.0, e, +1) == Catch::Approx(0.5 * err_series_im(100.0, e, +1)).epsilon(1e-15));
        CHECK(err_series_im(200.0, e, -1) == Catch::Approx(0.5 * err_series_im(100.0, e, -1)).epsilon(1e-15));
    }
    CHECK_THROWS_AS(err_series_im(10.0, 0.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(err_series_re(-1.0, 0.0, 1), std::domain_error);
}

TEST_CASE("strip point validation") {
    CHECK_NOTHROW(StripPoint{30.0, 0.99}.validate());
    CHECK_NOTHROW(StripPoint{5.0, 0.0}.validate());  // below 20 is a warning, not an error
    CHECK(StripPoint{5.0, 0.0}.below_accuracy_floor());
    CHECK_FALSE(StripPoint{20.0, 0.0}.below_accuracy_floor());
    CHECK_THROWS_AS((StripPoint{-1.0, 0.0}.validate()), std::domain_error);
    CHECK_THROWS_AS((StripPoint{30.0, 1.5}.validate()), std::domain_error);
}
