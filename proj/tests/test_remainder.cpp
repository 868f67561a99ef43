#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "zext/remainder.hpp"

using namespace zext;

TEST_CASE("p_eps_product") {
    CHECK(p_eps_product(1, 1, 0.0) == Catch::Approx(0.5).epsilon(1e-15));
    CHECK(p_eps_product(1, 2, 0.0) == Catch::Approx(0.75).epsilon(1e-15));
    CHECK(p_eps_product(4, 4, 0.25) == Catch::Approx(3.25).epsilon(1e-15));
    CHECK(p_eps_product(1, 3, 0.1) == Catch::Approx(0.4 * 1.4 * 2.4).epsilon(1e-14));
    CHECK_THROWS_AS(p_eps_product(3, 2, 0.0), std::invalid_argument);
}

TEST_CASE("b polynomial structure") {
    auto bs = b_polynomials(0.3, 9);
    REQUIRE(bs.size() == 10);
    // b_0 = 1 for any eps
    REQUIRE(bs[0].coeffs.size() == 1);
    CHECK(bs[0].coeffs.at(0) == Complex{1.0, 0.0});
    // power windows: max n, min n - 2*floor(n/3)
    const std::vector<std::vector<int>> expected_powers{
        {0}, {1}, {2}, {1, 3}, {2, 4}, {3, 5}, {2, 4, 6}, {3, 5, 7}, {4, 6, 8}, {3, 5, 7, 9}};
    for (int n = 0; n <= 9; ++n) {
        std::vector<int> got;
        for (const auto& [k, c] : bs[n].coeffs) got.push_back(k);
        CHECK(got == expected_powers[n]);
        int min_expected = n - 2 * (n / 3);
        CHECK(got.front() == min_expected);
        if (!got.empty()) CHECK(got.back() == n);
    }
    // b_1 coefficient: i (1/2 - eps) / (2 pi)
    Complex b11 = bs[1].coeffs.at(1);
    CHECK(b11.real() == Catch::Approx(0.0).margin(1e-18));
    CHECK(b11.imag() == Catch::Approx(p_eps_product(1, 1, 0.3) / kTwoPiD).epsilon(1e-14));
    CHECK(b11.imag() == Catch::Approx(0.03183098861837907).epsilon(1e-13));
    // b_3 omega^1 coefficient: -1/(12 pi^2), eps-independent
    CHECK(bs[3].coeffs.at(1).real() == Catch::Approx(-0.008443431970194815).epsilon(1e-13));
    CHECK(bs[3].coeffs.at(1).imag() == Catch::Approx(0.0).margin(1e-18));
    auto bs0 = b_polynomials(-0.62, 3);
    CHECK(bs0[3].coeffs.at(1).real() == Catch::Approx(-0.008443431970194815).epsilon(1e-13));
    // frozen spot values deeper in the table
    CHECK(bs[6].coeffs.at(2).real() == Catch::Approx(3.564577171765394e-05).epsilon(1e-12));
    CHECK(bs[9].coeffs.at(3).real() == Catch::Approx(-1.0032421617436846e-07).epsilon(1e-12));
    CHECK_THROWS_AS(b_polynomials(0.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(b_polynomials(0.0, -1), std::invalid_argument);
}

TEST_CASE("c coefficients") {
    // c_0 = psi(p)
    CHECK(c_coefficient(0, 0.0).real() == Catch::Approx(0.9238795325112867).epsilon(1e-13));
    CHECK(c_coefficient(0, 0.3).imag() == 0.0);
    // c_1 = psi'(p)/2; vanishes at the symmetry point
    CHECK(std::abs(c_coefficient(1, 0.5)) < 1e-12);
    PsiJet j = psi_jet(0.3, 1);
    CHECK(c_coefficient(1, 0.3).real() == Catch::Approx(0.5 * j.values[1]).epsilon(1e-13));
    // c_2 imaginary part is pi psi(p)
    Complex c2 = c_coefficient(2, 0.3);
    CHECK(c2.imag() == Catch::Approx(kPiD * psi(0.3)).epsilon(1e-12));
    CHECK(c2.real() == Catch::Approx(1.1149917972315264).epsilon(1e-11));
    Complex c3 = c_coefficient(3, 0.3);
    CHECK(c3.real() == Catch::Approx(-1.1178418660361522).epsilon(1e-10));
    CHECK(c3.imag() == Catch::Approx(-3.6065133557508653).epsilon(1e-10));
    CHECK_THROWS_AS(c_coefficient(7, 0.3), std::invalid_argument);
}

TEST_CASE("closed-form C1 and C2") {
    Complex c = C1(0.2, 0.3);
    CHECK(c.real() == Catch::Approx(0.009886811663199189).epsilon(1e-11));
    CHECK(c.imag() == Catch::Approx(0.03005768387924257).epsilon(1e-11));
    // eps-independent real part, odd imaginary part
    for (double p : {0.1, 0.37, 0.62, 0.9}) {
        Complex a = C1(p, 0.4);
        Complex b = C1(p, -0.4);
        CHECK(a.real() == b.real());
        CHECK(a.imag() == -b.imag());
        CHECK(C1(p, 0.0).imag() == 0.0);
    }
    // at the symmetry point the eps term dies entirely
    CHECK(std::abs(C1(0.5, 0.7)) == Catch::Approx(0.0).margin(1e-12));
    CHECK(C2_at_eps0(0.6) == Catch::Approx(0.005182940209226607).epsilon(1e-9));
    CHECK(C2_at_eps0(0.2) == Catch::Approx(0.004023000789742852).epsilon(1e-9));
}

TEST_CASE("assembled C_k equals the closed forms") {
    // k = 0: psi itself, eps-independent
    for (double e : {-0.5, 0.0, 0.8}) {
        CHECK(assemble_Ck(0, 0.3, e).real() == Catch::Approx(psi(0.3)).epsilon(1e-15));
        CHECK(assemble_Ck(0, 0.3, e).imag() == 0.0);
    }
    // k = 1 across a (p, eps) grid
    for (int ip = 0; ip <= 19; ++ip) {
        double p = 0.025 + ip * 0.05;
        for (double e : {-0.5, -0.2, 0.0, 0.3, 0.5}) {
            Complex a = assemble_Ck(1, p, e);
            Complex b = C1(p, e);
            CHECK(std::abs(a - b) <= 1e-10);
        }
    }
    // k = 2 at eps = 0 across p
    for (int ip = 0; ip <= 19; ++ip) {
        double p = 0.025 + ip * 0.05;
        Complex a = assemble_Ck(2, p, 0.0);
        CHECK(std::abs(a - Complex{C2_at_eps0(p), 0.0}) <= 1e-10);
    }
    CHECK_THROWS_AS(assemble_Ck(3, 0.3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(assemble_Ck(2, 0.3, 0.1), std::invalid_argument);
}

TEST_CASE("remainder values and parity") {
    // t = 7000: N = 33, sign +1, R_0 = (2pi/t)^{1/4} psi(p)
    Complex r0 = remainder_R(7000.0, 0.0, 0);
    CHECK(r0.real() == Catch::Approx(0.07083212001301195).epsilon(1e-12));
    CHECK(r0.imag() == 0.0);
    // R_0 ignores eps entirely
    CHECK(remainder_R(7000.0, -0.5, 0) == remainder_R(7000.0, 0.5, 0));
    CHECK(remainder_R(7000.0, 0.25, 0) == r0);
    // sign flips with the parity of N: t = 2pi * 4.5^2-ish has N = 4
    Complex r4 = remainder_R(kTwoPiD * 4.41 * 4.41, 0.0, 0);
    CHECK(r4.real() < 0.0);
    // M = 1: conjugate symmetry in eps
    for (double t : {300.0, 7000.0})
        for (double e : {0.1, 0.45}) {
            Complex a = remainder_R(t, e, 1);
            Complex b = remainder_R(t, -e, 1);
            CHECK(a.real() == b.real());
            CHECK(a.imag() == -b.imag());
        }
    // M = 1 at eps -> 0 is real
    CHECK(remainder_R(5000.0, 0.0, 1).imag() == 0.0);
    // magnitude ordering of the asymptotic terms for t >= 20
    for (double t : {20.0, 50.0, 1000.0}) {
        auto g = grid_quantities(t);
        for (int ip = 0; ip <= 20; ++ip) {
            double p = ip / 20.0;
            for (double e : {-1.0, 0.0, 1.0})
                CHECK(std::abs(C1(p, e)) * g.omega <= psi(p));
        }
    }
    CHECK_THROWS_AS(remainder_R(7000.0, 0.1, 2), std::invalid_argument);
    CHECK_THROWS_AS(remainder_R(7000.0, 0.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(remainder_R(-7000.0, 0.0, 0), std::domain_error);
}

TEST_CASE("M=2 remainder carries the leading phase") {
    Complex r2 = remainder_R(7000.0, 0.0, 2);
    double expect_phase = err_series_im(7000.0, 0.0, -1);
    CHECK(std::arg(r2) == Catch::Approx(expect_phase).margin(1e-9));
    // magnitude close to the M=1 value: the omega^2 term is tiny at t = 7000
    CHECK(std::abs(r2) == Catch::Approx(std::abs(remainder_R(7000.0, 0.0, 1))).epsilon(1e-4));
}
