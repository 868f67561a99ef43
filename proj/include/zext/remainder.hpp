// Remainder coefficients for the truncated main sums: the P products, the
// matching-factor polynomial recursion in omega = sqrt(2pi/t), the
// psi-derivative combinations c_n, their assembly into C_k(p, epsilon), and
// the truncated remainder R_M(t, epsilon).
//
// C_k values carry omega^k divided out; remainder_R owns the omega powers.
#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include "zext/core.hpp"
#include "zext/psi.hpp"

namespace zext {

// prod_{n=n1}^{n2} (n - 1/2 - epsilon)
inline double p_eps_product(int n1, int n2, double epsilon) {
    if (n1 > n2) throw std::invalid_argument("p_eps_product: need n1 <= n2");
    double prod = 1.0;
    for (int n = n1; n <= n2; ++n) prod *= (n - 0.5 - epsilon);
    return prod;
}

// b_n as a polynomial in omega; coeffs maps the omega power k to B_{n,k}.
struct BPolynomial {
    int n = 0;
    std::map<int, Complex> coeffs;
};

// b_0 = 1, b_{-1} = b_{-2} = 0, then
//   b_{n+1} = omega * (2 pi i (n + 1/2 - epsilon) b_n - b_{n-2}) / (4 pi^2 (n+1)),
// expanded symbolically in omega. Powers of b_n run from n down to
// n - 2*floor(n/3) in steps of 2.
inline std::vector<BPolynomial> b_polynomials(double epsilon, int n_max) {
    if (n_max < 0 || n_max > 9)
        throw std::invalid_argument("b_polynomials: n_max must be in [0,9]");
    std::vector<BPolynomial> bs(static_cast<std::size_t>(n_max) + 1);
    bs[0].n = 0;
    bs[0].coeffs[0] = Complex{1.0, 0.0};
    for (int n = 0; n < n_max; ++n) {
        BPolynomial& next = bs[static_cast<std::size_t>(n + 1)];
        next.n = n + 1;
        const double denom = 4.0 * kPiD * kPiD * (n + 1.0);
        const Complex lead = Complex{0.0, kTwoPiD} * (n + 0.5 - epsilon);
        for (const auto& [k, c] : bs[static_cast<std::size_t>(n)].coeffs)
            next.coeffs[k + 1] += lead * c / denom;
        if (n >= 2)
            for (const auto& [k, c] : bs[static_cast<std::size_t>(n - 2)].coeffs)
                next.coeffs[k + 1] -= c / denom;
    }
    return bs;
}

// c_n = (n!/2^n) sum_{j=0}^{floor(n/2)} (2 pi i)^j / j! * psi^(n-2j)(p)/(n-2j)!
inline Complex c_coefficient(int n, double p) {
    if (n < 0 || n > 6) throw std::invalid_argument("c_coefficient: n must be in [0,6]");
    PsiJet jet = psi_jet(p, n);
    Complex sum{0.0, 0.0};
    Complex ipow{1.0, 0.0};  // (2 pi i)^j / j!
    double fact = 1.0;
    for (int j = 0; 2 * j <= n; ++j) {
        int d = n - 2 * j;
        double dfact = 1.0;
        for (int i = 2; i <= d; ++i) dfact *= i;
        sum += ipow * (jet.values[static_cast<std::size_t>(d)] / dfact);
        ipow *= Complex{0.0, kTwoPiD} / (j + 1.0);
    }
    for (int i = 2; i <= n; ++i) fact *= i;
    return fact / std::pow(2.0, n) * sum;
}

// C_1(p, eps) = -eps psi'(p) i/(4 pi) - psi'''(p)/(96 pi^2). The epsilon
// dependence is purely imaginary and odd, so C_1(p,-eps) = conj(C_1(p,eps)).
inline Complex C1(double p, double epsilon) {
    PsiJet jet = psi_jet(p, 3);
    return {-jet.values[3] / (96.0 * kPiD * kPiD),
            -epsilon * jet.values[1] / (4.0 * kPiD)};
}

// C_2 on the critical line: psi''(p)/(2^6 pi^2) + 5 psi^(6)(p)/(2^7 pi^4 6!).
inline double C2_at_eps0(double p) {
    PsiJet jet = psi_jet(p, 6);
    return jet.values[2] / (64.0 * kPiD * kPiD) +
           5.0 * jet.values[6] / (128.0 * kPiD * kPiD * kPiD * kPiD * 720.0);
}

struct RemainderCoeffs {
    double p = 0.0;
    double epsilon = 0.0;
    double C0 = 0.0;
    Complex C1{0.0, 0.0};
    bool has_C2 = false;
    Complex C2{0.0, 0.0};
};

// C_k assembled from the recursion route: C_k = sum over i in {3k, 3k-2, ...,
// >= k} of c_i B_{i,k}. For k = 2 the omega^0 term also shifts into omega^2
// through the leading phase factor exp(i Im-error), whose omega^2 coefficient
// is -i (1 + 108 eps - 12 eps^2)/(96 pi); that term is included here. This is
// the cross-check path against the closed forms C1/C2_at_eps0.
inline Complex assemble_Ck(int k, double p, double epsilon) {
    if (k < 0 || k > 2)
        throw std::invalid_argument("assemble_Ck: only k in {0,1,2} supported");
    if (k == 2 && epsilon != 0.0)
        throw std::invalid_argument("assemble_Ck: k = 2 is derived only at epsilon = 0");
    if (k == 0) return Complex{psi(p), 0.0};
    auto bs = b_polynomials(epsilon, 3 * k);
    Complex sum{0.0, 0.0};
    for (int i = k; i <= 3 * k; i += 2) {
        auto it = bs[static_cast<std::size_t>(i)].coeffs.find(k);
        if (it == bs[static_cast<std::size_t>(i)].coeffs.end()) continue;
        sum += c_coefficient(i, p) * it->second;
    }
    if (k == 2) {
        double e = epsilon;
        sum += psi(p) * Complex{0.0, -(1.0 + 108.0 * e - 12.0 * e * e) / (96.0 * kPiD)};
    }
    return sum;
}

// R_M(t, eps) = (-1)^{N-1} (2pi/t)^{1/4} sum_{j<=M} C_j (2pi/t)^{j/2}.
// M = 0 is real and epsilon-independent; M = 2 (critical line only) also
// carries the leading phase factor exp(i Im-error).
inline Complex remainder_R(double t, double epsilon, int M) {
    if (!std::isfinite(t) || t <= 0.0)
        throw std::domain_error("remainder_R: t must be finite and > 0");
    if (M < 0 || M > 2)
        throw std::invalid_argument("remainder_R: M must be in {0,1,2}");
    if (M == 2 && epsilon != 0.0)
        throw std::invalid_argument("remainder_R: M = 2 requires epsilon = 0");
    GridQuantities g = grid_quantities(t);
    double sign = (g.truncation % 2 == 0) ? -1.0 : 1.0;  // (-1)^{N-1}
    double root4 = std::sqrt(g.omega);                   // (2pi/t)^{1/4}
    Complex sum{psi(g.p), 0.0};
    if (M >= 1) sum += C1(g.p, epsilon) * g.omega;
    if (M >= 2) {
        sum += Complex{C2_at_eps0(g.p), 0.0} * (g.omega * g.omega);
        double ph = err_series_im(t, epsilon, -1);
        sum *= Complex{std::cos(ph), std::sin(ph)};
    }
    return sign * root4 * sum;
}

}  // namespace zext
