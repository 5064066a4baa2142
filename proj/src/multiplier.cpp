#include "etaq/multiplier.hpp"

#include <cmath>

#include "etaq/arith.hpp"
#include "etaq/errors.hpp"

namespace etaq {

UnimodularMatrix::UnimodularMatrix(int64_t a_, int64_t b_, int64_t c_, int64_t d_) : a(a_), b(b_), c(c_), d(d_) {
    if (a * d - b * c != 1) fail(errc::invalid_argument, "matrix must have determinant 1");
}

MultiplierValue eta_multiplier(const UnimodularMatrix& g) {
    if (g.c == 0) {
        if (g.d == 1) return {static_cast<int>(imod(g.b, 24))};
        // d = -1: here cz+d = -1 sits on the branch cut, where the principal
        // square root gives nu(-T^b) = nu(T^b)/i rather than i*nu(T^b)
        return {static_cast<int>(imod(eta_multiplier(-g).exponent - 6, 24))};
    }
    if (g.c < 0) return {static_cast<int>(imod(eta_multiplier(-g).exponent + 6, 24))};
    // c > 0: closed form, with the Kronecker sign folded in as exponent 0 or 12
    int64_t a = imod(g.a, 24), b = imod(g.b, 24), c = imod(g.c, 24), d = imod(g.d, 24);
    int64_t e;
    int sign;
    if (g.c % 2 != 0) {
        sign = kronecker(g.d, g.c);
        e = (a + d) * c - b * d * (c * c - 1) - 3 * c;
    } else {
        sign = kronecker(g.c, g.d);
        e = (a + d) * c - b * d * (c * c - 1) + 3 * d - 3 - 3 * c * d;
    }
    if (sign == -1) e += 12;
    return {static_cast<int>(imod(e, 24))};
}

namespace {

// eta(z) = sum_{j>=1, (j,6)=1} (12/j) e(j^2 z / 24)
std::complex<long double> eta_theta_sum(std::complex<long double> z, int max_terms, long double& tail_bound,
                                        int& used) {
    const long double two_pi = 6.28318530717958647692528676655900577L;
    long double y = z.imag();
    if (y <= 0) fail(errc::invalid_argument, "eta evaluation needs Im z > 0");
    long double x = std::exp(-two_pi * y / 24.0L); // |q|^(1/24)
    std::complex<long double> s = 0;
    int64_t used_terms = 0;
    int64_t j = 1;
    for (; used_terms < max_terms; ++j) {
        if (j % 2 == 0 || j % 3 == 0) continue;
        int k = kronecker(12, j);
        std::complex<long double> ph = std::exp(std::complex<long double>(0, 1) * (two_pi * (long double)(j * j) / 24.0L) * z);
        s += (long double)k * ph;
        ++used_terms;
        // geometric tail bound from the next exponent onward
        long double head = std::pow(x, (long double)((j + 1) * (j + 1)));
        long double ratio = std::pow(x, (long double)(2 * j + 3));
        if (ratio < 1.0L) {
            long double bound = head / (1.0L - ratio);
            if (bound < 1e-14L) {
                tail_bound = bound;
                used = static_cast<int>(used_terms);
                return s;
            }
        }
    }
    long double head = std::pow(x, (long double)(j * j));
    long double ratio = std::pow(x, (long double)(2 * j + 1));
    tail_bound = ratio < 1.0L ? head / (1.0L - ratio) : 1.0L;
    used = static_cast<int>(used_terms);
    return s;
}

} // namespace

AutomorphyResult verify_automorphy(const UnimodularMatrix& g, std::complex<long double> z, int max_terms) {
    if (z.imag() <= 0) fail(errc::invalid_argument, "z must lie in the upper half-plane");
    std::complex<long double> czd = (long double)g.c * z + (long double)g.d;
    std::complex<long double> gz = ((long double)g.a * z + (long double)g.b) / czd;

    long double tail1 = 0, tail2 = 0;
    int used1 = 0, used2 = 0;
    std::complex<long double> lhs = eta_theta_sum(gz, max_terms, tail1, used1);
    std::complex<long double> rhs_eta = eta_theta_sum(z, max_terms, tail2, used2);
    long double bound = tail1 + tail2;
    if (bound > 1e-10L)
        fail(errc::convergence_too_slow,
             "truncation bound " + std::to_string((double)bound) + " exceeds 1e-10; increase terms");

    int e = eta_multiplier(g).exponent;
    const long double two_pi = 6.28318530717958647692528676655900577L;
    std::complex<long double> nu = std::exp(std::complex<long double>(0, 1) * (two_pi * (long double)e / 24.0L));
    std::complex<long double> rhs = nu * std::sqrt(czd) * rhs_eta; // principal branch
    AutomorphyResult r;
    r.residual = std::abs(lhs - rhs);
    r.truncation_bound = bound;
    r.terms_used = std::max(used1, used2);
    return r;
}

} // namespace etaq
