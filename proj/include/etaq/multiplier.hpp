#pragma once

#include <complex>
#include <cstdint>

namespace etaq {

struct UnimodularMatrix {
    int64_t a, b, c, d;
    UnimodularMatrix(int64_t a_, int64_t b_, int64_t c_, int64_t d_);
    UnimodularMatrix operator-() const { return UnimodularMatrix(-a, -b, -c, -d); }
};

/// Value of the eta multiplier as a 24th root of unity, e(exponent/24).
struct MultiplierValue {
    int exponent; // in [0, 24)
};

MultiplierValue eta_multiplier(const UnimodularMatrix& g);

struct AutomorphyResult {
    long double residual;         // |eta(gz) - nu(g) (cz+d)^(1/2) eta(z)|
    long double truncation_bound; // bound on the series tail that was dropped
    int terms_used;
};

/// Evaluate both sides of the transformation law at z (principal square
/// root) with at most `max_terms` theta-series terms per evaluation.
/// Throws ConvergenceTooSlow if the tail bound cannot be pushed below 1e-10.
AutomorphyResult verify_automorphy(const UnimodularMatrix& g, std::complex<long double> z, int max_terms);

} // namespace etaq
