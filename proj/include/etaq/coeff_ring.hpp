#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace etaq {

/// Element of a CoeffRing.  Coordinates are a polynomial in the ring's root
/// of unity, reduced mod the cyclotomic polynomial (length = ring.degree());
/// residue rings always have a single coordinate.
struct RingElement {
    std::vector<mpz_class> c;

    bool operator==(const RingElement& o) const { return c == o.c; }
};

/// Coefficient ring for q-series.  Two modes:
///  - Exact: Z[zeta_u], elements represented exactly mod the u-th cyclotomic
///    polynomial (u <= 2 collapses to plain integers).
///  - Mod:   Z/ell^m with a fixed element of multiplicative order u embedded;
///    construction fails if no such element exists.
class CoeffRing {
public:
    enum class Mode { Exact, Mod };

    static CoeffRing exact(uint64_t root_order = 1);
    static CoeffRing residue(uint64_t ell, uint32_t m, uint64_t root_order = 1);

    Mode mode() const { return mode_; }
    bool is_exact() const { return mode_ == Mode::Exact; }
    uint64_t ell() const { return ell_; }
    uint32_t prime_exponent() const { return m_; }
    uint64_t modulus() const { return modulus_; } // ell^m (Mod mode)
    uint64_t root_order() const { return u_; }
    uint32_t degree() const { return degree_; }
    uint64_t zeta_residue() const { return zeta_; } // Mod mode

    bool operator==(const CoeffRing& o) const;

    RingElement zero() const;
    RingElement one() const;
    RingElement from_int(long v) const;
    RingElement from_mpz(const mpz_class& v) const;

    RingElement add(const RingElement& a, const RingElement& b) const;
    RingElement sub(const RingElement& a, const RingElement& b) const;
    RingElement mul(const RingElement& a, const RingElement& b) const;
    RingElement neg(const RingElement& a) const;
    RingElement pow(const RingElement& a, uint64_t e) const;
    bool is_zero(const RingElement& a) const;
    bool eq(const RingElement& a, const RingElement& b) const;

    /// Deterministic element of exact multiplicative order u (embed_unity).
    RingElement unity_root(uint64_t u) const;

    /// Map an element of an Exact ring into this Mod ring (zeta |-> zeta).
    RingElement reduce_from_exact(const RingElement& a, const CoeffRing& exact_ring) const;

    /// Mod mode: the canonical residue in [0, ell^m).
    uint64_t residue_value(const RingElement& a) const;

    std::string to_string(const RingElement& a) const;

private:
    CoeffRing() = default;
    void reduce(RingElement& a) const;

    Mode mode_ = Mode::Exact;
    uint64_t ell_ = 0;
    uint32_t m_ = 0;
    uint64_t modulus_ = 0;
    uint64_t u_ = 1;
    uint32_t degree_ = 1;
    uint64_t zeta_ = 1;
    std::vector<mpz_class> cyclo_; // monic Phi_u, degree_ + 1 coefficients (Exact, u >= 3)
};

/// Coefficients of the n-th cyclotomic polynomial, ascending degree, monic.
std::vector<mpz_class> cyclotomic_polynomial(uint64_t n);

} // namespace etaq
