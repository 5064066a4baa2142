#pragma once

#include <cstdint>

#include "etaq/characters.hpp"
#include "etaq/series.hpp"

namespace etaq {

/// Shared context for a half-integral weight form: weight lambda + 1/2,
/// multiplier psi nu_eta^r on Gamma_0(N), congruence data mod ell^m.
struct FormContext {
    uint32_t lambda;
    int64_t r; // odd
    uint64_t N;
    DirichletCharacter psi;
    uint64_t ell;
    uint32_t m;

    FormContext(uint32_t lambda_, int64_t r_, uint64_t N_, DirichletCharacter psi_, uint64_t ell_, uint32_t m_);
    uint32_t k() const { return 2 * lambda; } // weight of the lifted forms
};

/// Root of unity as (order, exponent); normalized so gcd(exponent, order)
/// leaves order minimal.
struct RootOfUnity {
    uint64_t order = 1;
    uint64_t exponent = 0;

    static RootOfUnity one() { return {1, 0}; }
    static RootOfUnity minus_one() { return {2, 1}; }
    static RootOfUnity make(uint64_t order, uint64_t exponent);
    RootOfUnity times(const RootOfUnity& o) const;
    bool is_real() const { return order <= 2; }
    /// +1 or -1; throws for complex values.
    int sign() const;
};

/// T_p = U_p + psi(p) p^(k-1) V_p on integer-weight expansions.
IntegerSeries t_p_integer(const IntegerSeries& f, uint64_t p, uint32_t k, const DirichletCharacter& psi);

/// Half-integral weight T_{p^2} for p >= 5, p coprime to 6 N ell.
GradedSeries t_p2_half(const GradedSeries& F, uint64_t p, const FormContext& ctx);

/// Atkin-Lehner eigenvalue -p^(1-k/2) a(p) of a normalized integer-weight
/// eigenform, extracted in exact rational arithmetic.  p in {2, 3}.
int atkin_lehner_sign(const IntegerSeries& f, uint64_t p, uint32_t k);

/// epsilon_{2,r,psi} = -psi(2) (8 / (r/(r,3))) and
/// epsilon_{3,r,psi} = -psi(3) (12 / r), as roots of unity.
RootOfUnity epsilon_2(int64_t r, const DirichletCharacter& psi);
RootOfUnity epsilon_3(int64_t r, const DirichletCharacter& psi);
/// Sign-typed wrappers; throw when psi(2) / psi(3) is not real.
int epsilon_2_sign(int64_t r, const DirichletCharacter& psi);
int epsilon_3_sign(int64_t r, const DirichletCharacter& psi);

/// chi^(r) = (-4/.) when 3 | r, (12/.) when 3 does not divide r.
int chi_r(int64_t r, int64_t p);

} // namespace etaq
