#pragma once

#include <cstdint>
#include <optional>

#include "etaq/hecke.hpp"
#include "etaq/series.hpp"

namespace etaq {

struct LiftRequest {
    const GradedSeries& F;
    FormContext ctx;
    uint64_t t;        // positive squarefree
    int64_t prec_out;  // coefficients b(1..prec_out)
    /// lambda = 1 only: caller attests the theta-orthogonality hypothesis,
    /// which cannot be decided from a truncated expansion.
    bool s_c_attested = false;
};

/// t-th Shimura lift, coefficientwise:
///   b(n) = sum_{d | n} psi(d) (d/t) d^(lambda-1) (12/(n/d)) a(t (n/d)^2).
/// Needs input precision >= t * prec_out^2.
IntegerSeries shimura_lift(const LiftRequest& req);

struct EquivarianceReport {
    bool equal;
    int64_t first_mismatch = 0; // index n of the first disagreement, if any
    int64_t checked = 0;
};

/// Compare S_t(F | T_{p^2}) with chi^(r)(p) S_t(F) | T_p coefficientwise on
/// n = 1..prec (weight k = 2 lambda, character psi^2 on the integer side).
EquivarianceReport check_equivariance(const GradedSeries& F, const FormContext& ctx, uint64_t t, uint64_t p,
                                      int64_t prec, bool s_c_attested = false);

/// Coefficientwise comparison helper (shared horizon), reporting the first
/// mismatching index.
EquivarianceReport compare_integer_series(const IntegerSeries& a, const IntegerSeries& b);

/// Search squarefree t <= t_max for a lift with some b(n) != 0 mod ell^m,
/// n <= prec.  Returns the witness (t, n), or nullopt if every searched lift
/// vanishes (inconclusive).  F must live in a residue ring.
std::optional<std::pair<uint64_t, int64_t>> nonvanishing_witness(const GradedSeries& F, const FormContext& ctx,
                                                                 uint64_t t_max, int64_t prec,
                                                                 bool s_c_attested = false);

} // namespace etaq
