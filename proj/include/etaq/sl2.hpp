#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace etaq {

/// 2x2 matrix over F_ell (ell a prime >= 5), row-major entries.
struct MatFl {
    uint32_t ell;
    std::array<uint32_t, 4> e; // a b c d

    MatFl(uint32_t ell_, int64_t a, int64_t b, int64_t c, int64_t d);
    static MatFl identity(uint32_t ell) { return MatFl(ell, 1, 0, 0, 1); }

    uint32_t det() const;
    uint32_t trace() const;
    MatFl operator*(const MatFl& o) const;
    MatFl operator-() const;
    MatFl inverse() const;
    bool operator==(const MatFl& o) const { return ell == o.ell && e == o.e; }
    bool is_scalar() const { return e[1] == 0 && e[2] == 0 && e[0] == e[3]; }
    /// Packed key for hashing / ordering (entries < ell <= 2^8 here).
    uint64_t key() const;
};

/// Characteristic polynomial x^2 - tr x + det as the pair (tr, det).
std::pair<uint32_t, uint32_t> char_poly(const MatFl& m);

/// GL_2(F_ell)-conjugacy: scalars compare equal; non-scalar 2x2 matrices are
/// conjugate iff their characteristic polynomials agree (companion form).
bool is_conjugate(const MatFl& a, const MatFl& b);

/// All of SL_2(F_ell), deterministic order.  Feasible for small ell.
std::vector<MatFl> enumerate_sl2(uint32_t ell);
/// All of GL_2(F_ell).
std::vector<MatFl> enumerate_gl2(uint32_t ell);

/// Subgroup closure of `gens` inside GL_2(F_ell) (BFS, deterministic order).
std::vector<MatFl> closure(const std::vector<MatFl>& gens);

/// Do the s-tuples in `gens` generate all of SL_2(F_ell)^s?
/// Feasibility gate: ell <= 7 and s <= 3.
bool product_surjectivity(const std::vector<std::vector<MatFl>>& gens, uint32_t ell);

/// Finite-group stand-in for a tuple of residual representations: each
/// component is a subgroup H_i of GL_2(F_ell) given by generators and
/// required to contain SL_2(F_ell); all components share one determinant
/// value per tuple, constrained to the listed coset.
struct RepTuple {
    uint32_t ell;
    std::vector<std::vector<MatFl>> component_gens;
    std::vector<uint32_t> det_coset; // allowed common determinants

    /// Verifies the invariants (SL_2 containment, coset nonempty).
    static RepTuple make(uint32_t ell, std::vector<std::vector<MatFl>> component_gens,
                         std::vector<uint32_t> det_coset);
};

/// Search the realizable tuples (x_1..x_s), x_i in H_i with a common
/// determinant in the coset, for one with every x_i conjugate to gamma or
/// -gamma.  Each witness component's square is verified conjugate to
/// gamma^2 before returning.  Deterministic scan order.
std::optional<std::vector<MatFl>> find_sigma(const RepTuple& reps, const MatFl& gamma);

/// Seeded random-walk variant for ell beyond the exhaustive gate.  Component
/// subgroups are given by generators and are NOT verified; the walk reports
/// the number of steps spent.
struct RandomSigmaResult {
    std::optional<std::vector<MatFl>> witness;
    uint64_t steps = 0;
};
RandomSigmaResult find_sigma_randomized(uint32_t ell, const std::vector<std::vector<MatFl>>& component_gens,
                                        const MatFl& gamma, uint64_t seed, uint64_t max_steps);

} // namespace etaq
