#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "etaq/hecke.hpp"
#include "etaq/series.hpp"

namespace etaq {

/// The six checkable sufficient conditions for suitability of (k, ell),
/// plus the large-ell shortcut.
struct SuitabilityReport {
    uint32_t k = 0;
    uint64_t ell = 0;
    std::array<bool, 6> conditions{};
    bool shortcut_applies = false; // ell > 5k - 4
    bool verdict = false;          // conjunction of the six
};

SuitabilityReport suitability_check(uint32_t k, uint64_t ell, uint64_t N, const DirichletCharacter& psi);

/// Least a >= 0 with 2^a = -2 mod ell, or nullopt when -2 is not a power
/// of 2 mod ell.
std::optional<uint64_t> hasse_exponent(uint64_t ell);

struct HasseDensity {
    uint64_t satisfying = 0;
    uint64_t total = 0;
    double value = 0.0;
};

/// Fraction of primes 5 <= p <= X satisfying the condition above.
HasseDensity hasse_density(uint64_t X);

enum class ScanMode { Thm1, Thm2 };

enum class EigenStatus { Match, NoMatch, Indeterminate };

struct EigenResult {
    EigenStatus status;
    int alpha = 0;        // meaningful iff status == Match
    int64_t checked = 0;  // surviving indices compared
};

/// Test F | T_{p^2} = alpha p^(lambda-1) F mod ell^m for alpha in {+-1}.
/// `expected`, when given, is recorded in the result but does not change
/// the search.  F must live in the residue ring of ctx.
EigenResult eigencongruence_test(const GradedSeries& F, const FormContext& ctx, uint64_t p,
                                 std::optional<int> expected = std::nullopt);

struct VanishingResult {
    int64_t checked = 0;
    std::vector<int64_t> violations; // offending n, empty on success
};

/// Check a(p^2 n) = 0 mod ell^m over all surviving n with (n/p) = epsilon.
VanishingResult vanishing_check(const GradedSeries& F, const FormContext& ctx, uint64_t p, int epsilon);

struct CongruenceReport {
    uint64_t p = 0;
    ScanMode mode = ScanMode::Thm1;
    bool indeterminate = false;
    std::optional<int> alpha;    // empirically fitted sign, if any
    int alpha_predicted = 0;     // sign demanded by the scan mode
    int predicted_epsilon = 0;   // quadratic class of the vanishing indices
    bool eigen_ok = false;       // alpha found and equal to alpha_predicted
    bool vanishing_ok = false;   // meaningful only when eigen_ok
    int64_t n_checked = 0;
    int64_t precision_used = 0;
};

/// Scan primes p <= p_max with p = 1 (Thm1) or p = -2 (Thm2) mod ell^m,
/// skipping p | 6N; run the eigencongruence test with the mode's predicted
/// sign and, for passing p, the vanishing check in the predicted class.
/// Requires F.prec() >= 24 * 25 * p_max^2 so at least 25 indices survive.
/// Indeterminate primes (F = 0 mod ell^m on the horizon) are excluded.
std::vector<CongruenceReport> prime_scan(const GradedSeries& F, const FormContext& ctx, ScanMode mode,
                                         uint64_t p_max);

/// Predicted T_{p^2} eigenvalue sign for the scan mode (relative to
/// p^(lambda-1)); Thm2 needs the Hasse exponent of ell.
int predicted_alpha(const FormContext& ctx, ScanMode mode, uint64_t p);
/// Predicted quadratic class for the vanishing indices.
int predicted_epsilon(const FormContext& ctx, ScanMode mode, uint64_t p);

struct AtkinTriple {
    uint64_t Q = 0;
    uint64_t beta = 0;
    int epsilon = 0;
    uint64_t instances = 0; // confirming n <= n_max
};

/// Brute-force search for Atkin-style congruence candidates
///   p((ell Q^2 n + beta)/24) = 0 mod ell whenever (n/Q) = epsilon,
/// over primes Q <= Q_max (Q != ell), beta in [0, 24 ell), both signs.
/// A triple is reported iff it has at least one instance and no violation.
std::vector<AtkinTriple> atkin_search(uint64_t ell, uint64_t Q_max, uint64_t n_max);

/// Zero-violation check of the classical congruence family
/// p((ell n + 1)/24) = 0 mod ell over valid arguments <= arg_max.
struct RamanujanCheck {
    uint64_t checked = 0;
    std::vector<uint64_t> violations;
};
RamanujanCheck ramanujan_check(uint64_t ell, uint64_t arg_max);

} // namespace etaq
