#pragma once

#include <string>

#include <json.hpp>

#include "etaq/hecke.hpp"
#include "etaq/series.hpp"

namespace etaq {

/// On-disk description of a half-integral weight form plus congruence data:
/// {
///   "eta": [[d, r_d], ...], "level": N, "r": r, "lambda": lambda,
///   "character": {"modulus": N, "components": [[q_pow, exponent], ...]},
///   "ell": ell, "m": m
/// }
/// lambda and r are cross-checked against the eta data when present.
struct FormDescriptor {
    EtaQuotient eta = EtaQuotient::eta_power(1);
    int64_t r = 1;
    uint32_t lambda = 0;
    DirichletCharacter psi = DirichletCharacter::trivial(1);
    uint64_t ell = 5;
    uint32_t m = 1;

    FormContext context() const { return FormContext(lambda, r, eta.level, psi, ell, m); }

    static FormDescriptor from_json(const nlohmann::json& j);
    static FormDescriptor load(const std::string& path);
    nlohmann::json to_json() const;

    /// Expand the quotient in the context's residue ring (root order = order
    /// of psi) to the requested precision.
    GradedSeries expand_mod(int64_t prec) const;
    /// Expand exactly.
    GradedSeries expand_exact(int64_t prec) const;
};

nlohmann::json character_to_json(const DirichletCharacter& psi);
DirichletCharacter character_from_json(const nlohmann::json& j);

nlohmann::json series_to_json(const GradedSeries& s, int64_t max_terms = 64);
nlohmann::json series_to_json(const IntegerSeries& s, int64_t max_terms = 64);

} // namespace etaq
