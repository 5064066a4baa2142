#include "etaq/form_io.hpp"

#include <fstream>

#include "etaq/arith.hpp"
#include "etaq/errors.hpp"

namespace etaq {

using nlohmann::json;

json character_to_json(const DirichletCharacter& psi) {
    json comps = json::array();
    for (auto [q_pow, k] : psi.serialize()) comps.push_back({q_pow, k});
    return {{"modulus", psi.modulus()}, {"components", comps}};
}

DirichletCharacter character_from_json(const json& j) {
    uint64_t N = j.at("modulus").get<uint64_t>();
    std::vector<std::pair<uint64_t, uint64_t>> comps;
    if (j.contains("components"))
        for (auto& c : j.at("components")) comps.emplace_back(c.at(0).get<uint64_t>(), c.at(1).get<uint64_t>());
    return DirichletCharacter::from_components(N, comps);
}

FormDescriptor FormDescriptor::from_json(const json& j) {
    FormDescriptor fd;
    std::vector<std::pair<int64_t, int64_t>> factors;
    for (auto& f : j.at("eta")) factors.emplace_back(f.at(0).get<int64_t>(), f.at(1).get<int64_t>());
    uint64_t level = j.value("level", uint64_t(1));
    fd.eta = EtaQuotient(factors, level);

    int64_t wt2 = fd.eta.weight_times_two(); // = 2 lambda + 1
    if (wt2 < 3 || wt2 % 2 == 0)
        fail(errc::invalid_argument, "eta data has weight " + std::to_string(wt2) + "/2; need lambda >= 1");
    fd.lambda = static_cast<uint32_t>((wt2 - 1) / 2);
    if (j.contains("lambda") && j.at("lambda").get<uint32_t>() != fd.lambda)
        fail(errc::invalid_argument, "lambda does not match the eta weight");

    fd.r = j.value("r", int64_t(imod(fd.eta.lead_exponent(), 24)));
    if (fd.r % 2 == 0 || imod(fd.r - fd.eta.lead_exponent(), 24) != 0)
        fail(errc::invalid_argument, "r must be odd and match the support class of the quotient");

    fd.psi = j.contains("character") ? character_from_json(j.at("character")) : DirichletCharacter::trivial(level);
    fd.ell = j.value("ell", uint64_t(5));
    fd.m = j.value("m", uint32_t(1));
    fd.context(); // runs the full hypothesis validation
    return fd;
}

FormDescriptor FormDescriptor::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::invalid_argument, "cannot open " + path);
    json j;
    in >> j;
    return from_json(j);
}

json FormDescriptor::to_json() const {
    json eta_j = json::array();
    for (auto [d, rd] : eta.factors) eta_j.push_back({d, rd});
    return {{"eta", eta_j},       {"level", eta.level}, {"r", r},
            {"lambda", lambda},   {"character", character_to_json(psi)},
            {"ell", ell},         {"m", m}};
}

GradedSeries FormDescriptor::expand_mod(int64_t prec) const {
    CoeffRing ring = CoeffRing::residue(ell, m, psi.order());
    return eta_quotient_expansion(eta, prec, ring);
}

GradedSeries FormDescriptor::expand_exact(int64_t prec) const {
    CoeffRing ring = CoeffRing::exact(psi.order());
    return eta_quotient_expansion(eta, prec, ring);
}

json series_to_json(const GradedSeries& s, int64_t max_terms) {
    json coeffs = json::array();
    int64_t emitted = 0;
    for (size_t i = 0; i < s.slots() && emitted < max_terms; ++i) {
        int64_t n = s.index_of_slot(i);
        RingElement v = s.at(n);
        if (s.ring().is_zero(v)) continue;
        coeffs.push_back({n, s.ring().to_string(v)});
        ++emitted;
    }
    return {{"residue", s.residue()}, {"lead", s.lead()}, {"prec", s.prec()}, {"coefficients", coeffs}};
}

json series_to_json(const IntegerSeries& s, int64_t max_terms) {
    json coeffs = json::array();
    int64_t emitted = 0;
    for (int64_t n = 1; n <= s.prec() && emitted < max_terms; ++n) {
        RingElement v = s.at(n);
        if (s.ring().is_zero(v)) continue;
        coeffs.push_back({n, s.ring().to_string(v)});
        ++emitted;
    }
    return {{"prec", s.prec()}, {"coefficients", coeffs}};
}

} // namespace etaq
