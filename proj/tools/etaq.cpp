// etaq: exact q-series toolkit for eta-quotient congruences.
//
// Subcommands cover series expansion, the eta multiplier, Hecke operators,
// Shimura lifts, suitability / Hasse diagnostics, congruence scans, and a
// finite-group simulation of the conjugacy argument.  All numeric output is
// exact (integers or residues); the only floats are multiplier residuals.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification failure.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "etaq/acceptance.hpp"
#include "etaq/arith.hpp"
#include "etaq/criteria.hpp"
#include "etaq/errors.hpp"
#include "etaq/form_io.hpp"
#include "etaq/multiplier.hpp"
#include "etaq/shimura.hpp"
#include "etaq/sl2.hpp"

using nlohmann::json;
using namespace etaq;

namespace {

void emit(const json& j, bool summary, const std::string& text) {
    if (summary)
        std::cout << text << "\n";
    else
        std::cout << j.dump() << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact q-series toolkit for eta-quotient congruences"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    int threads = 0;
    uint64_t seed = 1;
    bool summary = false;
    app.add_option("--threads", threads, "worker threads (0 = all cores)");
    app.add_option("--seed", seed, "seed for randomized searches");
    app.add_flag("--summary", summary, "human-readable output instead of JSON");

    // eta-expand
    auto* exp_cmd = app.add_subcommand("eta-expand", "expand an eta quotient");
    std::string exp_form;
    int64_t exp_prec = 240;
    bool exp_exact = false, exp_poles = false;
    int64_t exp_terms = 64;
    exp_cmd->add_option("--form", exp_form, "form descriptor JSON file")->required();
    exp_cmd->add_option("--prec", exp_prec, "24-scaled precision");
    exp_cmd->add_flag("--exact", exp_exact, "exact integer coefficients (default: mod ell^m)");
    exp_cmd->add_flag("--allow-poles", exp_poles, "permit a pole at infinity (negative leading exponent)");
    exp_cmd->add_option("--max-terms", exp_terms, "cap on emitted nonzero coefficients");

    // eta-multiplier
    auto* mult_cmd = app.add_subcommand("eta-multiplier", "eta multiplier of an SL_2(Z) matrix");
    std::vector<int64_t> mat;
    bool mult_verify = false;
    int mult_terms = 4000;
    mult_cmd->add_option("--matrix", mat, "a,b,c,d with ad - bc = 1")->required()->delimiter(',')->expected(4);
    mult_cmd->add_flag("--verify", mult_verify, "evaluate the transformation law numerically");
    mult_cmd->add_option("--terms", mult_terms, "series terms for verification");

    // hecke-apply
    auto* hk_cmd = app.add_subcommand("hecke-apply", "apply a Hecke / U / V operator to a form");
    std::string hk_form, hk_op = "Tp2";
    uint64_t hk_p = 7, hk_ell = 0;
    uint32_t hk_m = 0;
    int64_t hk_prec = 0, hk_terms = 64;
    hk_cmd->add_option("--form", hk_form)->required();
    hk_cmd->add_option("--op", hk_op, "Tp2 | U | V");
    hk_cmd->add_option("--p", hk_p, "prime (Tp2) or index (U/V)");
    hk_cmd->add_option("--ell", hk_ell, "override ell");
    hk_cmd->add_option("--m", hk_m, "override m");
    hk_cmd->add_option("--prec", hk_prec, "input precision (default: derived)");
    hk_cmd->add_option("--max-terms", hk_terms);

    // shimura-lift
    auto* sh_cmd = app.add_subcommand("shimura-lift", "coefficientwise Shimura lift");
    std::string sh_form;
    uint64_t sh_t = 1, sh_ell = 0;
    uint32_t sh_m = 0;
    int64_t sh_prec = 20;
    bool sh_exact = false, sh_attest = false;
    sh_cmd->add_option("--form", sh_form)->required();
    sh_cmd->add_option("--t", sh_t, "squarefree lift index")->required();
    sh_cmd->add_option("--prec", sh_prec, "output coefficients b(1..prec)");
    sh_cmd->add_option("--ell", sh_ell);
    sh_cmd->add_option("--m", sh_m);
    sh_cmd->add_flag("--exact", sh_exact);
    sh_cmd->add_flag("--attest-sc", sh_attest, "attest the lambda = 1 theta-orthogonality hypothesis");

    // suitability
    auto* su_cmd = app.add_subcommand("suitability", "sufficient conditions for (k, ell)");
    uint32_t su_k = 4;
    uint64_t su_ell = 17, su_N = 1;
    std::string su_char;
    su_cmd->add_option("--k", su_k)->required();
    su_cmd->add_option("--ell", su_ell)->required();
    su_cmd->add_option("--N", su_N);
    su_cmd->add_option("--character", su_char, "character JSON file (default: trivial mod N)");

    // hasse
    auto* ha_cmd = app.add_subcommand("hasse", "least a with 2^a = -2 mod ell");
    uint64_t ha_ell = 5;
    ha_cmd->add_option("--ell", ha_ell)->required();

    // hasse-density
    auto* hd_cmd = app.add_subcommand("hasse-density", "density of primes with 2^a = -2 solvable");
    uint64_t hd_x = 1000000;
    hd_cmd->add_option("--x", hd_x)->required();

    // scan-congruences
    auto* sc_cmd = app.add_subcommand("scan-congruences", "eigen-congruence and vanishing scan");
    std::string sc_form, sc_mode = "thm2", sc_out;
    uint64_t sc_pmax = 500, sc_ell = 0;
    uint32_t sc_m = 0;
    sc_cmd->add_option("--form", sc_form)->required();
    sc_cmd->add_option("--mode", sc_mode, "thm1 | thm2");
    sc_cmd->add_option("--pmax", sc_pmax);
    sc_cmd->add_option("--ell", sc_ell);
    sc_cmd->add_option("--m", sc_m);
    sc_cmd->add_option("--json", sc_out, "write JSON Lines to this file");

    // partition-check
    auto* pc_cmd = app.add_subcommand("partition-check", "verify the classical congruence family");
    uint64_t pc_ell = 5, pc_nmax = 10000;
    pc_cmd->add_option("--ell", pc_ell)->required();
    pc_cmd->add_option("--nmax", pc_nmax, "maximum partition argument");

    // atkin-search
    auto* at_cmd = app.add_subcommand("atkin-search", "brute-force Atkin-style congruence candidates");
    uint64_t at_ell = 13, at_qmax = 50, at_nmax = 100000;
    at_cmd->add_option("--ell", at_ell)->required();
    at_cmd->add_option("--qmax", at_qmax);
    at_cmd->add_option("--nmax", at_nmax);

    // sl2-sim
    auto* sl_cmd = app.add_subcommand("sl2-sim", "conjugacy-class witness simulation");
    uint64_t sl_ell = 5;
    uint32_t sl_s = 2;
    std::vector<int64_t> sl_gamma;
    bool sl_exhaustive = false;
    uint64_t sl_steps = 100000;
    sl_cmd->add_option("--ell", sl_ell)->required();
    sl_cmd->add_option("--s", sl_s, "number of representation components");
    sl_cmd->add_option("--gamma", sl_gamma, "a,b,c,d in SL_2(F_ell)")->required()->delimiter(',')->expected(4);
    sl_cmd->add_flag("--exhaustive", sl_exhaustive, "exhaustive search (ell <= 7)");
    sl_cmd->add_option("--max-steps", sl_steps, "step budget for the randomized search");

    // selftest
    auto* st_cmd = app.add_subcommand("selftest", "run the full acceptance suite");
    int st_only = 0;
    st_cmd->add_option("--only", st_only, "run a single criterion (1-10)");

    CLI11_PARSE(app, argc, argv);
    kernels::set_thread_count(threads);

    if (exp_cmd->parsed()) {
        FormDescriptor fd = FormDescriptor::load(exp_form);
        GradedSeries s = exp_exact ? eta_quotient_expansion(fd.eta, exp_prec, CoeffRing::exact(fd.psi.order()), exp_poles)
                                   : eta_quotient_expansion(fd.eta, exp_prec,
                                                            CoeffRing::residue(fd.ell, fd.m, fd.psi.order()), exp_poles);
        json j = series_to_json(s, exp_terms);
        emit(j, summary, "residue " + std::to_string(s.residue()) + " mod 24, lead " + std::to_string(s.lead()) +
                             ", prec " + std::to_string(s.prec()) + ", " +
                             std::to_string(j["coefficients"].size()) + " terms shown");
        return 0;
    }
    if (mult_cmd->parsed()) {
        UnimodularMatrix g(mat[0], mat[1], mat[2], mat[3]);
        MultiplierValue v = eta_multiplier(g);
        json j{{"exponent", v.exponent}};
        std::string text = "nu_eta = e(" + std::to_string(v.exponent) + "/24)";
        if (mult_verify) {
            auto r = verify_automorphy(g, std::complex<long double>(0.1L, 1.3L), mult_terms);
            j["residual"] = static_cast<double>(r.residual);
            j["truncation_bound"] = static_cast<double>(r.truncation_bound);
            text += ", residual " + std::to_string(static_cast<double>(r.residual));
        }
        emit(j, summary, text);
        return 0;
    }
    if (hk_cmd->parsed()) {
        FormDescriptor fd = FormDescriptor::load(hk_form);
        if (hk_ell) fd.ell = hk_ell;
        if (hk_m) fd.m = hk_m;
        FormContext ctx = fd.context();
        if (hk_op == "Tp2") {
            int64_t prec = hk_prec ? hk_prec : 24 * 30 * static_cast<int64_t>(hk_p) * static_cast<int64_t>(hk_p);
            GradedSeries F = fd.expand_mod(prec);
            GradedSeries out = t_p2_half(F, hk_p, ctx);
            emit(series_to_json(out, hk_terms), summary, "T_{p^2} applied, prec " + std::to_string(out.prec()));
        } else if (hk_op == "U" || hk_op == "V") {
            int64_t prec = hk_prec ? hk_prec : 24 * 100;
            GradedSeries F = fd.expand_mod(prec);
            GradedSeries out = hk_op == "U" ? apply_U(F, static_cast<int64_t>(hk_p)) : apply_V(F, static_cast<int64_t>(hk_p));
            emit(series_to_json(out, hk_terms), summary, hk_op + " applied, prec " + std::to_string(out.prec()));
        } else {
            fail(errc::invalid_argument, "unknown --op " + hk_op);
        }
        return 0;
    }
    if (sh_cmd->parsed()) {
        FormDescriptor fd = FormDescriptor::load(sh_form);
        if (sh_ell) fd.ell = sh_ell;
        if (sh_m) fd.m = sh_m;
        FormContext ctx = fd.context();
        int64_t in_prec = static_cast<int64_t>(sh_t) * sh_prec * sh_prec;
        GradedSeries F = sh_exact ? fd.expand_exact(in_prec) : fd.expand_mod(in_prec);
        IntegerSeries lift = shimura_lift({F, ctx, sh_t, sh_prec, sh_attest});
        emit(series_to_json(lift, 2 * sh_prec), summary, "lift computed to n <= " + std::to_string(sh_prec));
        return 0;
    }
    if (su_cmd->parsed()) {
        DirichletCharacter psi = DirichletCharacter::trivial(su_N);
        if (!su_char.empty()) {
            std::ifstream in(su_char);
            json cj;
            in >> cj;
            psi = character_from_json(cj);
        }
        auto rep = suitability_check(su_k, su_ell, su_N, psi);
        json j{{"k", rep.k},
               {"ell", rep.ell},
               {"conditions", rep.conditions},
               {"shortcut_applies", rep.shortcut_applies},
               {"verdict", rep.verdict}};
        std::string text = "(" + std::to_string(su_k) + ", " + std::to_string(su_ell) + ") suitable sufficient: " +
                           (rep.verdict ? "yes" : "no");
        if (!rep.verdict) {
            text += " (failing:";
            for (int i = 0; i < 6; ++i)
                if (!rep.conditions[i]) text += " " + std::to_string(i + 1);
            text += ")";
        }
        emit(j, summary, text);
        return 0;
    }
    if (ha_cmd->parsed()) {
        auto a = hasse_exponent(ha_ell);
        json j{{"ell", ha_ell}, {"exponent", a ? json(*a) : json(nullptr)}};
        emit(j, summary, a ? "2^" + std::to_string(*a) + " = -2 (mod " + std::to_string(ha_ell) + ")"
                           : "-2 is not a power of 2 mod " + std::to_string(ha_ell));
        return 0;
    }
    if (hd_cmd->parsed()) {
        auto d = hasse_density(hd_x);
        json j{{"x", hd_x}, {"satisfying", d.satisfying}, {"total", d.total}, {"density", d.value}};
        emit(j, summary, std::to_string(d.satisfying) + "/" + std::to_string(d.total) + " = " +
                             std::to_string(d.value) + " (17/24 = " + std::to_string(17.0 / 24.0) + ")");
        return 0;
    }
    if (sc_cmd->parsed()) {
        FormDescriptor fd = FormDescriptor::load(sc_form);
        if (sc_ell) fd.ell = sc_ell;
        if (sc_m) fd.m = sc_m;
        FormContext ctx = fd.context();
        ScanMode mode = sc_mode == "thm1" ? ScanMode::Thm1 : ScanMode::Thm2;
        if (sc_mode != "thm1" && sc_mode != "thm2") fail(errc::invalid_argument, "--mode must be thm1 or thm2");
        int64_t prec = 24ll * 25 * static_cast<int64_t>(sc_pmax) * static_cast<int64_t>(sc_pmax);
        GradedSeries F = fd.expand_mod(prec);
        auto reports = prime_scan(F, ctx, mode, sc_pmax);
        std::ostream* os = &std::cout;
        std::ofstream file;
        if (!sc_out.empty()) {
            file.open(sc_out);
            if (!file) fail(errc::invalid_argument, "cannot open " + sc_out);
            os = &file;
        }
        bool sound = true;
        uint64_t passing = 0;
        for (auto& r : reports) {
            json j{{"p", r.p},
                   {"mode", r.mode == ScanMode::Thm1 ? "thm1" : "thm2"},
                   {"alpha", r.alpha ? json(*r.alpha) : json(nullptr)},
                   {"alpha_predicted", r.alpha_predicted},
                   {"predicted_epsilon", r.predicted_epsilon},
                   {"eigen_ok", r.eigen_ok},
                   {"vanishing_ok", r.vanishing_ok},
                   {"n_checked", r.n_checked},
                   {"precision_used", r.precision_used}};
            if (summary && sc_out.empty()) {
                std::cout << "p=" << r.p << " alpha=" << (r.alpha ? std::to_string(*r.alpha) : "none")
                          << " eigen_ok=" << r.eigen_ok << " vanishing_ok=" << r.vanishing_ok
                          << " n_checked=" << r.n_checked << "\n";
            } else {
                *os << j.dump() << "\n";
            }
            if (r.eigen_ok) {
                ++passing;
                if (!r.vanishing_ok) sound = false;
            }
        }
        std::cerr << reports.size() << " primes scanned, " << passing << " passing";
        if (passing == 0) std::cerr << " (none found <= " << sc_pmax << "; consistent with a thin positive-density set)";
        std::cerr << "\n";
        return sound ? 0 : 2;
    }
    if (pc_cmd->parsed()) {
        auto chk = ramanujan_check(pc_ell, pc_nmax);
        json j{{"ell", pc_ell}, {"checked", chk.checked}, {"violations", chk.violations}};
        emit(j, summary, std::to_string(chk.checked) + " arguments checked, " + std::to_string(chk.violations.size()) +
                             " violations");
        return chk.violations.empty() ? 0 : 2;
    }
    if (at_cmd->parsed()) {
        auto triples = atkin_search(at_ell, at_qmax, at_nmax);
        if (summary) {
            for (auto& t : triples)
                std::cout << "Q=" << t.Q << " beta=" << t.beta << " eps=" << (t.epsilon > 0 ? "+1" : "-1")
                          << " instances=" << t.instances << "\n";
        } else {
            for (auto& t : triples) {
                json j{{"Q", t.Q}, {"beta", t.beta}, {"epsilon", t.epsilon}, {"instances", t.instances}};
                std::cout << j.dump() << "\n";
            }
        }
        std::cerr << triples.size() << " candidate triples with zero violations\n";
        return 0;
    }
    if (sl_cmd->parsed()) {
        MatFl gamma(static_cast<uint32_t>(sl_ell), sl_gamma[0], sl_gamma[1], sl_gamma[2], sl_gamma[3]);
        if (gamma.det() != 1) fail(errc::invalid_argument, "gamma must lie in SL_2");
        // deterministic twisted components from the seed
        std::mt19937_64 rng(seed);
        auto random_gl = [&]() {
            for (;;) {
                int64_t a = static_cast<int64_t>(rng() % sl_ell), b = static_cast<int64_t>(rng() % sl_ell);
                int64_t c = static_cast<int64_t>(rng() % sl_ell), d = static_cast<int64_t>(rng() % sl_ell);
                if (imod(a * d - b * c, static_cast<int64_t>(sl_ell)) != 0)
                    return MatFl(static_cast<uint32_t>(sl_ell), a, b, c, d);
            }
        };
        std::vector<std::vector<MatFl>> comps;
        for (uint32_t i = 0; i < sl_s; ++i) {
            MatFl C = random_gl();
            std::vector<MatFl> gens;
            for (auto m : {MatFl(static_cast<uint32_t>(sl_ell), 1, 1, 0, 1),
                           MatFl(static_cast<uint32_t>(sl_ell), 0, -1, 1, 0)})
                gens.push_back(C * m * C.inverse());
            comps.push_back(gens);
        }
        json j{{"ell", sl_ell}, {"s", sl_s}, {"gamma", sl_gamma}};
        if (sl_exhaustive || sl_ell <= 7) {
            RepTuple reps = RepTuple::make(static_cast<uint32_t>(sl_ell), comps, {1});
            auto w = find_sigma(reps, gamma);
            if (!w) fail(errc::not_found, "no witness found under verified hypotheses");
            json wit = json::array();
            for (auto& x : *w) wit.push_back({x.e[0], x.e[1], x.e[2], x.e[3]});
            j["witness"] = wit;
            j["mode"] = "exhaustive";
            j["square_class_verified"] = true;
        } else {
            auto w = find_sigma_randomized(static_cast<uint32_t>(sl_ell), comps, gamma, seed, sl_steps);
            if (!w.witness) {
                json err{{"error", "NotFound"}, {"steps", w.steps}};
                std::cerr << err.dump() << "\n";
                return 2;
            }
            json wit = json::array();
            for (auto& x : *w.witness) wit.push_back({x.e[0], x.e[1], x.e[2], x.e[3]});
            j["witness"] = wit;
            j["mode"] = "randomized";
            j["steps"] = w.steps;
            j["square_class_verified"] = true;
        }
        emit(j, summary, "witness found; every component conjugate to +-gamma and squares into cl(gamma^2)");
        return 0;
    }
    if (st_cmd->parsed()) {
        auto results = acceptance::run_all(
            [](const acceptance::CriterionResult& r) {
                std::printf("[%s] criterion %2d: %s (%.2fs)\n    %s\n", r.pass ? "PASS" : "FAIL", r.id,
                            r.name.c_str(), r.seconds, r.detail.c_str());
                std::fflush(stdout);
            },
            st_only);
        return acceptance::all_passed(results) ? 0 : 2;
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        json j{{"error", errc_name(e.code())}, {"message", e.what()}};
        std::cerr << j.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json j{{"error", "Unhandled"}, {"message", e.what()}};
        std::cerr << j.dump() << "\n";
        return 1;
    }
}
