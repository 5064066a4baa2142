#include "etaq/shimura.hpp"

#include "etaq/arith.hpp"
#include "etaq/errors.hpp"

namespace etaq {

IntegerSeries shimura_lift(const LiftRequest& req) {
    const GradedSeries& F = req.F;
    const CoeffRing& ring = F.ring();
    if (req.t == 0 || !is_squarefree(req.t)) fail(errc::non_squarefree_t, "t must be positive and squarefree");
    if (req.prec_out < 1) fail(errc::invalid_argument, "lift needs prec_out >= 1");
    if (req.ctx.lambda == 1 && !req.s_c_attested)
        fail(errc::attestation_required,
             "lambda = 1 lifts require the caller to attest the theta-orthogonality hypothesis");
    int64_t need = static_cast<int64_t>(req.t) * req.prec_out * req.prec_out;
    if (F.prec() < need)
        fail(errc::insufficient_precision, "lift to " + std::to_string(req.prec_out) + " needs input precision " +
                                               std::to_string(need) + ", have " + std::to_string(F.prec()));
    IntegerSeries out(ring, req.prec_out);
    for (int64_t n = 1; n <= req.prec_out; ++n) {
        RingElement b = ring.zero();
        for (int64_t d = 1; d <= n; ++d) {
            if (n % d) continue;
            int kr12 = kronecker(12, n / d);
            if (kr12 == 0) continue;
            int krt = kronecker(d, static_cast<long long>(req.t));
            if (krt == 0) continue;
            if (!req.ctx.psi.eval_exponent(d)) continue; // psi(d) = 0
            RingElement term = req.ctx.psi.eval(ring, d);
            term = ring.mul(term, ring.pow(ring.from_int(static_cast<long>(d)), req.ctx.lambda - 1));
            term = ring.mul(term, F.at(static_cast<int64_t>(req.t) * (n / d) * (n / d)));
            if (kr12 * krt == -1) term = ring.neg(term);
            b = ring.add(b, term);
        }
        out.set(n, b);
    }
    return out;
}

EquivarianceReport compare_integer_series(const IntegerSeries& a, const IntegerSeries& b) {
    EquivarianceReport rep{true, 0, 0};
    int64_t hi = std::min(a.prec(), b.prec());
    for (int64_t n = 1; n <= hi; ++n) {
        ++rep.checked;
        if (!(a.at(n) == b.at(n))) {
            rep.equal = false;
            rep.first_mismatch = n;
            return rep;
        }
    }
    return rep;
}

EquivarianceReport check_equivariance(const GradedSeries& F, const FormContext& ctx, uint64_t t, uint64_t p,
                                      int64_t prec, bool s_c_attested) {
    // left: S_t(F | T_{p^2}) to prec
    GradedSeries FT = t_p2_half(F, p, ctx);
    IntegerSeries lhs = shimura_lift({FT, ctx, t, prec, s_c_attested});
    // right: chi^(r)(p) S_t(F) | T_p with weight 2 lambda and character psi^2
    int64_t rhs_in_prec = prec * static_cast<int64_t>(p);
    IntegerSeries SF = shimura_lift({F, ctx, t, rhs_in_prec, s_c_attested});
    IntegerSeries rhs = t_p_integer(SF, p, ctx.k(), ctx.psi.squared());
    int chi = chi_r(ctx.r, static_cast<int64_t>(p));
    if (chi == -1) {
        const CoeffRing& ring = F.ring();
        IntegerSeries neg(ring, rhs.prec());
        for (int64_t n = 1; n <= rhs.prec(); ++n) neg.set(n, ring.neg(rhs.at(n)));
        rhs = neg;
    } else if (chi == 0) {
        fail(errc::invalid_argument, "chi^(r)(p) = 0 is impossible for p >= 5");
    }
    return compare_integer_series(lhs, rhs);
}

std::optional<std::pair<uint64_t, int64_t>> nonvanishing_witness(const GradedSeries& F, const FormContext& ctx,
                                                                 uint64_t t_max, int64_t prec, bool s_c_attested) {
    if (F.ring().is_exact()) fail(errc::ring_mismatch, "nonvanishing_witness expects a residue-ring series");
    for (uint64_t t = 1; t <= t_max; ++t) {
        if (!is_squarefree(t)) continue;
        // shrink the horizon to what the input precision supports
        int64_t n_max = prec;
        while (n_max > 0 && static_cast<int64_t>(t) * n_max * n_max > F.prec()) --n_max;
        if (n_max < 1) continue;
        IntegerSeries lift = shimura_lift({F, ctx, t, n_max, s_c_attested});
        for (int64_t n = 1; n <= n_max; ++n)
            if (lift.at_mod(n) != 0) return std::make_pair(t, n);
    }
    return std::nullopt;
}

} // namespace etaq
